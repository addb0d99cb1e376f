#include "sl3f7/serialize.hpp"

#include <sstream>

namespace sl3f7 {

using nlohmann::json;

json make_document(const std::string& kind, json payload) {
  json doc = {{"schema", kSchemaTag}, {"kind", kind}};
  for (auto& [key, value] : payload.items()) doc[key] = std::move(value);
  return doc;
}

json to_json(const ClassLabel& l) { return json::array({l.i.value(), l.j.value()}); }

json to_json(const ScanSummary& s) {
  json by_trace = json::array();
  for (int t = 0; t < kPrime; ++t) {
    by_trace.push_back({{"trace", t},
                        {"count", s.by_trace[static_cast<std::size_t>(t)]},
                        {"all", s.all_by_trace[static_cast<std::size_t>(t)]}});
  }
  json by_label = json::array();
  for (const auto& [l, n] : s.by_label) by_label.push_back({{"label", to_json(l)}, {"count", n}});
  return {{"group_order", s.group_order},
          {"eigenfree_total", s.eigenfree_total},
          {"by_trace", by_trace},
          {"by_label", by_label}};
}

json to_json(const CentralizerReport& r) {
  json out = {{"subject", format_matrix(r.subject)}, {"size", r.size}, {"is_cyclic", r.is_cyclic}};
  out["generator"] = r.generator ? json(format_matrix(*r.generator)) : json(nullptr);
  if (r.size <= CentralizerReport::kListLimit) {
    json elems = json::array();
    for (MatCode c : r.elements) elems.push_back(c.value);
    out["elements"] = elems;
  }
  return out;
}

json to_json(const std::vector<PowerTableRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = {{"k", row.k}, {"matrix", format_matrix(row.power)}, {"trace", row.trace.value()}};
    r["label"] = row.label ? to_json(*row.label) : json(nullptr);
    if (!row.note.empty()) r["note"] = row.note;
    out.push_back(r);
  }
  return out;
}

json to_json(const SimConjVerdict& v) {
  json out = {{"equivalent", v.equivalent}};
  if (v.witness) out["witness"] = format_matrix(*v.witness);
  if (v.certificate) out["certificate"] = *v.certificate;
  return out;
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"side", s.side == Side::Left ? "left" : "right"}, {"factor", format_matrix(s.factor)}});
  }
  return {{"start", format_matrix(t.start)}, {"target", format_matrix(t.target)}, {"steps", steps}};
}

std::string trace_csv(const ScanSummary& s) {
  std::ostringstream os;
  os << "trace,count\n";
  for (int t = 0; t < kPrime; ++t) os << t << ',' << s.by_trace[static_cast<std::size_t>(t)] << '\n';
  return os.str();
}

std::string label_csv(const ScanSummary& s) {
  std::ostringstream os;
  os << "i,j,count\n";
  for (const auto& [l, n] : s.by_label) os << l.i.value() << ',' << l.j.value() << ',' << n << '\n';
  return os.str();
}

std::string row_label_text(const PowerTableRow& row) { return row.label ? to_string(*row.label) : row.note; }

std::string power_table_csv(const std::vector<PowerTableRow>& rows, bool signed_entries) {
  std::ostringstream os;
  os << "k,matrix,trace,label\n";
  for (const auto& row : rows) {
    os << row.k << ",\"" << format_matrix(row.power, signed_entries) << "\"," << row.trace.value() << ",\""
       << row_label_text(row) << "\"\n";
  }
  return os.str();
}

}  // namespace sl3f7

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl3f7/classify.hpp"
#include "sl3f7/error.hpp"
#include "sl3f7/scan.hpp"
#include "sl3f7/serialize.hpp"
#include "sl3f7/simconj.hpp"
#include "sl3f7/subgroups.hpp"
#include "sl3f7/verify.hpp"

using namespace sl3f7;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kSemantic = 4 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::LengthMismatch:
    case ErrorKind::CodeOutOfRange:
      return kUsage;
    case ErrorKind::NotCommuting:
    case ErrorKind::EmptyAfterScalarStrip:
      return kSemantic;
    default:
      return kDomain;
  }
}

struct Globals {
  std::string format = "table";
  unsigned threads = 1;
  bool signed_entries = false;
};

unsigned default_threads() {
  if (const char* env = std::getenv("SL3F7_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

ScanOptions scan_options(const Globals& g) {
  ScanOptions o;
  o.threads = std::max(1u, g.threads);
  if (isatty(STDERR_FILENO)) {
    o.progress = [](std::size_t done, std::size_t total) {
      std::fprintf(stderr, "\r%zu/%zu", done, total);
      if (done == total) std::fprintf(stderr, "\r\033[K");
      std::fflush(stderr);
    };
  }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// One matrix per non-empty line; '#' starts a comment.
std::vector<Mat3> read_tuple(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<Mat3> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_matrix(line));
  }
  return out;
}

struct MatrixInput {
  std::string text;
  std::string file;

  void attach(CLI::App* sub) {
    sub->add_option("matrix", text, "matrix such as \"0 1 3; 0 0 1; 1 0 0\"");
    sub->add_option("--file", file, "read the matrix from a file");
  }
  Mat3 get() const {
    if (!file.empty()) return parse_matrix(slurp(file));
    if (text.empty()) throw Error(ErrorKind::Parse, "no matrix given");
    return parse_matrix(text);
  }
};

void emit(const Globals& g, const std::string& kind, const json& payload, const std::string& table,
          const std::string& csv = {}) {
  if (g.format == "json") {
    std::cout << make_document(kind, payload).dump(2) << '\n';
  } else if (g.format == "csv") {
    std::cout << (csv.empty() ? table : csv);
  } else {
    std::cout << table;
  }
}

std::string fmt(const Globals& g, const Mat3& m) { return format_matrix(m, g.signed_entries); }

json label_or_null(const std::optional<ClassLabel>& l) { return l ? to_json(*l) : json(nullptr); }

int cmd_classify(const Globals& g, const Mat3& m) {
  const CharPoly cp = char_poly(m);
  if (cp.det != Fp(1)) throw Error(ErrorKind::NotInSL3, "determinant is " + std::to_string(cp.det.value()));
  const bool eigenfree = !cp.has_fp_root();
  std::optional<ClassLabel> label, psl;
  if (eigenfree) {
    label = class_label(m);
    psl = psl_label(*label);
  }
  const std::uint64_t order = mat_order(m);
  std::ostringstream poly;
  poly << "x^3 - " << cp.trace.value() << "x^2 + " << cp.minors.value() << "x - " << cp.det.value();

  std::ostringstream t;
  t << "matrix     " << fmt(g, m) << '\n'
    << "det        " << cp.det.value() << '\n'
    << "trace      " << cp.trace.value() << '\n'
    << "char poly  " << poly.str() << '\n'
    << "eigenfree  " << (eigenfree ? "yes" : "no") << '\n'
    << "label      " << (label ? to_string(*label) : "-") << '\n'
    << "order      " << order << '\n'
    << "psl label  " << (psl ? to_string(*psl) : "-") << '\n';
  std::ostringstream c;
  c << "matrix,det,trace,minors,eigenfree,label,order,psl_label\n"
    << '"' << fmt(g, m) << "\"," << cp.det.value() << ',' << cp.trace.value() << ',' << cp.minors.value() << ','
    << (eigenfree ? "yes" : "no") << ",\"" << (label ? to_string(*label) : "") << "\"," << order << ",\""
    << (psl ? to_string(*psl) : "") << "\"\n";
  const json j = {{"matrix", fmt(g, m)},
                  {"det", cp.det.value()},
                  {"trace", cp.trace.value()},
                  {"char_poly", {{"trace", cp.trace.value()}, {"minors", cp.minors.value()}, {"det", cp.det.value()}}},
                  {"eigenfree", eigenfree},
                  {"label", label_or_null(label)},
                  {"order", order},
                  {"psl_label", label_or_null(psl)}};
  emit(g, "classify", j, t.str(), c.str());
  return kOk;
}

int cmd_power_table(const Globals& g, const Mat3& m, int limit) {
  const auto rows = power_table(m, limit);
  std::ostringstream t;
  for (const auto& row : rows) {
    t << std::setw(3) << row.k << "  " << std::left << std::setw(30) << fmt(g, row.power) << std::right << "  "
      << row.trace.value() << "  " << row_label_text(row) << '\n';
  }
  json j = to_json(rows);
  for (std::size_t k = 0; k < rows.size(); ++k) j[k]["matrix"] = fmt(g, rows[k].power);
  emit(g, "power-table", {{"matrix", fmt(g, m)}, {"limit", limit}, {"rows", j}}, t.str(),
       power_table_csv(rows, g.signed_entries));
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite_name) {
  const Suite suite = suite_name == "full" ? Suite::Full : Suite::Quick;
  const bool text = g.format != "json";
  const auto results = run_acceptance(suite, scan_options(g), [&](const CriterionResult& r) {
    if (text) std::cout << format_result(r) << std::endl;
    std::cerr << "criterion " << r.id << ": " << r.elapsed_seconds << " s\n";
  });
  std::size_t passed = 0;
  json list = json::array();
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (text) {
    std::cout << passed << " of " << results.size() << " criteria passed\n";
  } else {
    std::cout << make_document("verify", {{"suite", suite_name},
                                          {"criteria", list},
                                          {"passed", passed},
                                          {"total", results.size()}})
                     .dump(2)
              << '\n';
  }
  return passed == results.size() ? kOk : kVerifyFailed;
}

int cmd_simconj(const Globals& g, const std::string& f1, const std::string& f2) {
  const auto m1 = read_tuple(f1);
  const auto m2 = read_tuple(f2);
  if (m1.size() != m2.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "tuple lengths differ: " + std::to_string(m1.size()) + " vs " + std::to_string(m2.size()));
  }
  const auto a1 = analyze_tuple(m1);
  const auto a2 = analyze_tuple(m2);
  for (const auto* a : {&a1, &a2}) {
    if (const auto* r = std::get_if<Rejected>(a)) throw Error(ErrorKind::NotEigenfree, r->diagnostics);
  }
  SimConjVerdict v;
  const auto* t1 = std::get_if<CommutingTuple>(&a1);
  const auto* t2 = std::get_if<CommutingTuple>(&a2);
  if (t1 && t2) {
    v = decide_simconj(*t1, *t2, scan_options(g));
  } else if (t1 || t2) {
    v.certificate = "one tuple is eigenvector-free, the other has eigenvectors";
  } else {
    throw Error(ErrorKind::NotEigenfree, "no eigenvector-free members in either tuple");
  }
  std::cout << make_document("simconj", to_json(v)).dump(2) << '\n';
  return kOk;
}

int cmd_census(const Globals& g, const std::string& by) {
  const ScanSummary s = census(scan_options(g));
  std::ostringstream t;
  t << "group order      " << s.group_order << '\n' << "eigenvector-free " << s.eigenfree_total << '\n';
  for (int k = 0; k < kPrime; ++k) t << "  trace " << k << "  " << s.by_trace[static_cast<std::size_t>(k)] << '\n';
  for (const auto& [l, n] : s.by_label) t << "  " << to_string(l) << "  " << n << '\n';
  emit(g, "census", to_json(s), t.str(), by == "label" ? label_csv(s) : trace_csv(s));
  return kOk;
}

int cmd_centralizer(const Globals& g, const Mat3& m) {
  const auto r = centralizer(m, scan_options(g));
  std::ostringstream t;
  t << "size       " << r.size << '\n'
    << "cyclic     " << (r.is_cyclic ? "yes" : "no") << '\n'
    << "generator  " << (r.generator ? fmt(g, *r.generator) : "-") << '\n';
  std::ostringstream c;
  c << "code,matrix\n";
  for (MatCode code : r.elements) c << code.value << ",\"" << fmt(g, decode(code)) << "\"\n";
  emit(g, "centralizer", to_json(r), t.str(), c.str());
  return kOk;
}

int cmd_class_size(const Globals& g, const Mat3& m) {
  const std::uint64_t n = class_size(m, scan_options(g));
  emit(g, "class-size", {{"matrix", fmt(g, m)}, {"class_size", n}}, std::to_string(n) + '\n',
       "matrix,class_size\n\"" + fmt(g, m) + "\"," + std::to_string(n) + '\n');
  return kOk;
}

int cmd_sylow(const Globals& g) {
  const auto o = scan_options(g);
  const std::uint64_t elements = order19_element_count(o);
  const std::uint64_t n = sylow19_count(o);
  std::ostringstream t;
  t << "order-19 elements  " << elements << '\n' << "n19                " << n << '\n';
  emit(g, "sylow", {{"order19_elements", elements}, {"n19", n}}, t.str(),
       "order19_elements,n19\n" + std::to_string(elements) + ',' + std::to_string(n) + '\n');
  return kOk;
}

int cmd_normalizer(const Globals& g, const Mat3& m) {
  const std::uint64_t n = normalizer_of_cyclic(m, scan_options(g));
  emit(g, "normalizer", {{"matrix", fmt(g, m)}, {"size", n}}, std::to_string(n) + '\n',
       "matrix,size\n\"" + fmt(g, m) + "\"," + std::to_string(n) + '\n');
  return kOk;
}

int cmd_parabolic(const Globals& g) {
  const std::uint64_t h = parabolic_size();
  const std::uint64_t closure = generator_closure(parabolic_generators());
  std::ostringstream t;
  t << "size     " << h << '\n' << "index    " << kSL3Order / h << '\n' << "closure  " << closure << '\n';
  emit(g, "parabolic", {{"size", h}, {"index", kSL3Order / h}, {"generator_closure", closure}}, t.str(),
       "size,index,generator_closure\n" + std::to_string(h) + ',' + std::to_string(kSL3Order / h) + ',' +
           std::to_string(closure) + '\n');
  return kOk;
}

int cmd_closure(const Globals& g, const std::string& preset, const std::vector<std::string>& extra) {
  GeneratorSet gens;
  if (preset == "xyz") gens = default_generators();
  if (preset == "parabolic") gens = parabolic_generators();
  for (const auto& e : extra) gens.gens.push_back(parse_matrix(e));
  const std::uint64_t n = generator_closure(gens);
  json list = json::array();
  for (const auto& m : gens.gens) list.push_back(fmt(g, m));
  emit(g, "closure", {{"generators", list}, {"size", n}}, std::to_string(n) + '\n',
       "size\n" + std::to_string(n) + '\n');
  return kOk;
}

int cmd_reduce(const Globals& g, const Mat3& m, const std::string& target) {
  const auto tr = reduce_to_generator(m, target == "Z" ? ReductionTarget::Z : ReductionTarget::Y);
  std::vector<std::string> left, right;
  for (std::size_t k = 0; k < tr.steps.size(); ++k) {
    (tr.steps[k].side == Side::Left ? left : right).push_back("S" + std::to_string(k + 1));
  }
  std::ostringstream t;
  t << target << " = ";
  for (auto it = left.rbegin(); it != left.rend(); ++it) t << *it << " . ";
  t << "A";
  for (const auto& r : right) t << " . " << r;
  t << '\n' << "A  = " << fmt(g, tr.start) << '\n';
  std::ostringstream c;
  c << "step,side,factor\n";
  for (std::size_t k = 0; k < tr.steps.size(); ++k) {
    const auto& s = tr.steps[k];
    t << 'S' << k + 1 << (k + 1 < 10 ? " " : "") << " = " << fmt(g, s.factor) << "   ("
      << (s.side == Side::Left ? "left" : "right") << ")\n";
    c << k + 1 << ',' << (s.side == Side::Left ? "left" : "right") << ",\"" << fmt(g, s.factor) << "\"\n";
  }
  t << target << "  = " << fmt(g, tr.target) << '\n' << "verified " << (tr.verify() ? "yes" : "no") << '\n';
  emit(g, "reduce", to_json(tr), t.str(), c.str());
  return tr.verify() ? kOk : kVerifyFailed;
}

int cmd_commuting_reps(const Globals& g) {
  const auto reps = eighteen_commuting_reps();
  std::ostringstream t, c;
  c << "i,j,exponent,matrix\n";
  json list = json::array();
  for (const auto& [l, m] : reps.reps) {
    const int e = reps.exponent.at(l);
    t << to_string(l) << "  M0^" << std::left << std::setw(3) << e << std::right << fmt(g, m) << '\n';
    c << l.i.value() << ',' << l.j.value() << ',' << e << ",\"" << fmt(g, m) << "\"\n";
    json powers = reps.powers_by_label.at(l);
    list.push_back({{"label", to_json(l)}, {"exponent", e}, {"matrix", fmt(g, m)}, {"powers", powers}});
  }
  emit(g, "commuting-reps", {{"base", fmt(g, known::rep_04())}, {"reps", list}}, t.str(), c.str());
  return kOk;
}

int cmd_labels(const Globals& g) {
  const auto& cat = catalog();
  std::ostringstream t, c;
  c << "i,j,order,psl_i,psl_j,representative\n";
  json list = json::array();
  for (const auto& l : cat.labels) {
    const ClassLabel p = psl_label(l);
    const Mat3 rep = representative(l);
    t << to_string(l) << "  order " << std::setw(2) << order_of_label(l) << "  psl " << to_string(p) << "  "
      << fmt(g, rep) << '\n';
    c << l.i.value() << ',' << l.j.value() << ',' << order_of_label(l) << ',' << p.i.value() << ',' << p.j.value()
      << ",\"" << fmt(g, rep) << "\"\n";
    list.push_back(
        {{"label", to_json(l)}, {"order", order_of_label(l)}, {"psl_label", to_json(p)}, {"representative", fmt(g, rep)}});
  }
  emit(g, "labels", {{"labels", list}}, t.str(), c.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvector-free conjugacy classes of SL3(F7)"};
  app.require_subcommand(1);
  Globals g;
  g.threads = default_threads();
  app.add_option("--format", g.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "scan threads (default $SL3F7_THREADS or 1)")
      ->check(CLI::Range(1u, 1024u));
  app.add_flag("--signed", g.signed_entries, "print entries in -3..3");
  app.fallthrough();

  MatrixInput classify_in, table_in, cent_in, size_in, norm_in, reduce_in;
  int limit = 20;
  std::string suite = "quick", file1, file2, census_by = "trace", preset = "xyz", target = "Y";
  std::vector<std::string> extra_gens;

  auto* classify = app.add_subcommand("classify", "label, order and PSL label of a matrix");
  classify_in.attach(classify);
  auto* table = app.add_subcommand("power-table", "powers with traces and class labels");
  table_in.attach(table);
  table->add_option("--limit", limit, "number of powers")->check(CLI::Range(1, 120))->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  auto* simconj = app.add_subcommand("simconj", "simultaneous conjugacy of two commuting tuples");
  simconj->add_option("file1", file1)->required();
  simconj->add_option("file2", file2)->required();
  auto* census_cmd = app.add_subcommand("census", "eigenvector-free counts by trace and label");
  census_cmd->add_option("--by", census_by, "csv table: trace or label")
      ->check(CLI::IsMember({"trace", "label"}))
      ->capture_default_str();
  auto* cent = app.add_subcommand("centralizer", "centralizer by full scan");
  cent_in.attach(cent);
  auto* size = app.add_subcommand("class-size", "conjugacy class size");
  size_in.attach(size);
  auto* sylow = app.add_subcommand("sylow", "number of Sylow 19-subgroups");
  auto* norm = app.add_subcommand("normalizer", "normalizer of the cyclic group of an order-19 matrix");
  norm_in.attach(norm);
  auto* parabolic = app.add_subcommand("parabolic", "block upper triangular subgroup");
  auto* closure = app.add_subcommand("closure", "size of a generated subgroup");
  closure->add_option("--preset", preset, "xyz, parabolic or none")
      ->check(CLI::IsMember({"xyz", "parabolic", "none"}))
      ->capture_default_str();
  closure->add_option("--gen", extra_gens, "extra generator");
  auto* reduce = app.add_subcommand("reduce", "reduce a matrix outside H to Y or Z by H-multiplications");
  reduce_in.attach(reduce);
  reduce->add_option("--target", target)->check(CLI::IsMember({"Y", "Z"}))->capture_default_str();
  auto* reps = app.add_subcommand("commuting-reps", "one commuting representative per label");
  auto* labels = app.add_subcommand("labels", "the 18 class labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(g, classify_in.get());
    if (*table) return cmd_power_table(g, table_in.get(), limit);
    if (*verify) return cmd_verify(g, suite);
    if (*simconj) return cmd_simconj(g, file1, file2);
    if (*census_cmd) return cmd_census(g, census_by);
    if (*cent) return cmd_centralizer(g, cent_in.get());
    if (*size) return cmd_class_size(g, size_in.get());
    if (*sylow) return cmd_sylow(g);
    if (*norm) return cmd_normalizer(g, norm_in.get());
    if (*parabolic) return cmd_parabolic(g);
    if (*closure) return cmd_closure(g, preset, extra_gens);
    if (*reduce) return cmd_reduce(g, reduce_in.get(), target);
    if (*reps) return cmd_commuting_reps(g);
    if (*labels) return cmd_labels(g);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kUsage;
}

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sl3f7/classify.hpp"
#include "sl3f7/scan.hpp"
#include "sl3f7/simconj.hpp"
#include "sl3f7/subgroups.hpp"

namespace sl3f7 {

inline constexpr const char* kSchemaTag = "sl3f7/v1";

/// {"schema": "sl3f7/v1", "kind": kind} plus the payload fields.
nlohmann::json make_document(const std::string& kind, nlohmann::json payload);

nlohmann::json to_json(const ClassLabel& l);
nlohmann::json to_json(const ScanSummary& s);
nlohmann::json to_json(const CentralizerReport& r);
nlohmann::json to_json(const std::vector<PowerTableRow>& rows);
nlohmann::json to_json(const SimConjVerdict& v);
nlohmann::json to_json(const ReductionTrace& t);

/// trace,count  (eigenvector-free counts)
std::string trace_csv(const ScanSummary& s);
/// i,j,count
std::string label_csv(const ScanSummary& s);
/// k,matrix,trace,label
std::string power_table_csv(const std::vector<PowerTableRow>& rows, bool signed_entries = false);

/// "[i,j]" for labelled rows, the note otherwise.
std::string row_label_text(const PowerTableRow& row);

}  // namespace sl3f7

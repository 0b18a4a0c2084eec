#pragma once

// Rendering and lossless serialization of criterion reports.
//
// Two output styles are supported everywhere: a human transcript and
// line-delimited, schema-versioned JSON records whose bytes are identical
// across runs and thread counts.

#include <json.hpp>
#include <string>

#include "torcrit/criterion.hpp"

namespace torcrit {

inline constexpr const char* kRecordSchemaName = "torcrit.records";
inline constexpr int kRecordSchemaVersion = 1;

nlohmann::json report_to_json(const CriterionReport& report);
CriterionReport report_from_json(const nlohmann::json& j);

// Multi-line human-readable transcript of one criterion run.
std::string render_transcript(const CriterionReport& report);

// One JSON object per line: a schema record, one record per condition,
// and a verdict record.
std::string render_records(const CriterionReport& report);

// The schema header line shared by all record-format outputs.
std::string schema_record_line();

}  // namespace torcrit

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "semitotal/harness.hpp"

namespace semitotal {

inline constexpr int kRecordSchemaVersion = 1;
inline constexpr int kCsvSchemaVersion = 1;
inline constexpr const char* kRecordSchemaName = "semitotal/instance-record";

std::string tool_version();

nlohmann::json to_json(const Finding& f);
Finding finding_from_json(const nlohmann::json& j);

/// Timing lives under "timing_us"; pass include_timing=false for the
/// comparison form used by determinism checks.
nlohmann::json to_json(const InstanceRecord& rec, bool include_timing = true);
InstanceRecord record_from_json(const nlohmann::json& j);

nlohmann::json jsonl_header();

/// Header line then one compact record per line.
void write_jsonl(std::ostream& out, const std::vector<InstanceRecord>& records, bool include_timing = true);
/// Validates the header's schema name and version. Throws InputError.
std::vector<InstanceRecord> read_jsonl(std::istream& in);

const std::vector<std::string>& csv_columns();
void write_csv(std::ostream& out, const std::vector<InstanceRecord>& records);

using CsvRow = std::map<std::string, std::string>;
/// RFC-4180 reader keyed by the header row. Throws InputError on malformed quoting.
std::vector<CsvRow> read_csv(std::istream& in);

/// Aligned text table of a CSV summary plus totals (min ratio, violations, findings).
std::string render_report(const std::vector<CsvRow>& rows);

std::string format_summary(const ScanSummary& summary);

}  // namespace semitotal

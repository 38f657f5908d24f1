#pragma once

// Record serialisation: JSON lines, CSV and TSV.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "burgess/expsums.hpp"
#include "burgess/lscan.hpp"
#include "burgess/reductions.hpp"

namespace burgess {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Tsv };

OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format);

Json complex_json(cplx z);  // [re, im]

Json params_json(const IdentityCase& k);
Json to_json(const VerificationReport& rep);
Json to_json(const CentralValueRecord& rec);
Json to_json(const WeilScanSummary& s);
Json to_json(const OffdiagTailReport& rep);
Json to_json(const BurgessScanReport& rep);
Json to_json(const LinearFit& fit);

/// Nested objects become dotted keys; arrays become key.0, key.1, ...
Json flatten(const Json& record);

/// Writes flat records: one JSON object per line, or a CSV / TSV table whose
/// columns are the union of keys in first-seen order.
void write_records(std::ostream& out, const std::vector<Json>& records, OutputFormat format);

/// Scan output: nested JSON document, CSV with one row per (M, chi, N), or a
/// two-column (log M, log statistic) TSV with one block per statistic.
void write_burgess_report(std::ostream& out, const BurgessScanReport& rep, OutputFormat format);

}  // namespace burgess

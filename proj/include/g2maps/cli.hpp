#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2maps/smoothability.hpp"
#include "g2maps/strata.hpp"

namespace g2maps::cli {

using nlohmann::json;

/// Exit-code contract of the command-line tool.
enum ExitCode : int { Ok = 0, VerificationFailure = 1, UsageError = 2, NotSmoothable = 3, ReducesTo = 4 };

inline constexpr const char* kInstanceSchemaId = "g2maps.instance.v1";

/// Builds an instance from a JSON document and runs validate_instance.
/// ValidationError carries a JSON pointer into the document.
SmoothabilityInstance parse_instance(const json& doc);
/// Inverse of parse_instance up to formatting: parse_instance(instance_to_json(i)) == i.
json instance_to_json(const SmoothabilityInstance& inst);

json verdict_to_json(const SmoothabilityInstance& inst, const Verdict& v);
/// Plain-text report; ANSI colors only when `color` is set.
std::string format_verdict(const SmoothabilityInstance& inst, const Verdict& v, bool color);
ExitCode exit_code_for(const Verdict& v);

struct FamilyRow {
    ComponentFamily family;
    int dim;
    friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};
std::vector<FamilyRow> family_rows(int r, int d);
json family_rows_to_json(const std::vector<FamilyRow>& rows);
std::vector<FamilyRow> family_rows_from_json(const json& j);
std::string family_rows_to_tsv(const std::vector<FamilyRow>& rows);

json catalog_to_json(const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> catalog_from_json(const json& j);
std::string catalog_to_tsv(const std::vector<CatalogRecord>& records);

json strata_to_json(const std::vector<StratumRecord>& rows);
std::vector<StratumRecord> strata_from_json(const json& j);
std::string strata_to_tsv(const std::vector<StratumRecord>& rows);
/// "key=value" with key reducibility, config or dim; rows matching the filter.
std::vector<StratumRecord> filter_strata(const std::string& filter);

/// Runs the tool on argv; never throws. Output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g2maps::cli

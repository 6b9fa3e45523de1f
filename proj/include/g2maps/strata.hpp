#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "g2maps/singularities.hpp"

namespace g2maps {

enum class Reducibility { Irreducible, CubicLine, TwoConics, ConicTwoLines, FourLines, NonReduced };

/// "irreducible", "cubic+line", "two-conics", "conic+two-lines", "four-lines", "non-reduced".
std::string to_string(Reducibility r);
/// Inverse of to_string; DomainError on an unknown name.
Reducibility parse_reducibility(const std::string& text);

/// One row of the quartic strata table. Non-reduced rows have no genera, point
/// count or configuration; their note describes the curve.
struct StratumRecord {
    Reducibility reducibility;
    std::vector<unsigned> genera;
    std::optional<unsigned> singular_points;
    std::vector<SingularityType> configuration;  ///< sorted multiset
    int dim;
    std::string note;

    bool flagged() const { return note.rfind("flagged:", 0) == 0; }
    friend bool operator==(const StratumRecord&, const StratumRecord&) = default;
};

/// "A1^2,A3" with equal types merged; "-" for an empty configuration.
std::string format_configuration(const std::vector<SingularityType>& config);
/// Inverse of format_configuration; the result is sorted.
std::vector<SingularityType> parse_configuration(const std::string& text);

/// One TSV line (no trailing newline) in the shipped format.
std::string format_stratum_row(const StratumRecord& r);

/// Reads the tab-separated table, skipping '#' lines. DomainError names the offending line.
std::vector<StratumRecord> load_strata(std::istream& in);

/// The shipped table, loaded once.
const std::vector<StratumRecord>& strata_table();

/// Rows whose configuration equals the query as a multiset.
std::vector<StratumRecord> lookup(std::vector<SingularityType> config,
                                  std::optional<Reducibility> filter = std::nullopt);

/// expected = 14 - sum of Milnor numbers; unsupported for non-ADE or empty configurations.
struct CodimDiagnostic {
    bool supported;
    int expected = 0;
    int actual = 0;
    int deviation = 0;  ///< expected - actual
};

CodimDiagnostic codim_diagnostic(const StratumRecord& r);

}  // namespace g2maps

#include "g2maps/strata.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace g2maps {

namespace detail {
extern const char* const quartic_strata_tsv;
}

namespace {

constexpr std::array<std::pair<Reducibility, const char*>, 6> kNames{{
    {Reducibility::Irreducible, "irreducible"},
    {Reducibility::CubicLine, "cubic+line"},
    {Reducibility::TwoConics, "two-conics"},
    {Reducibility::ConicTwoLines, "conic+two-lines"},
    {Reducibility::FourLines, "four-lines"},
    {Reducibility::NonReduced, "non-reduced"},
}};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

unsigned parse_unsigned(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw DomainError("expected a non-negative integer, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

std::string to_string(Reducibility r) {
    for (const auto& [k, n] : kNames)
        if (k == r) return n;
    return {};
}

Reducibility parse_reducibility(const std::string& text) {
    for (const auto& [k, n] : kNames)
        if (text == n) return k;
    throw DomainError("unknown reducibility '" + text + "'");
}

std::string format_configuration(const std::vector<SingularityType>& config) {
    if (config.empty()) return "-";
    std::vector<SingularityType> sorted = config;
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (!out.empty()) out += ",";
        out += sorted[i].to_string();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<SingularityType> parse_configuration(const std::string& text) {
    std::vector<SingularityType> out;
    if (text == "-") return out;
    for (const auto& item : split(text, ',')) {
        const auto caret = item.find('^');
        const SingularityType t = SingularityType::parse(item.substr(0, caret));
        const unsigned n = caret == std::string::npos ? 1 : parse_unsigned(item.substr(caret + 1));
        if (n == 0) throw DomainError("zero multiplicity in '" + item + "'");
        out.insert(out.end(), n, t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_stratum_row(const StratumRecord& r) {
    std::string genera;
    for (std::size_t i = 0; i < r.genera.size(); ++i) genera += (i ? "+" : "") + std::to_string(r.genera[i]);
    if (genera.empty()) genera = "-";
    return to_string(r.reducibility) + "\t" + genera + "\t" +
           (r.singular_points ? std::to_string(*r.singular_points) : "-") + "\t" +
           format_configuration(r.configuration) + "\t" + std::to_string(r.dim) + "\t" +
           (r.note.empty() ? "-" : r.note);
}

std::vector<StratumRecord> load_strata(std::istream& in) {
    std::vector<StratumRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
            const auto f = split(line, '\t');
            if (f.size() != 6) throw DomainError("expected 6 fields, got " + std::to_string(f.size()));
            StratumRecord r{parse_reducibility(f[0]), {}, std::nullopt, parse_configuration(f[3]),
                            static_cast<int>(parse_unsigned(f[4])), f[5] == "-" ? "" : f[5]};
            if (f[1] != "-")
                for (const auto& g : split(f[1], '+')) r.genera.push_back(parse_unsigned(g));
            if (f[2] != "-") r.singular_points = parse_unsigned(f[2]);
            if (r.dim > 14) throw DomainError("stratum dimension exceeds 14");
            if (r.reducibility != Reducibility::NonReduced && r.configuration.empty())
                throw DomainError("singular stratum without a configuration");
            out.push_back(std::move(r));
        } catch (const Error& e) {
            throw DomainError("strata table line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

const std::vector<StratumRecord>& strata_table() {
    static const std::vector<StratumRecord> table = [] {
        std::istringstream in(detail::quartic_strata_tsv);
        return load_strata(in);
    }();
    return table;
}

std::vector<StratumRecord> lookup(std::vector<SingularityType> config, std::optional<Reducibility> filter) {
    std::sort(config.begin(), config.end());
    std::vector<StratumRecord> out;
    for (const auto& r : strata_table())
        if (r.configuration == config && (!filter || r.reducibility == *filter)) out.push_back(r);
    return out;
}

CodimDiagnostic codim_diagnostic(const StratumRecord& r) {
    if (r.configuration.empty()) return {false};
    int milnor = 0;
    for (const auto& t : r.configuration) {
        if (!t.is_ade()) return {false};
        milnor += static_cast<int>(t.milnor_number());
    }
    return {true, 14 - milnor, r.dim, 14 - milnor - r.dim};
}

}  // namespace g2maps

#include <sstream>

#include "g2maps/cli.hpp"

namespace g2maps::cli {

namespace {

json witness_json(const std::vector<SingularityType>& w) {
    json out = json::array();
    for (const auto& t : w) out.push_back(t.to_string());
    return out;
}

std::vector<SingularityType> witness_from_json(const json& j) {
    std::vector<SingularityType> out;
    for (const auto& t : j) out.push_back(SingularityType::parse(t.get<std::string>()));
    return out;
}

std::string witness_text(const std::vector<SingularityType>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i].to_string();
    return s.empty() ? "-" : s;
}

}  // namespace

json verdict_to_json(const SmoothabilityInstance& inst, const Verdict& v) {
    json trace = json::array();
    for (const auto& t : v.trace)
        trace.push_back({{"disjunct", t.disjunct}, {"predicate", t.predicate}, {"value", t.value}, {"detail", t.detail}});
    return {{"family", inst.family.to_spec()},
            {"outcome", to_string(v.outcome)},
            {"witness", witness_json(v.witness)},
            {"condition", v.condition},
            {"reduces_to", v.reduces_to ? json(v.reduces_to->to_spec()) : json(nullptr)},
            {"trace", trace}};
}

std::string format_verdict(const SmoothabilityInstance& inst, const Verdict& v, bool color) {
    const bool good = v.outcome == Verdict::Outcome::Smoothable || v.outcome == Verdict::Outcome::ContainedInMain;
    const std::string on = color ? (good ? "\x1b[32m" : "\x1b[31m") : "";
    const std::string off = color ? "\x1b[0m" : "";
    std::ostringstream out;
    out << "family: " << inst.family.to_spec() << "\n";
    out << "outcome: " << on << to_string(v.outcome) << off << "\n";
    out << "witness: " << witness_text(v.witness) << "\n";
    out << "condition: " << v.condition << "\n";
    if (v.reduces_to) out << "reduces to: " << v.reduces_to->to_spec() << "\n";
    out << "trace:\n";
    for (const auto& t : v.trace)
        out << "  " << t.disjunct << "/" << t.predicate << " = " << (t.value ? "true" : "false")
            << (t.detail.empty() ? "" : " (" + t.detail + ")") << "\n";
    return out.str();
}

ExitCode exit_code_for(const Verdict& v) {
    switch (v.outcome) {
        case Verdict::Outcome::Smoothable:
        case Verdict::Outcome::ContainedInMain: return Ok;
        case Verdict::Outcome::NotSmoothable: return NotSmoothable;
        case Verdict::Outcome::ReducesTo: return ReducesTo;
    }
    return UsageError;
}

std::vector<FamilyRow> family_rows(int r, int d) {
    std::vector<FamilyRow> out;
    for (const auto& f : enumerate_families(r, d)) out.push_back({f, dimension(f, r, d)});
    return out;
}

json family_rows_to_json(const std::vector<FamilyRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) out.push_back({{"family", row.family.to_spec()}, {"dim", row.dim}});
    return out;
}

std::vector<FamilyRow> family_rows_from_json(const json& j) {
    std::vector<FamilyRow> out;
    for (const auto& row : j) out.push_back({parse_family_spec(row.at("family").get<std::string>()), row.at("dim").get<int>()});
    return out;
}

std::string family_rows_to_tsv(const std::vector<FamilyRow>& rows) {
    std::string out = "family\tdim\n";
    for (const auto& row : rows) out += row.family.to_spec() + "\t" + std::to_string(row.dim) + "\n";
    return out;
}

json catalog_to_json(const std::vector<CatalogRecord>& records) {
    json out = json::array();
    for (const auto& r : records) {
        json comps = json::array();
        for (const auto& c : r.components)
            comps.push_back({{"description", c.description}, {"dim", c.dim}, {"witness", witness_json(c.witness)}});
        out.push_back({{"family", r.family.to_spec()},
                       {"family_dim", r.family_dim},
                       {"contained", r.contained},
                       {"reduces_to", r.reduces_to ? json(r.reduces_to->to_spec()) : json(nullptr)},
                       {"components", comps}});
    }
    return out;
}

std::vector<CatalogRecord> catalog_from_json(const json& j) {
    std::vector<CatalogRecord> out;
    for (const auto& r : j) {
        CatalogRecord rec{parse_family_spec(r.at("family").get<std::string>()), r.at("family_dim").get<int>(), {},
                          r.at("contained").get<bool>(), std::nullopt};
        if (!r.at("reduces_to").is_null()) rec.reduces_to = parse_family_spec(r.at("reduces_to").get<std::string>());
        for (const auto& c : r.at("components"))
            rec.components.push_back(
                {c.at("description").get<std::string>(), c.at("dim").get<int>(), witness_from_json(c.at("witness"))});
        out.push_back(std::move(rec));
    }
    return out;
}

std::string catalog_to_tsv(const std::vector<CatalogRecord>& records) {
    std::string out = "family\tfamily_dim\tintersection\tdim\twitness\n";
    for (const auto& r : records) {
        const std::string head = r.family.to_spec() + "\t" + std::to_string(r.family_dim) + "\t";
        if (r.contained) out += head + "contained in main\t" + std::to_string(r.family_dim) + "\t-\n";
        if (r.reduces_to) out += head + "reduces to " + r.reduces_to->to_spec() + "\t-\t-\n";
        for (const auto& c : r.components)
            out += head + c.description + "\t" + std::to_string(c.dim) + "\t" + witness_text(c.witness) + "\n";
    }
    return out;
}

json strata_to_json(const std::vector<StratumRecord>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json config = json::array();
        for (const auto& t : r.configuration) config.push_back(t.to_string());
        out.push_back({{"reducibility", to_string(r.reducibility)},
                       {"genera", r.genera},
                       {"singular_points", r.singular_points ? json(*r.singular_points) : json(nullptr)},
                       {"configuration", config},
                       {"dim", r.dim},
                       {"note", r.note}});
    }
    return out;
}

std::vector<StratumRecord> strata_from_json(const json& j) {
    std::vector<StratumRecord> out;
    for (const auto& r : j) {
        StratumRecord rec{parse_reducibility(r.at("reducibility").get<std::string>()),
                          r.at("genera").get<std::vector<unsigned>>(), std::nullopt,
                          witness_from_json(r.at("configuration")), r.at("dim").get<int>(),
                          r.at("note").get<std::string>()};
        if (!r.at("singular_points").is_null()) rec.singular_points = r.at("singular_points").get<unsigned>();
        out.push_back(std::move(rec));
    }
    return out;
}

std::string strata_to_tsv(const std::vector<StratumRecord>& rows) {
    std::string out = "# reducibility\tgenera\tsingular_points\tconfiguration\tdim\tnote\n";
    for (const auto& r : rows) out += format_stratum_row(r) + "\n";
    return out;
}

std::vector<StratumRecord> filter_strata(const std::string& filter) {
    if (filter.empty()) return strata_table();
    const auto eq = filter.find('=');
    if (eq == std::string::npos) throw DomainError("filter must look like key=value");
    const std::string key = filter.substr(0, eq), value = filter.substr(eq + 1);
    std::vector<StratumRecord> out;
    if (key == "reducibility") {
        const Reducibility r = parse_reducibility(value);
        for (const auto& row : strata_table())
            if (row.reducibility == r) out.push_back(row);
    } else if (key == "config") {
        return lookup(parse_configuration(value));
    } else if (key == "dim") {
        const int d = std::stoi(value);
        for (const auto& row : strata_table())
            if (row.dim == d) out.push_back(row);
    } else {
        throw DomainError("unknown filter key '" + key + "'");
    }
    return out;
}

}  // namespace g2maps::cli

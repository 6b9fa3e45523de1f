#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "g2maps/cli.hpp"

namespace g2maps::cli {

namespace {

struct Options {
    bool color = false;
    std::string format = "tsv";
    int r = 2, d = 4;
    unsigned max_branches = 8;
    std::string mutant;
    std::string instance_path;
    std::string check_format = "text";
    std::string family;
    std::string filter;
};

std::string presentation_name(const GorensteinPresentation& p) {
    return p.type.to_string() + (p.label.empty() ? "" : " [" + p.label + "]");
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto rows = family_rows(o.r, o.d);
    if (o.format == "json")
        out << family_rows_to_json(rows).dump(2) << "\n";
    else
        out << family_rows_to_tsv(rows);
    return Ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.max_branches < 2) throw DomainError("--max-branches must be at least 2");
    std::vector<GorensteinPresentation> all;
    for (unsigned m = 1; m <= o.max_branches; ++m) all.push_back(type_I_presentation(m));
    for (unsigned m = 2; m <= o.max_branches; ++m) all.push_back(type_II_presentation(m));

    // Test mode: perturb the first equation of the first presentation of the chosen type.
    if (!o.mutant.empty()) {
        const auto kind = o.mutant == "I" ? SingularityType::Kind::GenusTwoTypeI : SingularityType::Kind::GenusTwoTypeII;
        for (auto& p : all)
            if (p.type.kind() == kind) {
                p.equations.front() += Polynomial::variable(p.equations.front().variables(), p.generator_names.front());
                break;
            }
    }

    std::vector<std::string> failures;
    for (const auto& p : all) {
        const bool ok = verify_presentation(p);
        out << presentation_name(p) << ": " << (ok ? "ok" : "FAILED") << ", " << p.equations.size()
            << " equations, truncation " << p.truncation << "\n";
        if (!ok) failures.push_back(presentation_name(p));
    }

    unsigned checked = 0, bad = 0;
    for (unsigned k = 1; k <= 4; ++k) {
        std::vector<unsigned> m(k, 1);
        while (true) {
            ++checked;
            if (ribbon_genus(k, m) != 2) {
                ++bad;
                failures.push_back("ribbon genus k=" + std::to_string(k));
            }
            std::size_t i = 0;
            while (i < k && m[i] == 4) m[i++] = 1;
            if (i == k) break;
            ++m[i];
        }
    }
    out << "ribbon genus: " << checked << " multiplicity vectors, " << (bad ? std::to_string(bad) + " failed" : "all genus 2")
        << "\n";

    if (failures.empty()) {
        out << "result: ok\n";
        return Ok;
    }
    out << "result: FAILED\n";
    for (const auto& f : failures) err << "verification failed: " << f << "\n";
    return VerificationFailure;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(o.instance_path);
    if (!in) {
        err << "error: cannot read " << o.instance_path << "\n";
        return UsageError;
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        err << "validation error at /: invalid JSON (" << e.what() << ")\n";
        return UsageError;
    }
    const SmoothabilityInstance inst = parse_instance(doc);
    const Verdict v = decide(inst);
    if (o.check_format == "json")
        out << verdict_to_json(inst, v).dump(2) << "\n";
    else
        out << format_verdict(inst, v, o.color);
    return exit_code_for(v);
}

int cmd_intersect(const Options& o, std::ostream& out) {
    std::vector<CatalogRecord> records;
    if (o.family.empty())
        records = intersection_catalog();
    else
        records.push_back(catalog_record(parse_family_spec(o.family)));
    if (o.format == "json")
        out << catalog_to_json(records).dump(2) << "\n";
    else
        out << catalog_to_tsv(records);
    return Ok;
}

int cmd_strata(const Options& o, std::ostream& out) {
    const auto rows = filter_strata(o.filter);
    if (o.format == "json") {
        out << strata_to_json(rows).dump(2) << "\n";
        return Ok;
    }
    out << strata_to_tsv(rows);
    // A reducibility filter is annotated with the non-reduced strata, which the table lists separately.
    if (o.filter.rfind("reducibility=", 0) == 0 && o.filter != "reducibility=non-reduced") {
        for (const auto& r : strata_table())
            if (r.reducibility == Reducibility::NonReduced)
                out << "# non-reduced: " << r.note << ", dim " << r.dim << "\n";
    }
    return Ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations for genus-two stable maps to the plane", "g2maps"};
    app.require_subcommand(1);
    app.add_flag("--color", o.color, "Colorize verdict outcomes");

    auto* enumerate = app.add_subcommand("enumerate", "Component families and dimensions");
    enumerate->add_option("--r", o.r, "Target projective dimension")->capture_default_str();
    enumerate->add_option("--d", o.d, "Degree")->capture_default_str();
    enumerate->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify-singularities", "Check the genus-two singularity presentations");
    verify->add_option("--max-branches", o.max_branches)->capture_default_str();
    verify->add_option("--inject-mutant", o.mutant, "Test mode: corrupt one presentation of type I or II")
        ->check(CLI::IsMember({"I", "II"}));

    auto* check = app.add_subcommand("check", "Decide smoothability of a JSON instance");
    check->add_option("instance", o.instance_path)->required();
    check->add_option("--format", o.check_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* intersect = app.add_subcommand("intersect", "Intersections of (2,4) families with main");
    intersect->add_option("--family", o.family, "FamilySpec; all families when omitted");
    intersect->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

    auto* strata = app.add_subcommand("strata", "Singularity strata of plane quartics");
    strata->add_option("--filter", o.filter, "reducibility=..., config=A1^2,A3 or dim=N");
    strata->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageError;
    }

    try {
        if (*enumerate) return cmd_enumerate(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*check) return cmd_check(o, out, err);
        if (*intersect) return cmd_intersect(o, out);
        if (*strata) return cmd_strata(o, out);
    } catch (const ValidationError& e) {
        err << "validation error " << e.what() << "\n";
        return UsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }
    return UsageError;
}

}  // namespace g2maps::cli

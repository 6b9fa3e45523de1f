// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails. Each check collects failure messages instead of
// stopping at the first one.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "g2maps/cli.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace g2maps;
using cli::json;
namespace gt = g2maps::testing;

namespace {

struct Check {
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string witness_text(const std::vector<SingularityType>& w) {
    if (w.empty()) return "-";
    std::string s;
    for (const auto& t : w) s += (s.empty() ? "" : ", ") + t.to_string();
    return s;
}

SmoothabilityInstance load_instance(const std::string& name) {
    return cli::parse_instance(json::parse(gt::read_file(gt::fixture_path(name))));
}

// ---------------------------------------------------------------------------

void dimension_table(Check& c) {
    const std::vector<std::pair<std::string, int>> golden{
        {"main", 13},       {"D(4)", 16},         {"D(3,1)", 15},       {"D(2,2)", 15},        {"D(2,1,1)", 14},
        {"D(1,1,1,1)", 13}, {"hypD(2)", 13},      {"hypD(1,1)", 12},    {"E(4)", 14},          {"E(3;1)", 13},
        {"E(2;2)", 13},     {"E(2;1,1)", 12},     {"EE(|4|)", 15},      {"EE(|3|1)", 14},      {"EE(|2|2)", 14},
        {"EE(|2|1,1)", 13}, {"EE(1|2|1)", 13},    {"EE(|1|3)", 14},     {"EE(|1|2,1)", 13},    {"EE(|1|1,1,1)", 12},
        {"EE(1|1|2)", 13},  {"EE(1|1|1,1)", 12},  {"brE(4)", 13},       {"brE(3;1)", 12},      {"brE(2;2)", 12},
        {"brE(2;1,1)", 11}, {"brE(1;3)", 12},     {"brE(1;2,1)", 11},   {"brE(1;1,1,1)", 10},
    };
    const auto fams = enumerate_families(2, 4);
    c.expect(fams.size() == golden.size(), "family count " + std::to_string(fams.size()));
    for (std::size_t i = 0; i < std::min(fams.size(), golden.size()); ++i) {
        c.expect(fams[i].to_spec() == golden[i].first, "family " + std::to_string(i) + " is " + fams[i].to_spec());
        const int d = dimension(fams[i], 2, 4);
        c.expect(d == golden[i].second, fams[i].to_spec() + " has dim " + std::to_string(d));
    }
    c.summary = std::to_string(fams.size()) + " families, E(3;1) = " +
                std::to_string(dimension(parse_family_spec("E(3;1)"), 2, 4));
}

void formula_spot_checks(Check& c) {
    gt::Gen g(2024);
    int tuples = 0, compared = 0;
    while (tuples < 20) {
        const int r = g.integer(1, 6), d = g.integer(3, 9), k = g.integer(1, 4);
        if (k > d) continue;
        ++tuples;
        const int vdim = virtual_dimension(r, d);
        c.expect(vdim == (r + 1) * d + 3 - r, "vdim at r=" + std::to_string(r) + " d=" + std::to_string(d));
        for (const auto& f : enumerate_families(r, d)) {
            if (f.kind() != ComponentFamily::Kind::Main && static_cast<int>(f.tail_count()) != k) continue;
            ++compared;
            const int got = dimension(f, r, d), want = oracle::clutching_dimension(f, r, d);
            c.expect(got == want, f.to_spec() + " at r=" + std::to_string(r) + " d=" + std::to_string(d) + ": " +
                                      std::to_string(got) + " vs oracle " + std::to_string(want));
        }
    }
    c.summary = std::to_string(tuples) + " tuples, " + std::to_string(compared) + " family dimensions";
}

void singularity_catalog(Check& c) {
    int ok = 0;
    for (unsigned m = 1; m <= 8; ++m) {
        const bool v = verify_presentation(type_I_presentation(m));
        c.expect(v, "type I m=" + std::to_string(m));
        ok += v;
    }
    for (unsigned m = 2; m <= 8; ++m) {
        const bool v = verify_presentation(type_II_presentation(m));
        c.expect(v, "type II m=" + std::to_string(m));
        ok += v;
    }
    int caught = 0;
    for (auto p : {type_I_presentation(3), type_II_presentation(3)}) {
        p.equations.front() += Polynomial::variable(p.equations.front().variables(), p.generator_names.front());
        const bool v = verify_presentation(p);
        c.expect(!v, "mutated " + p.type.to_string() + " still verifies");
        caught += !v;
    }
    c.summary = std::to_string(ok) + "/15 presentations verify, " + std::to_string(caught) + "/2 mutants rejected";
}

void ribbon_genus_check(Check& c) {
    int count = 0;
    for (unsigned k = 1; k <= 4; ++k) {
        std::vector<unsigned> m(k, 1);
        for (;;) {
            ++count;
            const int genus = ribbon_genus(k, m);
            if (genus != 2) {
                std::string s;
                for (unsigned x : m) s += std::to_string(x) + " ";
                c.failures.push_back("genus " + std::to_string(genus) + " for " + s);
            }
            std::size_t i = 0;
            while (i < k && m[i] == 4) m[i++] = 1;
            if (i == k) break;
            ++m[i];
        }
    }
    c.summary = std::to_string(count) + " multiplicity vectors";
}

void germ_classification(Check& c) {
    using UP = UnivariatePolynomial;
    auto mono = [](unsigned e, long k = 1) { return UP::monomial(Rational(k), e); };
    auto br = [](UP x, UP y) { return PlanarBranch(std::move(x), std::move(y)); };
    const std::vector<std::pair<std::vector<PlanarBranch>, SingularityType>> fixtures{
        {{br(mono(2), mono(5))}, SingularityType::A(4)},
        {{br(mono(1), UP()), br(mono(3), mono(2))}, SingularityType::D(5)},
        {{br(mono(1), UP()), br(mono(1), mono(3))}, SingularityType::A(5)},
        {{br(mono(1), UP()), br(mono(1), mono(2)), br(UP(), mono(1))}, SingularityType::D(6)},
        {{br(mono(1), UP()), br(UP(), mono(1)), br(mono(1), mono(1))}, SingularityType::D(4)},
        {{br(mono(3), mono(4))}, SingularityType::E(6)},
        {{br(mono(1), UP()), br(mono(2), mono(3))}, SingularityType::E(7)},
        {{br(mono(1), UP()), br(UP(), mono(1))}, SingularityType::A(1)},
        {{br(mono(1), UP()), br(mono(1), mono(2))}, SingularityType::A(3)},
    };
    for (const auto& [branches, expected] : fixtures) {
        const SingularityType got = classify_germ(branches);
        c.expect(got == expected, "expected " + expected.to_string() + ", got " + got.to_string());
        const GermSignature sig = germ_signature(branches);
        const int mu = 2 * static_cast<int>(sig.delta) - static_cast<int>(sig.branch_count) + 1;
        c.expect(mu == sig.milnor, expected.to_string() + ": signature Milnor number inconsistent");
        c.expect(mu == static_cast<int>(got.index()), expected.to_string() + ": 2 delta - r + 1 = " + std::to_string(mu));
    }
    c.summary = std::to_string(fixtures.size()) + " canonical germs";
}

void cross_ratio_suite(Check& c) {
    gt::Gen g(6);
    int draws = 0;
    while (draws < 1000) {
        std::array<P1Point, 4> p{g.p1(), g.p1(), g.p1(), g.p1()};
        ExtendedRational before = ExtendedRational::infinity();
        try {
            before = cross_ratio(p[0], p[1], p[2], p[3]);
        } catch (const DegenerateConfiguration&) {
            continue;
        }
        ++draws;
        const auto m = g.gl2();
        const auto after = cross_ratio(gt::apply(m, p[0]), gt::apply(m, p[1]), gt::apply(m, p[2]), gt::apply(m, p[3]));
        c.expect(after == before, "Moebius draw " + std::to_string(draws));
    }

    const HyperellipticCurve curve(UnivariatePolynomial({q(1), q(24), q(-50), q(35), q(-10), q(1)}));
    auto slope = [](long k) { return ProjLine2({q(-1), q(k), q(0)}); };
    const std::array<ProjLine2, 4> lines{slope(0), slope(1), slope(2), slope(3)};
    std::array<CurvePoint, 4> pts{CurvePoint::affine(q(0), q(1)), CurvePoint::affine(q(1), q(1)),
                                  CurvePoint::affine(q(2), q(1)), CurvePoint::affine(q(3), q(1))};
    c.expect(cross_ratio_match(lines, curve, pts), "4/3 vs 4/3 should match");
    pts[3] = CurvePoint::affine(q(4), q(1));
    c.expect(!cross_ratio_match(lines, curve, pts), "4/3 vs 3/2 should not match");

    int relabelings = 0;
    for (const char* name : {"d1111_pos", "d1111_neg", "d1111_codim_neg"}) {
        const auto base = load_instance(name);
        const Verdict expected = decide(base);
        std::array<unsigned, 4> s{0, 1, 2, 3};
        do {
            auto inst = base;
            inst.image.tail_images.clear();
            for (unsigned i = 0; i < 4; ++i) {
                const std::string label = "T" + std::to_string(i + 1);
                inst.attach[i] = base.attach[s[i]];
                inst.attach[i].tail = label;
                inst.image.tail_images[label] = base.image.tail_images.at(base.attach[s[i]].tail);
            }
            const Verdict v = decide(inst);
            c.expect(v.outcome == expected.outcome && v.condition == expected.condition,
                     std::string(name) + ": verdict changed under a relabeling");
            ++relabelings;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    c.summary = std::to_string(draws) + " Moebius draws, 2 match fixtures, " + std::to_string(relabelings) +
                " relabelings";
}

void intersection_catalog_check(Check& c) {
    const std::map<std::string, std::vector<int>> expected{
        {"main", {13}},           {"D(4)", {12, 12}},       {"D(3,1)", {12, 12, 12}}, {"D(2,2)", {12, 12}},
        {"D(2,1,1)", {12, 12, 12}}, {"D(1,1,1,1)", {12}},   {"hypD(2)", {11}},        {"E(4)", {12}},
        {"E(3;1)", {12}},         {"E(2;2)", {12, 12}},     {"EE(|4|)", {11}},        {"EE(|3|1)", {11}},
        {"EE(|2|2)", {11, 11}},   {"EE(|2|1,1)", {11}},     {"EE(1|2|1)", {10, 10, 10}}, {"brE(4)", {12}},
    };
    const std::map<std::string, int> contained{
        {"hypD(1,1)", 12}, {"E(2;1,1)", 12}, {"brE(3;1)", 12}, {"brE(2;2)", 12}, {"brE(2;1,1)", 11}};
    int at12 = 0, reducing = 0;
    for (const auto& rec : intersection_catalog()) {
        const std::string spec = rec.family.to_spec();
        if (rec.contained) {
            c.expect(contained.contains(spec) && contained.at(spec) == rec.family_dim,
                     spec + " contained at dim " + std::to_string(rec.family_dim));
            continue;
        }
        if (rec.reduces_to) {
            ++reducing;
            c.expect(*rec.reduces_to == reduction_target(rec.family), spec + " reduces to the wrong family");
            continue;
        }
        std::vector<int> dims;
        for (const auto& comp : rec.components) dims.push_back(comp.dim);
        c.expect(expected.contains(spec) && expected.at(spec) == dims, spec + " intersection dims differ");
        if (spec != "main" && !dims.empty() && dims.front() == 12) ++at12;
    }
    int n_contained = 0;
    for (const auto& rec : intersection_catalog()) n_contained += rec.contained;
    c.expect(n_contained == 5, "contained families: " + std::to_string(n_contained));
    c.expect(intersection_dimension_from_strata(8, MarkedModuli::M, 1) == 12, "8+4");
    c.expect(intersection_dimension_from_strata(9, MarkedModuli::W, 1) == 12, "9+3");
    c.expect(intersection_dimension_from_strata(7, MarkedModuli::M, 2) == 12, "7+5");
    c.expect(intersection_dimension_from_strata(8, MarkedModuli::K, 2) == 12, "8+4 on the divisor");
    c.summary = std::to_string(at12) + " non-contained families at dim 12, " + std::to_string(n_contained) +
                " contained, " + std::to_string(reducing) + " reducing";
}

void strata_check(Check& c) {
    // Reducibility, configuration and dimension of every reduced row, in table order.
    const std::vector<std::tuple<std::string, std::string, int>> golden{
        {"irreducible", "A1", 13},           {"irreducible", "A2", 12},         {"irreducible", "A3", 11},
        {"irreducible", "A4", 10},           {"irreducible", "A1^2", 12},       {"irreducible", "A1,A2", 11},
        {"irreducible", "A2^2", 10},         {"irreducible", "A5", 9},          {"irreducible", "A6", 8},
        {"irreducible", "D4", 10},           {"irreducible", "D5", 9},          {"irreducible", "E6", 8},
        {"irreducible", "A1,A3", 10},        {"irreducible", "A2,A3", 9},       {"irreducible", "A1,A4", 9},
        {"irreducible", "A2,A4", 8},         {"irreducible", "A1^3", 11},       {"irreducible", "A1^2,A2", 10},
        {"irreducible", "A1,A2^2", 9},       {"irreducible", "A2^3", 8},        {"cubic+line", "A5", 9},
        {"cubic+line", "A1,A3", 10},         {"cubic+line", "A1^3", 11},        {"cubic+line", "D6", 8},
        {"cubic+line", "E7", 7},             {"cubic+line", "A1,D4", 9},        {"cubic+line", "A1,A5", 8},
        {"cubic+line", "A1,D5", 8},          {"cubic+line", "A2,A5", 7},        {"cubic+line", "A1^2,A3", 9},
        {"cubic+line", "A1,A2,A3", 8},       {"cubic+line", "A1^4", 10},        {"cubic+line", "A1^3,A2", 9},
        {"two-conics", "A7", 7},             {"two-conics", "A1,A5", 8},        {"two-conics", "A3^2", 8},
        {"two-conics", "A1^2,A3", 8},        {"two-conics", "A1^4", 10},        {"conic+two-lines", "A1,D6", 7},
        {"conic+two-lines", "A1^2,D4", 8},   {"conic+two-lines", "A1^3,A3", 8}, {"conic+two-lines", "A1^5", 9},
        {"four-lines", "planar 4-fold point", 6}, {"four-lines", "A1^3,D4", 7}, {"four-lines", "A1^4", 8},
    };
    const std::vector<int> non_reduced{7, 6, 6, 5, 5, 4, 4, 2};
    const auto& table = strata_table();
    c.expect(table.size() == golden.size() + non_reduced.size(), "row count " + std::to_string(table.size()));
    for (std::size_t i = 0; i < std::min(table.size(), golden.size()); ++i) {
        const auto& [red, config, dim] = golden[i];
        const auto& row = table[i];
        c.expect(to_string(row.reducibility) == red && format_configuration(row.configuration) == config &&
                     row.dim == dim,
                 "row " + std::to_string(i + 1) + " differs");
    }
    for (std::size_t i = 0; i < non_reduced.size() && golden.size() + i < table.size(); ++i) {
        const auto& row = table[golden.size() + i];
        c.expect(row.reducibility == Reducibility::NonReduced && row.dim == non_reduced[i],
                 "non-reduced row " + std::to_string(i + 1) + " differs");
    }
    std::vector<std::string> deviating;
    for (const auto& row : table) {
        const auto d = codim_diagnostic(row);
        if (!d.supported) continue;
        if (row.reducibility == Reducibility::Irreducible)
            c.expect(d.deviation == 0, "irreducible " + format_configuration(row.configuration) + " deviates");
        if (d.deviation != 0)
            deviating.push_back(to_string(row.reducibility) + " " + format_configuration(row.configuration) + " " +
                                std::to_string(d.deviation));
    }
    const std::vector<std::string> pinned{"two-conics A1^2,A3 1", "four-lines A1^4 2"};
    c.expect(deviating == pinned, "deviating rows differ from the pinned list");
    c.summary = std::to_string(table.size()) + " rows, " + std::to_string(deviating.size()) + " pinned deviations";
}

void decider_check(Check& c) {
    const auto rows = gt::manifest();
    std::set<std::pair<std::string, std::string>> positive, negative;
    int decided = 0;
    for (const auto& row : rows) {
        if (row.exit == cli::UsageError) {
            try {
                load_instance(row.name);
                c.failures.push_back(row.name + " validated");
            } catch (const ValidationError& e) {
                c.expect(e.pointer() == row.check, row.name + " pointer " + e.pointer());
            }
            continue;
        }
        const auto inst = load_instance(row.name);
        const Verdict v = decide(inst);
        ++decided;
        c.expect(to_string(v.outcome) == row.outcome, row.name + " outcome " + to_string(v.outcome));
        c.expect(witness_text(v.witness) == row.witness, row.name + " witness " + witness_text(v.witness));
        const std::string spec = inst.family.to_spec();
        if (v.outcome == Verdict::Outcome::Smoothable) positive.insert({spec, v.condition});
        if (v.outcome == Verdict::Outcome::NotSmoothable)
            for (const auto& e : v.trace)
                if (!e.value) negative.insert({spec, e.disjunct});
    }
    int disjuncts = 0;
    for (const auto& f : enumerate_families(2, 4)) {
        const FamilyRule rule = family_rule(f);
        if (rule.kind != FamilyRule::Kind::Disjunction) continue;
        for (const auto& d : rule.disjuncts) {
            ++disjuncts;
            c.expect(positive.contains({f.to_spec(), d.name}), f.to_spec() + "/" + d.name + " has no positive fixture");
            c.expect(negative.contains({f.to_spec(), d.name}), f.to_spec() + "/" + d.name + " has no negative fixture");
        }
    }
    c.expect(decided >= 30, "only " + std::to_string(decided) + " decided fixtures");

    gt::Gen g(99);
    const std::vector<std::string> specs{"main", "hypD(1,1)", "E(2;1,1)", "brE(3;1)", "brE(2;2)", "brE(2;1,1)"};
    for (int n = 0; n < 200; ++n) {
        const auto f = parse_family_spec(specs[static_cast<std::size_t>(g.integer(0, 5))]);
        SmoothabilityInstance inst{f, std::nullopt, {}, std::nullopt, {}};
        if (f.kind() != ComponentFamily::Kind::Main) {
            auto parts = f.mu().parts();
            g.shuffle(parts);
            for (std::size_t i = 0; i < parts.size(); ++i)
                inst.attach.push_back({"t" + std::to_string(g.integer(0, 99)) + "_" + std::to_string(i), parts[i],
                                       std::nullopt, false});
        }
        for (int l = g.integer(0, 3); l > 0; --l)
            inst.image.lines.emplace("L" + std::to_string(l),
                                     ProjLine2({g.rational(), g.rational(), g.nonzero_rational()}));
        const Verdict v = decide(inst);
        c.expect(v.outcome == Verdict::Outcome::ContainedInMain, f.to_spec() + " random payload not contained");
    }
    c.summary = std::to_string(decided) + " decided fixtures covering " + std::to_string(disjuncts) +
                " disjuncts both ways, 200 contained payloads";
}

struct Run {
    int code;
    std::string out;
};

Run run_binary(const std::string& args) {
    const std::string cmd = std::string("'") + G2MAPS_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void cli_contract(Check& c) {
    int runs = 0;
    for (const auto& row : gt::manifest()) {
        const std::string path = "'" + gt::fixture_path(row.name) + "'";
        for (const char* fmt : {"text", "json"}) {
            const Run a = run_binary("check " + path + " --format " + fmt);
            const Run b = run_binary("check " + path + " --format " + fmt);
            runs += 2;
            c.expect(a.code == row.exit, row.name + " exit " + std::to_string(a.code));
            c.expect(a.out == b.out, row.name + " output is not byte-stable");
            if (row.exit != cli::UsageError)
                c.expect(a.out == gt::golden_text("check/" + row.name + (fmt[0] == 't' ? ".txt" : ".json")),
                         row.name + " differs from its golden output");
        }
        if (row.exit == cli::UsageError) continue;
        const json doc = json::parse(gt::read_file(gt::fixture_path(row.name)));
        const json once = cli::instance_to_json(cli::parse_instance(doc));
        c.expect(cli::instance_to_json(cli::parse_instance(once)) == once, row.name + " instance round trip");
    }
    const std::vector<std::pair<std::string, std::string>> tables{
        {"enumerate --r 2 --d 4", "enumerate_2_4.tsv"},   {"enumerate --r 2 --d 4 --format json", "enumerate_2_4.json"},
        {"intersect", "intersect.tsv"},                   {"intersect --format json", "intersect.json"},
        {"strata", "strata.tsv"},                         {"strata --format json", "strata.json"},
        {"verify-singularities", "verify_singularities.txt"},
    };
    for (const auto& [args, file] : tables) {
        const Run a = run_binary(args), b = run_binary(args);
        runs += 2;
        c.expect(a.code == 0 && a.out == b.out && a.out == gt::golden_text(file), args + " output differs");
    }
    c.expect(run_binary("verify-singularities --inject-mutant I").code == cli::VerificationFailure, "mutant exit");
    c.expect(run_binary("intersect --family 'D(5)'").code == cli::UsageError, "usage exit");

    const auto rows = cli::family_rows(2, 4);
    c.expect(cli::family_rows_from_json(cli::family_rows_to_json(rows)) == rows, "family rows round trip");
    const json cat = cli::catalog_to_json(intersection_catalog());
    c.expect(cli::catalog_to_json(cli::catalog_from_json(cat)) == cat, "catalog round trip");
    c.expect(cli::strata_from_json(cli::strata_to_json(strata_table())) == strata_table(), "strata round trip");
    c.summary = std::to_string(runs) + " binary runs";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"dimension golden table", dimension_table},
        {"formula spot checks against the clutching oracle", formula_spot_checks},
        {"singularity catalog verification", singularity_catalog},
        {"ribbon genus", ribbon_genus_check},
        {"germ classification", germ_classification},
        {"cross-ratio suite", cross_ratio_suite},
        {"intersection catalog", intersection_catalog_check},
        {"strata table", strata_check},
        {"decider behavior", decider_check},
        {"CLI contract", cli_contract},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += !ok;
        std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " " << criteria[i].first;
        if (!c.summary.empty()) std::cout << " (" << c.summary << ")";
        std::cout << "\n";
        for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::cout << "    " << c.failures[k] << "\n";
        if (c.failures.size() > 10) std::cout << "    ... " << c.failures.size() - 10 << " more\n";
    }
    return failed == 0 ? 0 : 1;
}

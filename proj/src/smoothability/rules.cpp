#include <algorithm>
#include <sstream>

#include "g2maps/smoothability.hpp"

namespace g2maps {

namespace {

using Inst = SmoothabilityInstance;
using ST = SingularityType;

PredicateResult yes(std::string detail = {}) { return {true, std::move(detail)}; }
PredicateResult no(std::string detail) { return {false, std::move(detail)}; }

const Attachment& tail_with_degree(const Inst& in, unsigned degree, std::size_t skip = 0) {
    for (const auto& a : in.attach)
        if (a.degree == degree && skip-- == 0) return a;
    throw DomainError("no tail of degree " + std::to_string(degree));
}

const DoubleCover& cover_of(const Inst& in, const std::string& component) {
    auto it = in.image.double_covers.find(component);
    if (it == in.image.double_covers.end()) throw DomainError("no double cover recorded for " + component);
    return it->second;
}

const ProjLine2& line_named(const Inst& in, const std::string& label) {
    auto it = in.image.lines.find(label);
    if (it == in.image.lines.end()) throw DomainError("no line '" + label + "'");
    return it->second;
}

const P2Point& point_named(const Inst& in, const std::string& name) {
    auto it = in.image.points.find(name);
    if (it == in.image.points.end()) throw DomainError("no point '" + name + "'");
    return it->second;
}

std::optional<ProjLine2> tail_line(const Inst& in, const std::string& tail) {
    auto it = in.image.tail_images.find(tail);
    if (it == in.image.tail_images.end()) return std::nullopt;
    auto l = in.image.lines.find(it->second);
    if (l == in.image.lines.end()) return std::nullopt;
    return l->second;
}

std::optional<Conic2> tail_conic(const Inst& in, const std::string& tail) {
    auto it = in.image.tail_images.find(tail);
    if (it == in.image.tail_images.end()) return std::nullopt;
    auto c = in.image.conics.find(it->second);
    if (c == in.image.conics.end()) return std::nullopt;
    return c->second;
}

ProjLine2 require_tail_line(const Inst& in, const std::string& tail) {
    if (auto l = tail_line(in, tail)) return *l;
    throw DomainError("tail " + tail + " has no image line");
}

Conic2 require_tail_conic(const Inst& in, const std::string& tail) {
    if (auto c = tail_conic(in, tail)) return *c;
    throw DomainError("tail " + tail + " has no image conic");
}

bool among(const P2Point& p, const std::vector<P2Point>& pts) { return std::find(pts.begin(), pts.end(), p) != pts.end(); }

/// Point where a tangent line touches a nondegenerate conic: adj(C) L.
P2Point tangency_point(const ProjLine2& l, const Conic2& c) {
    const Matrix3 adj = adjugate(c.matrix());
    std::array<Rational, 3> p;
    for (int i = 0; i < 3; ++i) p[i] = adj[i][0] * l.coefficients()[0] + adj[i][1] * l.coefficients()[1] +
                                      adj[i][2] * l.coefficients()[2];
    return P2Point(p);
}

/// Tangent direction of a tail's image at base; zero when the tail doubly covers
/// a line with a branch point at base.
std::array<Rational, 2> tail_direction(const Inst& in, const std::string& tail, const P2Point& base) {
    auto cov = in.image.double_covers.find(tail);
    if (cov != in.image.double_covers.end()) {
        if (among(base, cov->second.branch_points)) return {Rational(0), Rational(0)};
        return line_direction(base, line_named(in, cov->second.line));
    }
    if (auto l = tail_line(in, tail)) return line_direction(base, *l);
    if (auto c = tail_conic(in, tail)) {
        if (!c->contains(base)) throw IncidenceError("conic of tail " + tail + " misses " + base.to_string());
        return line_direction(base, c->polar(base));
    }
    throw DomainError("tail " + tail + " has no image curve");
}

// --- attachment predicates -------------------------------------------------

bool weierstrass(const Inst& in, const Attachment& a) {
    return a.point && in.curve && in.curve->is_weierstrass(*a.point);
}

std::optional<std::pair<std::string, std::string>> conjugate_pair(const Inst& in) {
    for (std::size_t i = 0; i < in.attach.size(); ++i)
        for (std::size_t j = i + 1; j < in.attach.size(); ++j) {
            const auto &a = in.attach[i], &b = in.attach[j];
            if (a.point && b.point && in.curve && in.curve->are_conjugate(*a.point, *b.point))
                return std::pair{a.tail, b.tail};
        }
    return std::nullopt;
}

Predicate attach_generic() {
    return {"attach_generic", [](const Inst& in) {
                for (const auto& a : in.attach)
                    if (weierstrass(in, a)) return no(a.tail + " is attached at a Weierstrass point");
                if (auto p = conjugate_pair(in)) return no(p->first + " and " + p->second + " are conjugate");
                return yes("no Weierstrass or conjugate attachments");
            }};
}

Predicate attach_weierstrass(unsigned degree) {
    return {"attach_weierstrass", [degree](const Inst& in) {
                const Attachment& a = tail_with_degree(in, degree);
                if (weierstrass(in, a)) return yes(a.tail + " at " + a.point->to_string());
                return no(a.tail + " is not at a Weierstrass point");
            }};
}

Predicate attach_conjugate() {
    return {"attach_conjugate", [](const Inst& in) {
                if (auto p = conjugate_pair(in)) return yes(p->first + " ~ " + p->second);
                return no("no pair of conjugate attaching points");
            }};
}

// --- germ predicates ---------------------------------------------------------

Predicate germs_include(std::vector<ST> required) {
    std::string name = "germs_include[";
    for (std::size_t i = 0; i < required.size(); ++i) name += (i ? "," : "") + required[i].to_string();
    name += "]";
    return {name, [required](const Inst& in) {
                std::vector<ST> found;
                std::ostringstream detail;
                bool first = true;
                for (const auto& [label, branches] : in.image.germs) {
                    try {
                        found.push_back(classify_germ(branches));
                        detail << (first ? "" : ", ") << label << "=" << found.back().to_string();
                    } catch (const UnclassifiedGerm& e) {
                        return no("germ " + label + ": " + e.what());
                    }
                    first = false;
                }
                if (in.image.germs.empty()) return no("no image germs");
                for (const auto& t : required) {
                    const auto need = std::count(required.begin(), required.end(), t);
                    if (std::count(found.begin(), found.end(), t) < need) return no(detail.str());
                }
                return yes(detail.str());
            }};
}

// --- plane geometry predicates ---------------------------------------------

Predicate conic_tangent_to_cover_line(const std::string& cover) {
    return {"conic_tangent_to_double_line", [cover](const Inst& in) {
                const Attachment& t = tail_with_degree(in, 2);
                const DoubleCover& dc = cover_of(in, cover);
                const bool v = line_tangent_to_conic(line_named(in, dc.line), require_tail_conic(in, t.tail));
                return PredicateResult{v, "conic of " + t.tail + (v ? " touches " : " is not tangent to ") + dc.line};
            }};
}

Predicate conic_through_branch_point(const std::string& cover, std::optional<std::string> excluded_point) {
    return {excluded_point ? "conic_through_second_branch_point" : "conic_through_branch_point",
            [cover, excluded_point](const Inst& in) {
                const Attachment& t = tail_with_degree(in, 2);
                const Conic2 c = require_tail_conic(in, t.tail);
                const DoubleCover& dc = cover_of(in, cover);
                std::optional<P2Point> skip;
                if (excluded_point) skip = point_named(in, *excluded_point);
                for (const auto& b : dc.branch_points)
                    if ((!skip || !(b == *skip)) && c.contains(b)) return yes("through " + b.to_string());
                return no("conic of " + t.tail + " misses the branch points");
            }};
}

Predicate point_at_branch_point(const std::string& point, const std::string& cover) {
    return {point + "_at_branch_point", [point, cover](const Inst& in) {
                const P2Point& p = point_named(in, point);
                const bool v = among(p, cover_of(in, cover).branch_points);
                return PredicateResult{v, point + " = " + p.to_string()};
            }};
}

// --- per-family rules --------------------------------------------------------

std::vector<unsigned> ones(unsigned k) { return std::vector<unsigned>(k, 1); }

FamilyRule disjunction(std::vector<Disjunct> ds) { return {FamilyRule::Kind::Disjunction, std::move(ds), std::nullopt, {}}; }
FamilyRule contained(std::string note) { return {FamilyRule::Kind::Contained, {}, std::nullopt, std::move(note)}; }

FamilyRule rule_D(const Partition& mu) {
    const auto& p = mu.parts();
    if (p == std::vector<unsigned>{4}) {
        return disjunction({{"e6", {attach_generic(), germs_include({ST::E(6)})}, {ST::E(6)}},
                            {"weierstrass_a4", {attach_weierstrass(4), germs_include({ST::A(4), ST::A(1)})},
                             {ST::A(4)}}});
    }
    if (p == std::vector<unsigned>{3, 1}) {
        return disjunction({{"e7", {attach_generic(), germs_include({ST::E(7)})}, {ST::E(7)}},
                            {"weierstrass_d5", {attach_weierstrass(3), germs_include({ST::D(5)})}, {ST::D(5)}},
                            {"conjugate_a5", {attach_conjugate(), germs_include({ST::A(1), ST::A(5)})}, {ST::A(5)}}});
    }
    if (p == std::vector<unsigned>{2, 2}) {
        Predicate covers{"tail_double_covers_line", [](const Inst& in) {
                             for (const auto& a : in.attach)
                                 if (in.image.double_covers.count(a.tail))
                                     return yes(a.tail + " covers " + in.image.double_covers.at(a.tail).line);
                             return no("neither tail covers a line");
                         }};
        Predicate tangent_at_branch{"conic_tangent_at_branch_point", [](const Inst& in) {
                                        for (const auto& a : in.attach) {
                                            auto cov = in.image.double_covers.find(a.tail);
                                            if (cov == in.image.double_covers.end()) continue;
                                            const ProjLine2 l = line_named(in, cov->second.line);
                                            for (const auto& b : in.attach) {
                                                if (b.tail == a.tail) continue;
                                                const Conic2 c = require_tail_conic(in, b.tail);
                                                if (!line_tangent_to_conic(l, c))
                                                    return no("conic of " + b.tail + " is not tangent to " +
                                                              cov->second.line);
                                                const P2Point q = tangency_point(l, c);
                                                if (among(q, cov->second.branch_points))
                                                    return yes("tangent at branch point " + q.to_string());
                                                return no("tangency point " + q.to_string() + " is not a branch point");
                                            }
                                        }
                                        return no("no doubly covered line");
                                    }};
        return disjunction({{"conjugate_a5", {attach_conjugate(), germs_include({ST::A(1), ST::A(5)})}, {ST::A(5)}},
                            {"double_line_conic", {attach_generic(), covers, tangent_at_branch},
                             {ST::genus_two_type_II(3)}}});
    }
    if (p == std::vector<unsigned>{2, 1, 1}) {
        auto conjugate_partner = [](const Inst& in) -> std::optional<std::string> {
            const Attachment& t1 = tail_with_degree(in, 2);
            for (const auto& a : in.attach)
                if (a.degree == 1 && a.point && t1.point && in.curve && in.curve->are_conjugate(*t1.point, *a.point))
                    return a.tail;
            return std::nullopt;
        };
        Predicate conj{"conic_tail_conjugate_to_line_tail", [conjugate_partner](const Inst& in) {
                           if (auto t = conjugate_partner(in)) return yes(tail_with_degree(in, 2).tail + " ~ " + *t);
                           return no("the degree-2 tail has no conjugate partner");
                       }};
        Predicate tangent_at_base{"line_tangent_to_conic_at_base", [conjugate_partner](const Inst& in) {
                                      const auto partner = conjugate_partner(in);
                                      if (!partner) return no("no conjugate partner");
                                      const ProjLine2 l = require_tail_line(in, *partner);
                                      const Conic2 c = require_tail_conic(in, tail_with_degree(in, 2).tail);
                                      if (!line_tangent_to_conic(l, c)) return no("line of " + *partner + " is not tangent");
                                      const P2Point q = tangency_point(l, c);
                                      const bool v = q == point_named(in, "base");
                                      return PredicateResult{v, "tangent at " + q.to_string()};
                                  }};
        Predicate doubled{"conic_tail_double_covers_line", [](const Inst& in) {
                              const Attachment& t1 = tail_with_degree(in, 2);
                              if (in.image.double_covers.count(t1.tail))
                                  return yes(t1.tail + " covers " + in.image.double_covers.at(t1.tail).line);
                              return no(t1.tail + " does not cover a line");
                          }};
        Predicate three_lines{"three_concurrent_lines", [](const Inst& in) {
                                  const Attachment& t1 = tail_with_degree(in, 2);
                                  const std::vector<ProjLine2> ls{line_named(in, cover_of(in, t1.tail).line),
                                                                  require_tail_line(in, tail_with_degree(in, 1, 0).tail),
                                                                  require_tail_line(in, tail_with_degree(in, 1, 1).tail)};
                                  const P2Point p = concurrency_point(ls);
                                  return yes("concurrent at " + p.to_string());
                              }};
        Predicate branch_at_center{"branch_point_at_concurrency", [](const Inst& in) {
                                       const Attachment& t1 = tail_with_degree(in, 2);
                                       const DoubleCover& dc = cover_of(in, t1.tail);
                                       const P2Point p = concurrency_point(
                                           {line_named(in, dc.line), require_tail_line(in, tail_with_degree(in, 1, 0).tail),
                                            require_tail_line(in, tail_with_degree(in, 1, 1).tail)});
                                       const bool v = among(p, dc.branch_points);
                                       return PredicateResult{v, "concurrency point " + p.to_string()};
                                   }};
        Predicate ribbon{"ribbon_descent_contracted", [](const Inst& in) {
                             const P2Point& base = point_named(in, "base");
                             TangentConfiguration tc{base, {}, std::nullopt};
                             for (const auto& a : in.attach) tc.directions.push_back(tail_direction(in, a.tail, base));
                             const bool v = ribbon_descent_condition(tc, 3, RibbonMode::Contracted);
                             return PredicateResult{v, "k=3"};
                         }};
        return disjunction({{"conjugate_tangent", {conj, tangent_at_base}, {ST::D(6)}},
                            {"double_line_three_lines", {attach_generic(), doubled, three_lines, branch_at_center},
                             {ST::genus_two_type_II(4)}},
                            {"contracted_ribbon", {attach_generic(), ribbon}, {ST::tailed_ribbon(ones(3))}}});
    }
    if (p == std::vector<unsigned>{1, 1, 1, 1}) {
        auto lines_of = [](const Inst& in) {
            std::vector<ProjLine2> ls;
            for (const auto& a : in.attach) ls.push_back(require_tail_line(in, a.tail));
            return ls;
        };
        Predicate codim{"section_descent_codim", [lines_of](const Inst& in) {
                            const auto ls = lines_of(in);
                            const P2Point base = concurrency_point(ls);
                            const unsigned c = section_descent_codim(TangentConfiguration::from_lines(base, ls));
                            return PredicateResult{c == 2, "codim=" + std::to_string(c)};
                        }};
        Predicate match{"cross_ratio_match", [lines_of](const Inst& in) {
                            const auto ls = lines_of(in);
                            std::array<CurvePoint, 4> pts{CurvePoint::at_infinity(), CurvePoint::at_infinity(),
                                                          CurvePoint::at_infinity(), CurvePoint::at_infinity()};
                            for (std::size_t i = 0; i < 4; ++i) {
                                if (!in.attach[i].point)
                                    throw DomainError("tail " + in.attach[i].tail + " needs an explicit attaching point");
                                pts[i] = *in.attach[i].point;
                            }
                            if (!in.curve) throw DomainError("no curve");
                            const std::array<ProjLine2, 4> la{ls[0], ls[1], ls[2], ls[3]};
                            const bool v = cross_ratio_match(la, *in.curve, pts);
                            std::array<P1Point, 4> pen{p1_infinity(), p1_infinity(), p1_infinity(), p1_infinity()};
                            std::array<P1Point, 4> img = pen;
                            const P2Point base = concurrency_point(ls);
                            for (std::size_t i = 0; i < 4; ++i) {
                                pen[i] = pencil_coordinate(base, ls[i]);
                                img[i] = in.curve->hyperelliptic_image(pts[i]);
                            }
                            return PredicateResult{v, "lines " + cross_ratio(pen[0], pen[1], pen[2], pen[3]).to_string() +
                                                          " vs points " +
                                                          cross_ratio(img[0], img[1], img[2], img[3]).to_string()};
                        }};
        return disjunction({{"ribbon_cross_ratio", {codim, match}, {ST::tailed_ribbon(ones(4))}}});
    }
    throw DomainError("no rule for D(" + mu.to_string() + ")");
}

FamilyRule rule_E(unsigned d0, const Partition& mu) {
    if (d0 == 4) return disjunction({{"cusp", {germs_include({ST::A(1), ST::A(2)})}, {ST::A(2)}}});
    if (d0 == 3) {
        Predicate tangent{"line_tangent_to_cubic", [](const Inst& in) {
                              const Attachment& t = tail_with_degree(in, 1);
                              if (!in.image.cubic) throw DomainError("no cubic");
                              const bool v = line_tangent_to_curve(require_tail_line(in, t.tail), *in.image.cubic);
                              return PredicateResult{v, "line of " + t.tail};
                          }};
        return disjunction({{"tangent_line", {tangent}, {ST::A(3)}}});
    }
    if (mu.parts() == std::vector<unsigned>{2})
        return disjunction({{"tacnode", {conic_tangent_to_cover_line("E1")}, {ST::A(3)}},
                            {"branch_point", {conic_through_branch_point("E1", std::nullopt)}, {ST::A(2)}}});
    return contained("the image determines the elliptic 3-fold point");
}

FamilyRule rule_EE(const Partition& mu1, unsigned d0, const Partition& mu2) {
    if (d0 == 1) {
        const ComponentFamily target = reduction_target(ComponentFamily::EE(mu1, d0, mu2));
        return {FamilyRule::Kind::ReducesTo, {}, target, "meets main where " + target.to_spec() + " does"};
    }
    if (d0 == 4) return disjunction({{"two_cusps", {germs_include({ST::A(1), ST::A(2), ST::A(2)})}, {ST::A(2), ST::A(2)}}});
    if (d0 == 3)
        return disjunction(
            {{"cusp_and_tacnode", {germs_include({ST::A(1), ST::A(2), ST::A(3)})}, {ST::A(2), ST::A(3)}}});
    if (mu1.empty() && mu2.parts() == std::vector<unsigned>{2})
        return disjunction({{"tacnode",
                             {point_at_branch_point("E1", "bridge"), conic_tangent_to_cover_line("bridge")},
                             {ST::A(2), ST::A(3)}},
                            {"second_ramification",
                             {point_at_branch_point("E1", "bridge"), conic_through_branch_point("bridge", "E1")},
                             {ST::A(2), ST::A(2)}}});
    if (mu1.empty()) return disjunction({{"cusp_at_ramification", {point_at_branch_point("E1", "bridge")}, {ST::A(2)}}});

    // EE(1|2|1): each tail line equals the doubly covered line or meets it at a branch point.
    auto contacts = [](unsigned equal_wanted) {
        return Predicate{"line_contacts", [equal_wanted](const Inst& in) {
                             const DoubleCover& dc = cover_of(in, "bridge");
                             const ProjLine2 l = line_named(in, dc.line);
                             unsigned equal = 0, branch = 0;
                             for (const auto& a : in.attach) {
                                 const ProjLine2 m = require_tail_line(in, a.tail);
                                 if (m == l)
                                     ++equal;
                                 else if (among(intersect(l, m), dc.branch_points))
                                     ++branch;
                             }
                             const bool v = equal + branch == 2 && equal == equal_wanted;
                             return PredicateResult{v, "equal=" + std::to_string(equal) +
                                                           " through_branch=" + std::to_string(branch)};
                         }};
    };
    return disjunction({{"both_tangent", {contacts(2)}, {ST::A(3), ST::A(3)}},
                        {"tangent_and_branch", {contacts(1)}, {ST::A(2), ST::A(3)}},
                        {"both_branch", {contacts(0)}, {ST::A(2), ST::A(2)}}});
}

FamilyRule rule_brE(unsigned d0, const Partition& mu) {
    if (d0 == 1) {
        const ComponentFamily target = reduction_target(ComponentFamily::brE(d0, mu));
        return {FamilyRule::Kind::ReducesTo, {}, target, "meets main within " + target.to_spec()};
    }
    if (d0 == 4) return disjunction({{"tacnode", {germs_include({ST::A(1), ST::A(3)})}, {ST::A(3)}}});
    if (d0 == 3) return contained("the image determines the elliptic 3-fold point");
    if (mu.length() == 1) return contained("the elliptic curve is contracted to the line-conic intersection");
    return contained("the image is a 3-fold point");
}

FamilyRule rule_hypD(const Partition& mu) {
    if (mu.length() == 2) return contained("the image determines the ribbon");
    Predicate ramified{"tail_ramified_at_node", [](const Inst& in) {
                           const Attachment& t = in.attach.at(0);
                           auto cov = in.image.double_covers.find(t.tail);
                           if (cov == in.image.double_covers.end()) return no(t.tail + " does not cover a line");
                           const bool v = among(point_named(in, "base"), cov->second.branch_points);
                           return PredicateResult{v, v ? "branch point at the node" : "unramified at the node"};
                       }};
    Predicate ribbon{"ribbon_descent_hyperelliptic", [](const Inst& in) {
                         const P2Point& base = point_named(in, "base");
                         TangentConfiguration tc{base, {tail_direction(in, in.attach.at(0).tail, base)},
                                                 line_named(in, cover_of(in, "core").line)};
                         return PredicateResult{ribbon_descent_condition(tc, 1, RibbonMode::Hyperelliptic), "k=1"};
                     }};
    return disjunction({{"hyperelliptic_ribbon", {ramified, ribbon}, {ST::tailed_ribbon({1})}}});
}

bool in_catalog(const ComponentFamily& f) {
    const auto all = enumerate_families(2, 4);
    return std::find(all.begin(), all.end(), f) != all.end();
}

}  // namespace

FamilyRule family_rule(const ComponentFamily& f) {
    if (!in_catalog(f)) throw DomainError(f.to_spec() + " is not a component of genus-two quartic plane maps");
    using K = ComponentFamily::Kind;
    switch (f.kind()) {
        case K::Main: return contained("main itself");
        case K::D: return rule_D(f.mu());
        case K::HypD: return rule_hypD(f.mu());
        case K::E: return rule_E(f.d0(), f.mu());
        case K::EE: return rule_EE(f.mu(), f.d0(), f.mu2());
        case K::BrE: return rule_brE(f.d0(), f.mu());
    }
    throw DomainError("unknown family kind");
}

std::string to_string(Verdict::Outcome o) {
    switch (o) {
        case Verdict::Outcome::Smoothable: return "Smoothable";
        case Verdict::Outcome::NotSmoothable: return "NotSmoothable";
        case Verdict::Outcome::ContainedInMain: return "ContainedInMain";
        case Verdict::Outcome::ReducesTo: return "ReducesTo";
    }
    return {};
}

Verdict replay(const FamilyRule& rule, const std::vector<TraceEntry>& trace) {
    Verdict v{Verdict::Outcome::NotSmoothable, {}, {}, std::nullopt, trace};
    if (rule.kind == FamilyRule::Kind::Contained) {
        v.outcome = Verdict::Outcome::ContainedInMain;
        v.condition = rule.note;
        return v;
    }
    if (rule.kind == FamilyRule::Kind::ReducesTo) {
        v.outcome = Verdict::Outcome::ReducesTo;
        v.reduces_to = rule.target;
        v.condition = rule.note;
        return v;
    }
    std::string first_failure;
    for (const auto& d : rule.disjuncts) {
        bool all = true;
        for (const auto& c : d.conjuncts) {
            auto it = std::find_if(trace.begin(), trace.end(), [&](const TraceEntry& e) {
                return e.disjunct == d.name && e.predicate == c.name;
            });
            if (it == trace.end() || !it->value) {
                if (first_failure.empty()) first_failure = d.name + "/" + c.name;
                all = false;
                break;
            }
        }
        if (all) {
            v.outcome = Verdict::Outcome::Smoothable;
            v.witness = d.witness;
            v.condition = d.name;
            return v;
        }
    }
    v.condition = first_failure;
    return v;
}

Verdict decide(const SmoothabilityInstance& inst) {
    validate_instance(inst);
    const FamilyRule rule = family_rule(inst.family);
    std::vector<TraceEntry> trace;
    if (rule.kind == FamilyRule::Kind::Contained) {
        trace.push_back({"contained", "contained_in_main", true, rule.note});
    } else if (rule.kind == FamilyRule::Kind::ReducesTo) {
        trace.push_back({"reduces", "reduces_to", true, rule.target->to_spec()});
    } else {
        for (const auto& d : rule.disjuncts) {
            bool all = true;
            for (const auto& c : d.conjuncts) {
                PredicateResult r{false, {}};
                try {
                    r = c.eval(inst);
                } catch (const Error& e) {
                    r = {false, e.what()};
                }
                trace.push_back({d.name, c.name, r.value, r.detail});
                if (!r.value) {
                    all = false;
                    break;
                }
            }
            if (all) break;
        }
    }
    return replay(rule, trace);
}

}  // namespace g2maps

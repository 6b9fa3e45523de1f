#include <algorithm>

#include "g2maps/linalg.hpp"
#include "g2maps/smoothability.hpp"

namespace g2maps {

namespace {

std::size_t direction_span(const std::vector<std::array<Rational, 2>>& dirs) {
    std::vector<RationalVector> rows;
    for (const auto& d : dirs) rows.push_back({d[0], d[1]});
    return span_dimension(rows);
}

}  // namespace

std::array<Rational, 2> line_direction(const P2Point& base, const ProjLine2& line) {
    return pencil_coordinate(base, line).coords();
}

TangentConfiguration TangentConfiguration::from_lines(const P2Point& base, const std::vector<ProjLine2>& lines) {
    TangentConfiguration tc{base, {}, std::nullopt};
    for (const auto& l : lines) tc.directions.push_back(line_direction(base, l));
    return tc;
}

bool genus1_tails_condition(const TangentConfiguration& tc, unsigned k) {
    if (tc.directions.empty()) throw DomainError("empty tangent configuration");
    if (tc.directions.size() != k)
        throw DomainError("tangent configuration has " + std::to_string(tc.directions.size()) + " directions, not " +
                          std::to_string(k));
    return direction_span(tc.directions) + 1 <= k;
}

bool unobstructed_isolated(const std::vector<int>& genus1_degrees, const std::vector<int>& genus2_degrees) {
    return std::all_of(genus1_degrees.begin(), genus1_degrees.end(), [](int d) { return d >= 1; }) &&
           std::all_of(genus2_degrees.begin(), genus2_degrees.end(), [](int d) { return d >= 3; });
}

bool ribbon_descent_condition(const TangentConfiguration& tc, unsigned k, RibbonMode mode) {
    if (tc.directions.size() != k)
        throw DomainError("tangent configuration has " + std::to_string(tc.directions.size()) + " directions, not " +
                          std::to_string(k));
    if (mode == RibbonMode::Contracted) {
        if (k < 2) return false;
        return direction_span(tc.directions) + 2 <= k;
    }
    if (k < 1) return false;
    if (!tc.line) throw DomainError("hyperelliptic ribbon test needs the doubly covered line");
    const std::array<Rational, 2> dl = line_direction(tc.base, *tc.line);
    std::vector<RationalVector> projected;
    for (const auto& v : tc.directions) projected.push_back({det2(dl[0], dl[1], v[0], v[1])});
    return span_dimension(projected) + 1 <= k;
}

unsigned section_descent_codim(const TangentConfiguration& tc) {
    const auto k = static_cast<unsigned>(tc.directions.size());
    if (k == 0) throw DomainError("section descent needs at least one tail");
    return k - static_cast<unsigned>(direction_span(tc.directions));
}

P2Point concurrency_point(const std::vector<ProjLine2>& lines) {
    if (lines.size() < 2) throw DegenerateConfiguration("concurrency needs at least two lines");
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i] == lines[j])
                throw DegenerateConfiguration("lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                              " coincide");
    const P2Point p = intersect(lines[0], lines[1]);
    for (std::size_t i = 2; i < lines.size(); ++i)
        if (!lines[i].contains(p))
            throw DegenerateConfiguration("line " + lines[i].to_string() + " misses the common point " + p.to_string());
    return p;
}

namespace {

std::array<P1Point, 4> pencil_of(const std::array<ProjLine2, 4>& lines) {
    const P2Point base = concurrency_point({lines.begin(), lines.end()});
    return {pencil_coordinate(base, lines[0]), pencil_coordinate(base, lines[1]), pencil_coordinate(base, lines[2]),
            pencil_coordinate(base, lines[3])};
}

std::array<P1Point, 4> images_of(const HyperellipticCurve& curve, const std::array<CurvePoint, 4>& points) {
    std::array<P1Point, 4> img{curve.hyperelliptic_image(points[0]), curve.hyperelliptic_image(points[1]),
                               curve.hyperelliptic_image(points[2]), curve.hyperelliptic_image(points[3])};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (img[i] == img[j])
                throw DegenerateFiber("attaching points " + points[i].to_string() + " and " + points[j].to_string() +
                                      " lie in the same hyperelliptic fiber");
    return img;
}

}  // namespace

bool cross_ratio_match(const std::array<ProjLine2, 4>& lines, const HyperellipticCurve& curve,
                       const std::array<CurvePoint, 4>& points) {
    const auto pencil = pencil_of(lines);
    const auto img = images_of(curve, points);
    return cross_ratio(pencil[0], pencil[1], pencil[2], pencil[3]) == cross_ratio(img[0], img[1], img[2], img[3]);
}

std::vector<std::array<unsigned, 4>> cross_ratio_matching_permutations(const std::array<ProjLine2, 4>& lines,
                                                                       const HyperellipticCurve& curve,
                                                                       const std::array<CurvePoint, 4>& points) {
    const auto pencil = pencil_of(lines);
    const auto img = images_of(curve, points);
    const ExtendedRational target = cross_ratio(pencil[0], pencil[1], pencil[2], pencil[3]);
    std::vector<std::array<unsigned, 4>> out;
    std::array<unsigned, 4> s{0, 1, 2, 3};
    do {
        if (cross_ratio(img[s[0]], img[s[1]], img[s[2]], img[s[3]]) == target) out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

int intersection_dimension_from_strata(int stratum_dim, MarkedModuli space, int k) {
    if (k < 0) throw DomainError("number of markings must be >= 0");
    return stratum_dim + (space == MarkedModuli::M ? 3 + k : 2 + k);
}

}  // namespace g2maps

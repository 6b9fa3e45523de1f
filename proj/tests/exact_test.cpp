#include <gtest/gtest.h>

#include "g2maps/linalg.hpp"
#include "g2maps/polynomial.hpp"
#include "g2maps/projective.hpp"
#include "g2maps/series.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace g2maps;
using UP = UnivariatePolynomial;
using g2maps::testing::Gen;

namespace {
Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}
UP poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return UP(v);
}
}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("6/4"), q(3, 2));
    EXPECT_EQ(parse_rational("-7"), q(-7));
    EXPECT_EQ(to_string(q(3, 2)), "3/2");
    EXPECT_EQ(to_string(q(-4, 2)), "-2");
    EXPECT_THROW(parse_rational("1.5"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1/-2"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, PrintParseRoundTrip) {
    Gen g(11);
    for (int i = 0; i < 500; ++i) {
        const Rational r = g.rational(1000);
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}

TEST(Univariate, ArithmeticAndOrder) {
    const UP f = poly({0, 0, 1, 3});  // t^2 + 3 t^3
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(f.order(), 2u);
    EXPECT_EQ(f.evaluate(q(1)), q(4));
    EXPECT_EQ(f.derivative(), poly({0, 2, 9}));
    EXPECT_FALSE(UP().order().has_value());
    EXPECT_EQ(UP().degree(), -1);
}

TEST(Univariate, DivisionProperty) {
    Gen g(12);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> a(g.integer(1, 7)), b(g.integer(1, 4));
        for (auto& x : a) x = g.rational();
        for (auto& x : b) x = g.rational();
        b.back() = g.nonzero_rational();
        const UP A(a), B(b);
        const auto [quo, rem] = divmod(A, B);
        EXPECT_EQ(quo * B + rem, A);
        EXPECT_LT(rem.degree(), B.degree());
    }
}

TEST(Univariate, GcdAndSquarefree) {
    const UP a = poly({-1, 0, 1});  // (t-1)(t+1)
    const UP b = poly({1, -2, 1});  // (t-1)^2
    EXPECT_EQ(gcd(a, b), poly({-1, 1}));
    EXPECT_TRUE(is_squarefree(a));
    EXPECT_FALSE(is_squarefree(b));
    EXPECT_THROW(divide_exact(a, poly({2, 1})), Error);
}

TEST(Univariate, PolynomialDeterminant) {
    // [[t, 1], [1, t]] -> t^2 - 1
    std::vector<std::vector<UP>> m{{poly({0, 1}), poly({1})}, {poly({1}), poly({0, 1})}};
    EXPECT_EQ(determinant(m), poly({-1, 0, 1}));
}

TEST(Polynomial, ParseEvaluatePrint) {
    const std::vector<std::string> v{"x", "y", "z"};
    const Polynomial p = parse_polynomial("y*z^2 - x^3 + 1/2*x*z^2", v);
    EXPECT_EQ(p.total_degree(), 3u);
    EXPECT_EQ(p.evaluate({q(1), q(2), q(1)}), q(3, 2));
    EXPECT_EQ(parse_polynomial(p.to_string(), v), p);
    EXPECT_THROW(parse_polynomial("x + w", v), Error);
    EXPECT_THROW(parse_polynomial("x +", v), ParseError);
}

TEST(Polynomial, RingAxiomsProperty) {
    Gen g(13);
    const std::vector<std::string> v{"x", "y"};
    auto random_poly = [&] {
        Polynomial p(v);
        for (int i = 0; i < 4; ++i) p.add_term({static_cast<unsigned>(g.integer(0, 3)), static_cast<unsigned>(g.integer(0, 3))}, g.rational());
        return p;
    };
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = random_poly(), b = random_poly(), c = random_poly();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        const std::vector<Rational> pt{g.rational(), g.rational()};
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST(Series, TruncationSemantics) {
    const TruncatedSeries t = TruncatedSeries::monomial(4, 1, 1);
    TruncatedSeries p = t;
    for (int i = 0; i < 3; ++i) p *= t;  // t^4 vanishes mod t^4
    EXPECT_TRUE(p.is_zero());
    EXPECT_THROW(t + TruncatedSeries::monomial(5, 1, 1), Error);
}

TEST(Series, PolynomialOnBranches) {
    // x = t1 (+) t2, y = t1^2 (+) 0: x^2 - y vanishes on branch 1 only.
    const auto x = MultiBranchElement::from_terms(2, 6, {{0, 1, 1}, {1, 1, 1}});
    const auto y = MultiBranchElement::from_terms(2, 6, {{0, 2, 1}});
    const Polynomial f = parse_polynomial("x^2 - y", {"x", "y"});
    const auto val = evaluate_polynomial_on_branches(f, {{"x", x}, {"y", y}});
    EXPECT_TRUE(val.branch(0).is_zero());
    EXPECT_EQ(val.branch(1).order(), 2u);
    EXPECT_THROW(evaluate_polynomial_on_branches(f, {{"x", x}}), MissingBinding);
}

TEST(Linalg, SpanDeterminantAdjugate) {
    EXPECT_EQ(span_dimension({{q(1), q(2)}, {q(2), q(4)}}), 1u);
    EXPECT_EQ(span_dimension({}), 0u);
    EXPECT_THROW(span_dimension({{q(1)}, {q(1), q(2)}}), DimensionMismatch);
    Gen g(14);
    for (int i = 0; i < 100; ++i) {
        Matrix3 m;
        for (auto& row : m)
            for (auto& x : row) x = g.rational();
        const Matrix3 a = adjugate(m);
        const Rational det = determinant(m);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Rational s = 0;
                for (int k = 0; k < 3; ++k) s += m[r][k] * a[k][c];
                EXPECT_EQ(s, r == c ? det : Rational(0));
            }
    }
}

TEST(Projective, PointsAndLines) {
    const P2Point p({q(1), q(2), q(3)}), p2({q(2), q(4), q(6)});
    EXPECT_EQ(p, p2);
    EXPECT_THROW(P2Point({q(0), q(0), q(0)}), DomainError);
    const ProjLine2 l = ProjLine2::through(p, P2Point({q(0), q(0), q(1)}));
    EXPECT_TRUE(l.contains(p));
    EXPECT_THROW(ProjLine2::through(p, p2), DegenerateConfiguration);
    EXPECT_THROW(intersect(l, l), DegenerateConfiguration);
}

TEST(Projective, CrossRatioFixtures) {
    EXPECT_EQ(cross_ratio(p1_affine(0), p1_affine(1), p1_affine(2), p1_affine(3)), ExtendedRational(q(4, 3)));
    EXPECT_EQ(cross_ratio(p1_affine(0), p1_affine(1), p1_affine(2), p1_affine(4)), ExtendedRational(q(3, 2)));
    EXPECT_EQ(cross_ratio(p1_affine(0), p1_affine(1), p1_infinity(), p1_affine(2)), ExtendedRational(q(1, 2)));
    EXPECT_TRUE(cross_ratio(p1_affine(1), p1_affine(0), p1_infinity(), p1_affine(1)).is_infinite());
    EXPECT_THROW(cross_ratio(p1_affine(0), p1_affine(0), p1_affine(0), p1_affine(1)), DegenerateConfiguration);
}

TEST(Projective, CrossRatioMatchesAffineOracle) {
    Gen g(15);
    int checked = 0;
    while (checked < 300) {
        std::vector<std::optional<Rational>> raw;
        std::vector<P1Point> pts;
        for (int i = 0; i < 4; ++i) {
            const P1Point p = g.p1();
            pts.push_back(p);
            raw.push_back(p[1] == 0 ? std::nullopt : std::optional<Rational>(p[0] / p[1]));
        }
        bool distinct = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j) distinct = distinct && !(pts[i] == pts[j]);
        if (!distinct) continue;
        ++checked;
        const auto expected = oracle::cross_ratio_affine(raw);
        const ExtendedRational got = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        ASSERT_TRUE(expected.has_value());
        EXPECT_EQ(got, ExtendedRational(*expected));
    }
}

// Four points with at least three distinct, moved by a random invertible matrix.
TEST(Projective, CrossRatioMoebiusInvariance) {
    Gen g(29);
    int checked = 0;
    while (checked < 1000) {
        std::array<P1Point, 4> pts{g.p1(), g.p1(), g.p1(), g.p1()};
        if (g.integer(0, 5) == 0) pts[3] = pts[g.integer(0, 2)];
        ExtendedRational before = ExtendedRational::infinity();
        try {
            before = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        } catch (const DegenerateConfiguration&) {
            continue;
        }
        ++checked;
        const auto m = g.gl2();
        namespace t = g2maps::testing;
        const auto after =
            cross_ratio(t::apply(m, pts[0]), t::apply(m, pts[1]), t::apply(m, pts[2]), t::apply(m, pts[3]));
        EXPECT_EQ(after, before);
    }
}

TEST(Projective, PencilCoordinates) {
    const P2Point base({q(0), q(0), q(1)});
    EXPECT_EQ(pencil_coordinate(base, ProjLine2({q(0), q(1), q(0)})), P1Point({q(1), q(0)}));
    EXPECT_EQ(pencil_coordinate(base, ProjLine2({q(1), q(-1), q(0)})), P1Point({q(1), q(1)}));
    EXPECT_THROW(pencil_coordinate(base, ProjLine2({q(1), q(0), q(-1)})), IncidenceError);
}

TEST(Projective, Tangency) {
    const Conic2 parabola = Conic2::from_coefficients({q(1), q(0), q(0), q(0), q(-1), q(0)});  // x^2 - yz
    EXPECT_TRUE(line_tangent_to_conic(ProjLine2({q(0), q(1), q(0)}), parabola));
    EXPECT_FALSE(line_tangent_to_conic(ProjLine2({q(1), q(0), q(0)}), parabola));
    const Conic2 pair = Conic2::from_coefficients({q(1), q(0), q(-1), q(0), q(0), q(0)});
    EXPECT_THROW(line_tangent_to_conic(ProjLine2({q(0), q(1), q(0)}), pair), DegeneracyError);

    const Polynomial cubic = parse_polynomial("y*z^2 - x^3 + x*z^2", {"x", "y", "z"});
    EXPECT_TRUE(line_tangent_to_curve(ProjLine2({q(1), q(1), q(0)}), cubic));
    EXPECT_FALSE(line_tangent_to_curve(ProjLine2({q(0), q(1), q(0)}), cubic));
    // the conic as a curve agrees with the adjugate test
    const Polynomial conic = parse_polynomial("x^2 - y*z", {"x", "y", "z"});
    Gen g(16);
    for (int i = 0; i < 100; ++i) {
        const P2Point a = g.p2(3), b = g.p2(3);
        if (a == b) continue;
        const ProjLine2 l = ProjLine2::through(a, b);
        EXPECT_EQ(line_tangent_to_curve(l, conic), line_tangent_to_conic(l, parabola)) << l.to_string();
    }
}

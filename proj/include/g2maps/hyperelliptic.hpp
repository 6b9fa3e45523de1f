#pragma once

#include <optional>
#include <string>

#include "g2maps/projective.hpp"
#include "g2maps/rational.hpp"
#include "g2maps/univariate.hpp"

namespace g2maps {

/// Rational point of y^2 = f(x): affine, or one of the points over x = infinity.
/// Degree 5 has a single point at infinity (sheet 0); degree 6 has sheets 0 and 1.
class CurvePoint {
public:
    static CurvePoint affine(Rational x, Rational y) { return CurvePoint(false, std::move(x), std::move(y), 0); }
    static CurvePoint at_infinity(unsigned sheet = 0) { return CurvePoint(true, 0, 0, sheet); }

    bool is_infinite() const noexcept { return infinite_; }
    const Rational& x() const;
    const Rational& y() const;
    unsigned sheet() const noexcept { return sheet_; }

    std::string to_string() const;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    CurvePoint(bool inf, Rational x, Rational y, unsigned sheet)
        : infinite_(inf), x_(std::move(x)), y_(std::move(y)), sheet_(sheet) {}
    bool infinite_;
    Rational x_, y_;
    unsigned sheet_;
};

/// Genus-two curve y^2 = f(x), deg f in {5, 6}, f squarefree.
class HyperellipticCurve {
public:
    /// Throws DomainError on a bad degree or a repeated root.
    explicit HyperellipticCurve(UnivariatePolynomial f);

    const UnivariatePolynomial& f() const noexcept { return f_; }
    bool contains(const CurvePoint& p) const;

    /// Fixed by the involution. Off-curve points throw DomainError.
    bool is_weierstrass(const CurvePoint& p) const;
    CurvePoint involution(const CurvePoint& p) const;
    /// q is the involution of p and p != q.
    bool are_conjugate(const CurvePoint& p, const CurvePoint& q) const;
    /// (x:1), or (1:0) over infinity.
    P1Point hyperelliptic_image(const CurvePoint& p) const;

    /// Branch points of the x-projection with rational x, plus (1:0) for degree 5.
    std::vector<P1Point> rational_branch_points() const;

private:
    void require_on_curve(const CurvePoint& p) const;
    UnivariatePolynomial f_;
};

}  // namespace g2maps

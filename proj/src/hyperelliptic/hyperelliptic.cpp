#include "g2maps/hyperelliptic.hpp"

#include <set>

#include "g2maps/errors.hpp"

namespace g2maps {

const Rational& CurvePoint::x() const {
    if (infinite_) throw DomainError("point at infinity has no affine x");
    return x_;
}

const Rational& CurvePoint::y() const {
    if (infinite_) throw DomainError("point at infinity has no affine y");
    return y_;
}

std::string CurvePoint::to_string() const {
    if (infinite_) return "inf" + std::to_string(sheet_);
    return "(" + g2maps::to_string(x_) + ", " + g2maps::to_string(y_) + ")";
}

HyperellipticCurve::HyperellipticCurve(UnivariatePolynomial f) : f_(std::move(f)) {
    if (f_.degree() != 5 && f_.degree() != 6)
        throw DomainError("genus-two curve needs deg f in {5, 6}, got " + std::to_string(f_.degree()));
    if (!is_squarefree(f_)) throw DomainError("f = " + f_.to_string("x") + " has a repeated root");
}

bool HyperellipticCurve::contains(const CurvePoint& p) const {
    if (p.is_infinite()) return p.sheet() == 0 || (p.sheet() == 1 && f_.degree() == 6);
    return p.y() * p.y() == f_.evaluate(p.x());
}

void HyperellipticCurve::require_on_curve(const CurvePoint& p) const {
    if (!contains(p)) throw DomainError("point " + p.to_string() + " is not on y^2 = " + f_.to_string("x"));
}

bool HyperellipticCurve::is_weierstrass(const CurvePoint& p) const {
    require_on_curve(p);
    if (p.is_infinite()) return f_.degree() == 5;
    return p.y() == 0;
}

CurvePoint HyperellipticCurve::involution(const CurvePoint& p) const {
    require_on_curve(p);
    if (p.is_infinite()) return f_.degree() == 5 ? p : CurvePoint::at_infinity(1 - p.sheet());
    return CurvePoint::affine(p.x(), -p.y());
}

bool HyperellipticCurve::are_conjugate(const CurvePoint& p, const CurvePoint& q) const {
    require_on_curve(q);
    return p != q && involution(p) == q;
}

P1Point HyperellipticCurve::hyperelliptic_image(const CurvePoint& p) const {
    require_on_curve(p);
    return p.is_infinite() ? p1_infinity() : p1_affine(p.x());
}

std::vector<P1Point> HyperellipticCurve::rational_branch_points() const {
    // Rational roots r = a/b of the integral multiple of f: a | c_low, b | c_high.
    Integer den = common_denominator(f_.coefficients());
    std::vector<Integer> c;
    for (const auto& q : f_.coefficients()) c.push_back(Integer(q * den));
    std::vector<P1Point> out;
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) out.push_back(p1_affine(0));
    auto divisors = [](Integer n) {
        n = abs(n);
        std::vector<Integer> ds;
        for (Integer d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d * d != n) ds.push_back(Integer(n / d));
            }
        return ds;
    };
    std::set<Rational> seen;
    for (const auto& a : divisors(c[low]))
        for (const auto& b : divisors(c.back()))
            for (int sign : {1, -1}) {
                Rational r(Integer(sign * a), b);
                r.canonicalize();
                if (seen.insert(r).second && f_.evaluate(r) == 0) out.push_back(p1_affine(r));
            }
    if (f_.degree() == 5) out.push_back(p1_infinity());
    return out;
}

}  // namespace g2maps

#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "g2maps/errors.hpp"
#include "g2maps/linalg.hpp"
#include "g2maps/polynomial.hpp"
#include "g2maps/rational.hpp"
#include "g2maps/univariate.hpp"

namespace g2maps {

/// Point of P^(N-1) in homogeneous coordinates; equality is up to a nonzero scalar.
template <std::size_t N>
class ProjPoint {
public:
    explicit ProjPoint(std::array<Rational, N> coords) : coords_(std::move(coords)) {
        bool any = false;
        for (const auto& c : coords_) any = any || c != 0;
        if (!any) throw DomainError("homogeneous coordinates are all zero");
    }

    const std::array<Rational, N>& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    /// Representative whose last nonzero coordinate is 1.
    ProjPoint normalized() const {
        std::size_t j = N;
        while (coords_[--j] == 0) {}
        std::array<Rational, N> c = coords_;
        const Rational s = c[j];
        for (auto& x : c) x /= s;
        return ProjPoint(c);
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j)
                if (a.coords_[i] * b.coords_[j] != a.coords_[j] * b.coords_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < N; ++i) {
            if (i) s += ":";
            s += g2maps::to_string(coords_[i]);
        }
        return s + ")";
    }

private:
    std::array<Rational, N> coords_;
};

using P1Point = ProjPoint<2>;
using P2Point = ProjPoint<3>;

inline P1Point p1_infinity() { return P1Point({Rational(1), Rational(0)}); }
inline P1Point p1_affine(const Rational& x) { return P1Point({x, Rational(1)}); }

/// Line a*x + b*y + c*z = 0 in P^2.
class ProjLine2 {
public:
    explicit ProjLine2(std::array<Rational, 3> coefficients);

    const std::array<Rational, 3>& coefficients() const noexcept { return coeffs_; }
    bool contains(const P2Point& p) const { return dot(coeffs_, p.coords()) == 0; }

    /// Line through two distinct points.
    static ProjLine2 through(const P2Point& p, const P2Point& q);

    friend bool operator==(const ProjLine2& a, const ProjLine2& b) {
        return P2Point(a.coeffs_) == P2Point(b.coeffs_);
    }

    std::string to_string() const;

private:
    std::array<Rational, 3> coeffs_;
};

/// Intersection point of two distinct lines.
P2Point intersect(const ProjLine2& a, const ProjLine2& b);

/// Conic given by a symmetric 3x3 matrix, up to scalar.
class Conic2 {
public:
    explicit Conic2(const Matrix3& matrix);
    /// a x^2 + b xy + c y^2 + d xz + e yz + f z^2
    static Conic2 from_coefficients(const std::array<Rational, 6>& c);

    const Matrix3& matrix() const noexcept { return m_; }
    bool is_degenerate() const { return determinant(m_) == 0; }
    bool contains(const P2Point& p) const;
    /// Polar line of p; the tangent line when p lies on the conic.
    ProjLine2 polar(const P2Point& p) const;

private:
    Matrix3 m_;
};

/// Extended rational: a finite value or the point at infinity.
class ExtendedRational {
public:
    explicit ExtendedRational(Rational value) : finite_(true), value_(std::move(value)) {}
    static ExtendedRational infinity() { return ExtendedRational(); }

    bool is_infinite() const noexcept { return !finite_; }
    /// Throws DomainError when infinite.
    const Rational& value() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    std::string to_string() const { return finite_ ? g2maps::to_string(value_) : "inf"; }

private:
    ExtendedRational() = default;
    bool finite_ = false;
    Rational value_;
};

/// cr = det(p1,p3) det(p2,p4) / (det(p1,p4) det(p2,p3)), so that
/// cr(0, 1, inf, l) = (l - 1)/l. Needs at least three distinct points.
ExtendedRational cross_ratio(const P1Point& p1, const P1Point& p2, const P1Point& p3, const P1Point& p4);

/// Coordinates on the 2-dimensional quotient C^3 / <base>: the functionals
/// v_i - (b_i / b_j) v_j for i != j, where j is the last nonzero index of base.
std::array<Rational, 2> quotient_coordinates(const P2Point& base, const std::array<Rational, 3>& v);

/// Direction of a line through `base`, as a point of the pencil P^1.
/// Throws IncidenceError when the line misses base.
P1Point pencil_coordinate(const P2Point& base, const ProjLine2& line);

/// L^T adj(C) L == 0. Throws DegeneracyError for a degenerate conic.
bool line_tangent_to_conic(const ProjLine2& line, const Conic2& conic);

/// True iff the line meets the plane curve F(x, y, z) = 0 with multiplicity
/// at least 2 at some point, or lies on it. F must be a nonzero form in
/// variables named x, y, z.
bool line_tangent_to_curve(const ProjLine2& line, const Polynomial& form);

}  // namespace g2maps

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2maps/rational.hpp"

namespace g2maps {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 upward
/// with no trailing zeros (the zero polynomial has no coefficients).
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coefficients);

    static UnivariatePolynomial constant(const Rational& c);
    static UnivariatePolynomial monomial(const Rational& c, std::size_t exponent);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Lowest exponent with a nonzero coefficient; nullopt for zero.
    std::optional<std::size_t> order() const;

    /// Coefficient of t^i (zero beyond the degree).
    Rational coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& t) const;
    UnivariatePolynomial derivative() const;
    UnivariatePolynomial monic() const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const Rational& c);

    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a *= b; }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) { return a *= c; }
    UnivariatePolynomial operator-() const;

    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DomainError on a zero divisor.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                            const UnivariatePolynomial& b);

/// Division that must leave no remainder (throws DomainError otherwise).
UnivariatePolynomial divide_exact(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

/// gcd(f, f') is constant.
bool is_squarefree(const UnivariatePolynomial& f);

/// Determinant of a square matrix with polynomial entries (fraction-free Bareiss).
UnivariatePolynomial determinant(std::vector<std::vector<UnivariatePolynomial>> m);

}  // namespace g2maps

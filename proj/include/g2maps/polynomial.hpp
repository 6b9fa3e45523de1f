#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "g2maps/rational.hpp"

namespace g2maps {

using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial over Q in an ordered list of named variables.
/// Zero coefficients are never stored; every exponent vector has one entry per variable.
/// Binary operations require identical variable lists.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const Rational& c);
    static Polynomial variable(std::vector<std::string> variables, const std::string& name);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t index_of(const std::string& name) const;
    unsigned total_degree() const;

    /// Adds c * x^e (removing the term if it cancels).
    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    Polynomial operator-() const;
    Polynomial pow(unsigned n) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Evaluates at a point given in variable order.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Graded order, highest degree first, e.g. "x2^4 - x1^2*x2".
    std::string to_string() const;

private:
    void require_same_ring(const Polynomial& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// Parses sums of products of rationals, variables, powers and parentheses,
/// e.g. "x2*(x2^3 - x1^2)" or "1/2*y^2 - x*z". Unknown identifiers are errors.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace g2maps

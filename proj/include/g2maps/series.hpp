#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2maps/polynomial.hpp"
#include "g2maps/rational.hpp"

namespace g2maps {

/// Element of Q[t]/(t^N). Every result is re-truncated at N; combining
/// series of different N throws OrderMismatch.
class TruncatedSeries {
public:
    /// The zero series of order N (N >= 1).
    explicit TruncatedSeries(std::size_t truncation);
    /// Coefficients beyond N-1 are discarded.
    TruncatedSeries(std::size_t truncation, std::vector<Rational> coefficients);

    static TruncatedSeries monomial(std::size_t truncation, const Rational& c, std::size_t exponent);

    std::size_t truncation() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// Lowest exponent with nonzero coefficient; nullopt for the zero class.
    std::optional<std::size_t> order() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    std::string to_string(const std::string& var) const;

private:
    void require_same_order(const TruncatedSeries& o) const;
    std::vector<Rational> coeffs_;
};

/// One truncated series per branch: an element of Q[t_1]/(t_1^N) x ... x Q[t_m]/(t_m^N).
class MultiBranchElement {
public:
    MultiBranchElement(std::size_t branches, std::size_t truncation);
    explicit MultiBranchElement(std::vector<TruncatedSeries> branches);

    /// The constant c on every branch.
    static MultiBranchElement constant(std::size_t branches, std::size_t truncation, const Rational& c);

    struct Term {
        std::size_t branch;  ///< 0-based branch index
        std::size_t exponent;
        Rational coefficient;
    };
    /// Sum of coefficient * t_branch^exponent, e.g. t_1 (+) 0 (+) t_3^3.
    static MultiBranchElement from_terms(std::size_t branches, std::size_t truncation, const std::vector<Term>& terms);

    std::size_t branch_count() const noexcept { return branches_.size(); }
    std::size_t truncation() const noexcept { return truncation_; }
    const TruncatedSeries& branch(std::size_t i) const { return branches_.at(i); }

    bool is_zero() const;

    MultiBranchElement& operator+=(const MultiBranchElement& o);
    MultiBranchElement& operator-=(const MultiBranchElement& o);
    MultiBranchElement& operator*=(const MultiBranchElement& o);
    MultiBranchElement& operator*=(const Rational& c);

    friend MultiBranchElement operator+(MultiBranchElement a, const MultiBranchElement& b) { return a += b; }
    friend MultiBranchElement operator-(MultiBranchElement a, const MultiBranchElement& b) { return a -= b; }
    friend MultiBranchElement operator*(MultiBranchElement a, const MultiBranchElement& b) { return a *= b; }
    friend MultiBranchElement operator*(MultiBranchElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const MultiBranchElement& a, const MultiBranchElement& b) = default;

    MultiBranchElement pow(unsigned n) const;

    /// "t1 (+) 0 (+) t3^3"
    std::string to_string() const;

private:
    void require_compatible(const MultiBranchElement& o) const;
    std::size_t truncation_;
    std::vector<TruncatedSeries> branches_;
};

using BranchAssignment = std::map<std::string, MultiBranchElement>;

/// Substitutes multi-branch elements for the variables of p. Every variable
/// must be bound (MissingBinding) and all bindings must share branch count and
/// truncation order.
MultiBranchElement evaluate_polynomial_on_branches(const Polynomial& p, const BranchAssignment& assignment);

}  // namespace g2maps

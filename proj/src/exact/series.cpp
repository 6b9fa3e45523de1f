#include "g2maps/series.hpp"

#include <algorithm>
#include <sstream>

#include "g2maps/errors.hpp"

namespace g2maps {

TruncatedSeries::TruncatedSeries(std::size_t truncation) : coeffs_(truncation) {
    if (truncation == 0) throw DomainError("truncation order must be positive");
}

TruncatedSeries::TruncatedSeries(std::size_t truncation, std::vector<Rational> coefficients)
    : TruncatedSeries(truncation) {
    const std::size_t n = std::min(truncation, coefficients.size());
    for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coefficients[i]);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t truncation, const Rational& c, std::size_t exponent) {
    TruncatedSeries s(truncation);
    if (exponent < truncation) s.coeffs_[exponent] = c;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<std::size_t> TruncatedSeries::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return std::nullopt;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
    if (o.truncation() != truncation())
        throw OrderMismatch("truncated series of orders " + std::to_string(truncation()) + " and " +
                            std::to_string(o.truncation()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    require_same_order(o);
    const std::size_t n = coeffs_.size();
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (Rational& x : coeffs_) x *= c;
    return *this;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1) {
            os << g2maps::to_string(mag);
            if (k > 0) os << "*";
        }
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

MultiBranchElement::MultiBranchElement(std::size_t branches, std::size_t truncation)
    : truncation_(truncation), branches_(branches, TruncatedSeries(truncation)) {
    if (branches == 0) throw DomainError("a multi-branch element needs at least one branch");
}

MultiBranchElement::MultiBranchElement(std::vector<TruncatedSeries> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) throw DomainError("a multi-branch element needs at least one branch");
    truncation_ = branches_.front().truncation();
    for (const auto& b : branches_)
        if (b.truncation() != truncation_) throw OrderMismatch("branches with different truncation orders");
}

MultiBranchElement MultiBranchElement::constant(std::size_t branches, std::size_t truncation, const Rational& c) {
    MultiBranchElement e(branches, truncation);
    for (auto& b : e.branches_) b = TruncatedSeries::monomial(truncation, c, 0);
    return e;
}

MultiBranchElement MultiBranchElement::from_terms(std::size_t branches, std::size_t truncation,
                                                  const std::vector<Term>& terms) {
    MultiBranchElement e(branches, truncation);
    for (const Term& t : terms) {
        if (t.branch >= branches) throw DomainError("branch index out of range");
        e.branches_[t.branch] += TruncatedSeries::monomial(truncation, t.coefficient, t.exponent);
    }
    return e;
}

bool MultiBranchElement::is_zero() const {
    return std::all_of(branches_.begin(), branches_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
}

void MultiBranchElement::require_compatible(const MultiBranchElement& o) const {
    if (o.branch_count() != branch_count())
        throw DimensionMismatch("multi-branch elements with different branch counts");
    if (o.truncation() != truncation()) throw OrderMismatch("multi-branch elements with different truncation orders");
}

MultiBranchElement& MultiBranchElement::operator+=(const MultiBranchElement& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < branches_.size(); ++i) branches_[i] += o.branches_[i];
    return *this;
}

MultiBranchElement& MultiBranchElement::operator-=(const MultiBranchElement& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < branches_.size(); ++i) branches_[i] -= o.branches_[i];
    return *this;
}

MultiBranchElement& MultiBranchElement::operator*=(const MultiBranchElement& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < branches_.size(); ++i) branches_[i] *= o.branches_[i];
    return *this;
}

MultiBranchElement& MultiBranchElement::operator*=(const Rational& c) {
    for (auto& b : branches_) b *= c;
    return *this;
}

MultiBranchElement MultiBranchElement::pow(unsigned n) const {
    MultiBranchElement result = constant(branch_count(), truncation(), 1);
    for (unsigned k = 0; k < n; ++k) result *= *this;
    return result;
}

std::string MultiBranchElement::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i > 0) os << " (+) ";
        os << branches_[i].to_string("t" + std::to_string(i + 1));
    }
    return os.str();
}

MultiBranchElement evaluate_polynomial_on_branches(const Polynomial& p, const BranchAssignment& assignment) {
    std::vector<const MultiBranchElement*> values;
    values.reserve(p.variables().size());
    for (const auto& v : p.variables()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw MissingBinding("no value assigned to variable '" + v + "'");
        values.push_back(&it->second);
    }
    if (assignment.empty()) throw MissingBinding("empty assignment: branch shape undetermined");
    const MultiBranchElement& shape = assignment.begin()->second;
    for (const auto& [name, value] : assignment) {
        if (value.branch_count() != shape.branch_count())
            throw DimensionMismatch("assignments with different branch counts");
        if (value.truncation() != shape.truncation())
            throw OrderMismatch("assignments with different truncation orders");
    }

    MultiBranchElement acc(shape.branch_count(), shape.truncation());
    for (const auto& [e, c] : p.terms()) {
        MultiBranchElement term = MultiBranchElement::constant(shape.branch_count(), shape.truncation(), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term *= values[i]->pow(e[i]);
        acc += term;
    }
    return acc;
}

}  // namespace g2maps

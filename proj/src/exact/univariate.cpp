#include "g2maps/univariate.hpp"

#include <sstream>

#include "g2maps/errors.hpp"

namespace g2maps {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) { return UnivariatePolynomial({c}); }

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return UnivariatePolynomial(std::move(v));
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> UnivariatePolynomial::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return std::nullopt;
}

Rational UnivariatePolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UnivariatePolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / leading_coefficient();
    return *this * inv;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const UnivariatePolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& c) {
    for (Rational& x : coeffs_) x *= c;
    trim();
    return *this;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    UnivariatePolynomial r = *this;
    for (Rational& x : r.coeffs_) x = -x;
    return r;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << g2maps::to_string(mag);
            if (k > 0) os << "*";
        }
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                            const UnivariatePolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const int db = b.degree();
    const Rational lb = b.leading_coefficient();
    if (a.degree() < db) return {UnivariatePolynomial{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        const Rational q = rem[static_cast<std::size_t>(k)] / lb;
        if (q == 0) continue;
        quo[static_cast<std::size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
    }
    return {UnivariatePolynomial(std::move(quo)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial divide_exact(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
    while (!b.is_zero()) {
        UnivariatePolynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const UnivariatePolynomial& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

UnivariatePolynomial determinant(std::vector<std::vector<UnivariatePolynomial>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("determinant of a non-square matrix");
    if (n == 0) return UnivariatePolynomial::constant(1);
    bool negate = false;
    UnivariatePolynomial prev = UnivariatePolynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return {};
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UnivariatePolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace g2maps

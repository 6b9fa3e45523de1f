#include "g2maps/projective.hpp"

#include <vector>

namespace g2maps {

ProjLine2::ProjLine2(std::array<Rational, 3> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0) throw DomainError("line with all-zero coefficients");
}

ProjLine2 ProjLine2::through(const P2Point& p, const P2Point& q) {
    if (p == q) throw DegenerateConfiguration("line through a repeated point");
    return ProjLine2(cross(p.coords(), q.coords()));
}

std::string ProjLine2::to_string() const {
    return "[" + g2maps::to_string(coeffs_[0]) + ":" + g2maps::to_string(coeffs_[1]) + ":" +
           g2maps::to_string(coeffs_[2]) + "]";
}

P2Point intersect(const ProjLine2& a, const ProjLine2& b) {
    if (a == b) throw DegenerateConfiguration("intersection of a line with itself");
    return P2Point(cross(a.coefficients(), b.coefficients()));
}

Conic2::Conic2(const Matrix3& matrix) : m_(matrix) {
    bool any = false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (m_[i][j] != m_[j][i]) throw DomainError("conic matrix must be symmetric");
            any = any || m_[i][j] != 0;
        }
    if (!any) throw DomainError("conic with all-zero matrix");
}

Conic2 Conic2::from_coefficients(const std::array<Rational, 6>& c) {
    const Rational half(1, 2);
    Matrix3 m;
    m[0][0] = c[0];
    m[1][1] = c[2];
    m[2][2] = c[5];
    m[0][1] = m[1][0] = c[1] * half;
    m[0][2] = m[2][0] = c[3] * half;
    m[1][2] = m[2][1] = c[4] * half;
    return Conic2(m);
}

bool Conic2::contains(const P2Point& p) const {
    const auto& v = p.coords();
    Rational acc = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += v[i] * m_[i][j] * v[j];
    return acc == 0;
}

ProjLine2 Conic2::polar(const P2Point& p) const {
    std::array<Rational, 3> l;
    for (int i = 0; i < 3; ++i) l[i] = m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2];
    return ProjLine2(l);
}

const Rational& ExtendedRational::value() const {
    if (!finite_) throw DomainError("value of an infinite extended rational");
    return value_;
}

namespace {

Rational bracket(const P1Point& a, const P1Point& b) { return det2(a[0], a[1], b[0], b[1]); }

}  // namespace

ExtendedRational cross_ratio(const P1Point& p1, const P1Point& p2, const P1Point& p3, const P1Point& p4) {
    const std::array<const P1Point*, 4> pts{&p1, &p2, &p3, &p4};
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j) seen = seen || *pts[i] == *pts[j];
        if (!seen) ++distinct;
    }
    if (distinct < 3) throw DegenerateConfiguration("cross-ratio needs at least three distinct points");

    const Rational num = bracket(p1, p3) * bracket(p2, p4);
    const Rational den = bracket(p1, p4) * bracket(p2, p3);
    if (den == 0) return ExtendedRational::infinity();
    return ExtendedRational(num / den);
}

std::array<Rational, 2> quotient_coordinates(const P2Point& base, const std::array<Rational, 3>& v) {
    std::size_t j = 2;
    while (base[j] == 0) --j;
    std::array<Rational, 2> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == j) continue;
        out[k++] = v[i] - base[i] / base[j] * v[j];
    }
    return out;
}

P1Point pencil_coordinate(const P2Point& base, const ProjLine2& line) {
    if (!line.contains(base))
        throw IncidenceError("line " + line.to_string() + " does not pass through " + base.to_string());
    // line x base lies on the line and is orthogonal to base, hence never
    // proportional to it over Q.
    return P1Point(quotient_coordinates(base, cross(line.coefficients(), base.coords())));
}

bool line_tangent_to_conic(const ProjLine2& line, const Conic2& conic) {
    if (conic.is_degenerate()) throw DegeneracyError("tangency test against a degenerate conic");
    const Matrix3 adj = adjugate(conic.matrix());
    const auto& l = line.coefficients();
    Rational q = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q += l[i] * adj[i][j] * l[j];
    return q == 0;
}

bool line_tangent_to_curve(const ProjLine2& line, const Polynomial& form) {
    if (form.is_zero()) throw DomainError("zero form");
    const std::size_t ix = form.index_of("x"), iy = form.index_of("y"), iz = form.index_of("z");
    if (form.variables().size() != 3) throw DomainError("plane curve must be a form in x, y, z");
    const unsigned d = form.total_degree();
    for (const auto& [e, c] : form.terms())
        if (e[0] + e[1] + e[2] != d) throw DomainError("plane curve equation is not homogeneous");

    // Two distinct points of the line, taken from the kernel of its coefficient row.
    const auto& l = line.coefficients();
    std::vector<std::array<Rational, 3>> candidates = {
        {l[1], -l[0], Rational(0)}, {l[2], Rational(0), -l[0]}, {Rational(0), l[2], -l[1]}};
    std::vector<std::array<Rational, 3>> basis;
    for (const auto& c : candidates) {
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        if (basis.empty() || !(P2Point(basis[0]) == P2Point(c))) basis.push_back(c);
        if (basis.size() == 2) break;
    }
    const auto& p = basis[0];
    const auto& q = basis[1];

    // h(u) = F(u p + q); the point p (u = infinity) has multiplicity d - deg h.
    std::array<UnivariatePolynomial, 3> coord;
    for (int i = 0; i < 3; ++i) coord[i] = UnivariatePolynomial({q[i], p[i]});
    UnivariatePolynomial h;
    for (const auto& [e, c] : form.terms()) {
        UnivariatePolynomial term = UnivariatePolynomial::constant(c);
        for (unsigned k = 0; k < e[ix]; ++k) term *= coord[0];
        for (unsigned k = 0; k < e[iy]; ++k) term *= coord[1];
        for (unsigned k = 0; k < e[iz]; ++k) term *= coord[2];
        h += term;
    }
    if (h.is_zero()) return true;
    if (static_cast<int>(d) - h.degree() >= 2) return true;
    if (h.degree() <= 0) return false;
    return !is_squarefree(h);
}

}  // namespace g2maps

#include <algorithm>
#include <numeric>
#include <sstream>

#include "g2maps/singularities.hpp"

namespace g2maps {

namespace {

unsigned exponent_gcd(const UnivariatePolynomial& p, unsigned g) {
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        if (p.coefficients()[i] != 0) g = std::gcd(g, static_cast<unsigned>(i));
    return g;
}

UnivariatePolynomial strip_t(const UnivariatePolynomial& p) {
    const std::size_t v = p.order().value_or(0);
    return divide_exact(p, UnivariatePolynomial::monomial(Rational(1), v));
}

// Res_s(a(t) - b(s), c(t) - d(s)) with b nonconstant: Sylvester matrix over Q[t].
UnivariatePolynomial parametric_resultant(const UnivariatePolynomial& a, const UnivariatePolynomial& b,
                                          const UnivariatePolynomial& c, const UnivariatePolynomial& d) {
    auto coefficients_in_s = [](const UnivariatePolynomial& in_t, const UnivariatePolynomial& in_s) {
        std::vector<UnivariatePolynomial> cs(static_cast<std::size_t>(std::max(in_s.degree(), 0)) + 1);
        for (std::size_t i = 0; i < in_s.coefficients().size(); ++i)
            cs[i] = UnivariatePolynomial::constant(-in_s.coefficients()[i]);
        cs[0] += in_t;
        while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
        return cs;
    };
    const auto p = coefficients_in_s(a, b);
    const auto q = coefficients_in_s(c, d);
    const std::size_t n = p.size() - 1, m = q.size() - 1;
    if (m == 0) {
        UnivariatePolynomial r = UnivariatePolynomial::constant(1);
        for (std::size_t i = 0; i < n; ++i) r *= q[0];
        return r;
    }
    const std::size_t size = n + m;
    std::vector<std::vector<UnivariatePolynomial>> sylvester(size, std::vector<UnivariatePolynomial>(size));
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t i = 0; i <= n; ++i) sylvester[row][row + i] = p[n - i];
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t i = 0; i <= m; ++i) sylvester[m + row][row + i] = q[m - i];
    return determinant(std::move(sylvester));
}

}  // namespace

PlanarBranch::PlanarBranch(UnivariatePolynomial x, UnivariatePolynomial y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.is_zero() && y_.is_zero()) throw DomainError("branch with both coordinates zero");
    if (x_.coefficient(0) != 0 || y_.coefficient(0) != 0)
        throw DomainError("branch " + to_string() + " does not pass through the origin at t = 0");
    if (exponent_gcd(y_, exponent_gcd(x_, 0)) > 1)
        throw DomainError("branch " + to_string() + " is not primitively parametrized");
    const UnivariatePolynomial common = gcd(x_, y_);
    if (strip_t(common).degree() > 0)
        throw DomainError("branch " + to_string() + " passes through the origin at a second parameter value");
}

std::string PlanarBranch::to_string() const { return "(" + x_.to_string("t") + ", " + y_.to_string("t") + ")"; }

unsigned IntersectionNumber::value() const {
    if (infinite_) throw DomainError("infinite intersection number has no value");
    return value_;
}

IntersectionNumber intersection_multiplicity(const PlanarBranch& b1, const PlanarBranch& b2) {
    UnivariatePolynomial x1 = b1.x(), y1 = b1.y(), x2 = b2.x(), y2 = b2.y();
    if (x2.is_zero() || (!y2.is_zero() && *x2.order() > *y2.order())) {
        std::swap(x1, y1);
        std::swap(x2, y2);
    }
    const UnivariatePolynomial r = parametric_resultant(x1, x2, y1, y2);
    if (r.is_zero()) return IntersectionNumber::infinite();
    return IntersectionNumber::finite(static_cast<unsigned>(*r.order()));
}

std::string BranchType::to_string() const {
    switch (kind) {
        case Kind::Smooth: return "smooth";
        case Kind::Cusp: return "cusp(2," + std::to_string(2 * k + 1) + ")";
        case Kind::E6: return "cusp(3,4)";
    }
    return {};
}

BranchType branch_type(const PlanarBranch& b) {
    UnivariatePolynomial u = b.x(), v = b.y();
    if (u.is_zero() || (!v.is_zero() && *u.order() > *v.order())) std::swap(u, v);
    // ord u <= ord v; remove from v the powers of u that share its order.
    const std::size_t n = *u.order();
    if (n == 1) return {BranchType::Kind::Smooth, 0};
    for (int step = 0; step < 64; ++step) {
        if (v.is_zero()) break;
        const std::size_t m = *v.order();
        if (m % n != 0) break;
        UnivariatePolynomial power = UnivariatePolynomial::constant(1);
        for (std::size_t i = 0; i < m / n; ++i) power *= u;
        v -= power * Rational(v.coefficient(m) / power.coefficient(m));
    }
    if (v.is_zero() || *v.order() % n == 0)
        throw UnclassifiedGerm("branch " + b.to_string() + " has no characteristic exponent in range", std::nullopt);
    const std::size_t m = *v.order();
    if (n == 2) return {BranchType::Kind::Cusp, static_cast<unsigned>((m - 1) / 2)};
    if (n == 3 && m == 4) return {BranchType::Kind::E6, 0};
    throw UnclassifiedGerm("branch " + b.to_string() + " of type (" + std::to_string(n) + "," + std::to_string(m) +
                               ") is outside the catalog",
                           std::nullopt);
}

std::string GermSignature::to_string() const {
    std::ostringstream os;
    os << "r=" << branch_count << " types=[";
    for (std::size_t i = 0; i < branch_types.size(); ++i) os << (i ? "," : "") << branch_types[i].to_string();
    os << "] contacts=[";
    for (std::size_t i = 0; i < contacts.size(); ++i) os << (i ? "," : "") << contacts[i];
    os << "] delta=" << delta << " mu=" << milnor;
    return os.str();
}

GermSignature germ_signature(const std::vector<PlanarBranch>& branches) {
    if (branches.empty()) throw DomainError("germ with no branches");
    GermSignature sig{static_cast<unsigned>(branches.size()), {}, {}, 0, 0};
    for (const auto& b : branches) {
        sig.branch_types.push_back(branch_type(b));
        sig.delta += sig.branch_types.back().delta();
    }
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            const IntersectionNumber c = intersection_multiplicity(branches[i], branches[j]);
            if (c.is_infinite())
                throw UnclassifiedGerm("branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                           " coincide",
                                       std::nullopt);
            sig.contacts.push_back(c.value());
            sig.delta += c.value();
        }
    std::sort(sig.contacts.begin(), sig.contacts.end());
    sig.milnor = 2 * static_cast<int>(sig.delta) - static_cast<int>(sig.branch_count) + 1;
    return sig;
}

SingularityType classify_germ(const std::vector<PlanarBranch>& branches) {
    const GermSignature sig = germ_signature(branches);
    using K = BranchType::Kind;
    const auto& types = sig.branch_types;
    const auto smooth_count = static_cast<unsigned>(
        std::count_if(types.begin(), types.end(), [](const BranchType& t) { return t.kind == K::Smooth; }));

    if (sig.branch_count == 1) {
        if (types[0].kind == K::Cusp) return SingularityType::A(2 * types[0].k);
        if (types[0].kind == K::E6) return SingularityType::E(6);
    } else if (sig.branch_count == 2) {
        const unsigned c = sig.contacts[0];
        if (smooth_count == 2) return SingularityType::A(2 * c - 1);
        if (smooth_count == 1) {
            const BranchType& cusp = types[0].kind == K::Smooth ? types[1] : types[0];
            if (cusp.kind == K::Cusp && c == 2) return SingularityType::D(2 * cusp.k + 3);
            if (cusp.kind == K::Cusp && cusp.k == 1 && c == 3) return SingularityType::E(7);
        }
    } else if (smooth_count == sig.branch_count) {
        if (sig.branch_count == 3 && sig.contacts[0] == 1 && sig.contacts[1] == 1)
            return SingularityType::D(2 * sig.contacts[2] + 2);
        if (sig.contacts.back() == 1) return SingularityType::ordinary_planar_m_fold(sig.branch_count);
    }
    throw UnclassifiedGerm("no catalog germ with signature " + sig.to_string(), sig);
}

std::vector<PlanarBranch> planar_branches(const GorensteinPresentation& p) {
    if (p.branch_generators.size() != 2)
        throw DomainError(p.type.to_string() + " has " + std::to_string(p.branch_generators.size()) +
                          " generators, not a plane germ");
    std::vector<PlanarBranch> out;
    for (std::size_t i = 0; i < p.branch_generators[0].size(); ++i)
        out.emplace_back(p.branch_generators[0][i], p.branch_generators[1][i]);
    return out;
}

}  // namespace g2maps

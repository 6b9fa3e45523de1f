#include "g2maps/singularities.hpp"

namespace g2maps {

namespace {

using Branchwise = std::vector<UnivariatePolynomial>;

UnivariatePolynomial t_pow(std::size_t e) { return UnivariatePolynomial::monomial(Rational(1), e); }

std::vector<std::string> indexed_names(const std::string& stem, unsigned count) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

MultiBranchElement truncate(const Branchwise& exact, std::size_t n) {
    std::vector<TruncatedSeries> series;
    series.reserve(exact.size());
    for (const auto& p : exact) series.emplace_back(n, p.coefficients());
    return MultiBranchElement(std::move(series));
}

GorensteinPresentation assemble(SingularityType type, std::vector<std::string> names,
                                std::vector<Branchwise> exact, const std::vector<std::string>& equations,
                                std::size_t n, std::vector<std::size_t> special, std::string label) {
    GorensteinPresentation p{std::move(type), std::move(names), std::move(exact), {}, {}, n, std::move(special),
                             std::move(label)};
    for (const auto& g : p.branch_generators) p.generators.push_back(truncate(g, n));
    for (const auto& e : equations) p.equations.push_back(parse_polynomial(e, p.generator_names));
    return p;
}

std::string x(unsigned i) { return "x" + std::to_string(i); }

// x_i (x_j - x_k) for i in [i_max], j < k in [hi] \ {i}
void append_difference_relations(std::vector<std::string>& eqs, unsigned i_max, unsigned hi) {
    for (unsigned i = 1; i <= i_max; ++i)
        for (unsigned j = 1; j <= hi; ++j)
            for (unsigned k = j + 1; k <= hi; ++k)
                if (j != i && k != i) eqs.push_back(x(i) + "*(" + x(j) + " - " + x(k) + ")");
}

}  // namespace

GorensteinPresentation type_I_presentation(unsigned m) {
    if (m < 1) throw DomainError("type I presentation needs m >= 1");
    if (m == 1) {
        // x^5 - y^2 vanishes to order 10 along (t^2, t^5); N = 11 keeps the check meaningful.
        return assemble(SingularityType::genus_two_type_I(1), {"x", "y"}, {{t_pow(2)}, {t_pow(5)}},
                        {"x^5 - y^2"}, 11, {1}, "A4");
    }
    std::vector<Branchwise> gens(m, Branchwise(m));
    for (unsigned i = 0; i + 1 < m; ++i) {
        gens[i][i] = t_pow(1);
        gens[i][m - 1] = t_pow(3);
    }
    gens[m - 1][m - 1] = t_pow(2);

    std::vector<std::string> eqs;
    std::string label;
    if (m == 2) {
        eqs = {"x2*(x2^3 - x1^2)"};
        label = "D5";
    } else if (m == 3) {
        eqs = {"x3*(x1 - x2)", "x3^3 - x1*x2"};
    } else {
        eqs = {x(m) + "^3 - x1*x2"};
        append_difference_relations(eqs, m, m - 1);
    }
    return assemble(SingularityType::genus_two_type_I(m), indexed_names("x", m), std::move(gens), eqs, 4, {m},
                    label);
}

GorensteinPresentation type_II_presentation(unsigned m) {
    if (m < 2) throw DomainError("type II presentation needs m >= 2");
    if (m == 2) {
        return assemble(SingularityType::genus_two_type_II(2), {"x1", "y"},
                        {{t_pow(1), t_pow(1)}, {UnivariatePolynomial(), t_pow(3)}}, {"y*(y - x1^3)"}, 3, {}, "A5");
    }
    std::vector<Branchwise> gens(m - 1, Branchwise(m));
    gens[0][0] = t_pow(1);
    gens[0][m - 1] = t_pow(1);
    for (unsigned i = 1; i + 1 < m; ++i) {
        gens[i][i] = t_pow(1);
        gens[i][m - 1] = t_pow(2);
    }
    std::vector<std::string> eqs;
    std::string label;
    if (m == 3) {
        eqs = {"x1*x2*(x2 - x1^2)"};
        label = "D6";
    } else {
        eqs = {"x3*(x1^2 - x2)"};
        append_difference_relations(eqs, m - 1, m - 1);
    }
    return assemble(SingularityType::genus_two_type_II(m), indexed_names("x", m - 1), std::move(gens), eqs, 3,
                    {1, m}, label);
}

bool verify_presentation(const GorensteinPresentation& p) {
    const std::size_t gens = p.generator_names.size();
    if (p.generators.size() != gens || p.branch_generators.size() != gens) return false;

    // Truncated generators must be the N-jets of the exact ones.
    for (std::size_t g = 0; g < gens; ++g)
        if (!(p.generators[g] == truncate(p.branch_generators[g], p.truncation))) return false;

    BranchAssignment assignment;
    for (std::size_t g = 0; g < gens; ++g) assignment.emplace(p.generator_names[g], p.generators[g]);
    for (const auto& eq : p.equations)
        if (!evaluate_polynomial_on_branches(eq, assignment).is_zero()) return false;
    return true;
}

std::vector<Polynomial> tailed_ribbon_local_ideal(unsigned m) {
    std::vector<std::string> vars = indexed_names("x", m);
    vars.push_back("y");
    std::vector<Polynomial> products, differences;
    const Polynomial y = Polynomial::variable(vars, "y");
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = i + 1; j <= m; ++j) {
            const Polynomial xi = Polynomial::variable(vars, x(i));
            const Polynomial xj = Polynomial::variable(vars, x(j));
            products.push_back(xi * xj);
            differences.push_back((xi - xj) * y);
        }
    products.insert(products.end(), differences.begin(), differences.end());
    return products;
}

int ribbon_genus(unsigned k, const std::vector<unsigned>& multiplicities) {
    if (multiplicities.size() != k)
        throw DimensionMismatch("ribbon with " + std::to_string(k) + " tails given " +
                                std::to_string(multiplicities.size()) + " multiplicities");
    // 0 -> O(k-3) -> O_R -> O_P1 -> 0
    const int chi_ideal = static_cast<int>(k) - 3 + 1;
    const int chi_ribbon = chi_ideal + 1;
    // 0 -> O_C -> O_R + sum O_P1^{m_i} -> sum (C^{m_i - 1} + C[eps]) -> 0
    int chi_middle = chi_ribbon, chi_quotient = 0;
    for (unsigned m : multiplicities) {
        if (m < 1) throw DomainError("tail multiplicities must be >= 1");
        chi_middle += static_cast<int>(m);
        chi_quotient += static_cast<int>(m) - 1 + 2;
    }
    return 1 - (chi_middle - chi_quotient);
}

}  // namespace g2maps

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2maps/errors.hpp"
#include "g2maps/polynomial.hpp"
#include "g2maps/series.hpp"
#include "g2maps/univariate.hpp"

namespace g2maps {

/// Tagged union of the singularity types the library names.
class SingularityType {
public:
    enum class Kind { A, D, E, GenusTwoTypeI, GenusTwoTypeII, EllipticMFold, RationalMFold, OrdinaryPlanarMFold, TailedRibbon };

    static SingularityType ade(char letter, unsigned index);
    static SingularityType A(unsigned n) { return ade('A', n); }
    static SingularityType D(unsigned n) { return ade('D', n); }
    static SingularityType E(unsigned n) { return ade('E', n); }
    static SingularityType genus_two_type_I(unsigned m);
    static SingularityType genus_two_type_II(unsigned m);
    static SingularityType elliptic_m_fold(unsigned m);
    static SingularityType rational_m_fold(unsigned m);
    static SingularityType ordinary_planar_m_fold(unsigned m);
    static SingularityType tailed_ribbon(std::vector<unsigned> multiplicities);

    Kind kind() const noexcept { return kind_; }
    bool is_ade() const noexcept { return kind_ == Kind::A || kind_ == Kind::D || kind_ == Kind::E; }
    /// ADE index, or the branch count m for the m-fold and genus-two kinds,
    /// or the tail count k for ribbons.
    unsigned index() const noexcept { return index_; }
    const std::vector<unsigned>& tail_multiplicities() const noexcept { return tails_; }

    /// Milnor number of an ADE type (its index); DomainError otherwise.
    unsigned milnor_number() const;

    /// "A4", "D5", "E6", "type I (m=2)", "type II (m=3)", "elliptic 3-fold point",
    /// "rational 3-fold point", "planar 4-fold point", "tailed ribbon (1,1,1,1)".
    std::string to_string() const;
    /// Inverse of to_string; throws ParseError.
    static SingularityType parse(const std::string& text);

    friend bool operator==(const SingularityType&, const SingularityType&) = default;
    friend auto operator<=>(const SingularityType&, const SingularityType&) = default;

private:
    SingularityType(Kind k, unsigned index, std::vector<unsigned> tails = {})
        : kind_(k), index_(index), tails_(std::move(tails)) {}
    Kind kind_;
    unsigned index_;
    std::vector<unsigned> tails_;
};

/// Generators, equations and truncation order of one genus-two Gorenstein
/// singularity. `branch_generators[g][i]` is generator g on branch i as an
/// exact polynomial in t_i; `generators` holds the same data truncated at N.
struct GorensteinPresentation {
    SingularityType type;
    std::vector<std::string> generator_names;
    std::vector<std::vector<UnivariatePolynomial>> branch_generators;
    std::vector<MultiBranchElement> generators;
    std::vector<Polynomial> equations;
    std::size_t truncation;
    std::vector<std::size_t> special_branches;  ///< 1-based
    std::string label;                           ///< planar name from the table ("D5"), or empty

    std::size_t branch_count() const { return generators.front().branch_count(); }
};

GorensteinPresentation type_I_presentation(unsigned m);
GorensteinPresentation type_II_presentation(unsigned m);

/// The generators are the N-jets of branch_generators and every equation vanishes
/// modulo (t_i^N). Relations of type II, m >= 4, hold only modulo t^N.
bool verify_presentation(const GorensteinPresentation& p);

/// Generators {x_i x_j} followed by {(x_i - x_j) y}, i < j, in x_1..x_m, y.
std::vector<Polynomial> tailed_ribbon_local_ideal(unsigned m);

/// Arithmetic genus of the (m_1,...,m_k)-tailed ribbon from Euler characteristic
/// additivity; multiplicities.size() must equal k and every m_i >= 1.
int ribbon_genus(unsigned k, const std::vector<unsigned>& multiplicities);

/// Germ at the origin of a parametrized plane curve (x(t), y(t)).
class PlanarBranch {
public:
    /// Throws DomainError when a component has a constant term, when both vanish,
    /// or when x and y are polynomials in t^e for some e > 1.
    PlanarBranch(UnivariatePolynomial x, UnivariatePolynomial y);

    const UnivariatePolynomial& x() const noexcept { return x_; }
    const UnivariatePolynomial& y() const noexcept { return y_; }
    std::string to_string() const;

private:
    UnivariatePolynomial x_, y_;
};

/// Planar branches of a presentation with exactly two generators.
std::vector<PlanarBranch> planar_branches(const GorensteinPresentation& p);

/// Contact order of two branches; infinite when they are the same germ.
class IntersectionNumber {
public:
    static IntersectionNumber finite(unsigned v) { return IntersectionNumber(v, false); }
    static IntersectionNumber infinite() { return IntersectionNumber(0, true); }
    bool is_infinite() const noexcept { return infinite_; }
    /// Throws DomainError when infinite.
    unsigned value() const;
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
    friend bool operator==(const IntersectionNumber&, const IntersectionNumber&) = default;

private:
    IntersectionNumber(unsigned v, bool inf) : value_(v), infinite_(inf) {}
    unsigned value_;
    bool infinite_;
};

/// ord_t Res_s(x1(t) - x2(s), y1(t) - y2(s)). Throws DomainError when a
/// parametrization returns to the origin at a second parameter value.
IntersectionNumber intersection_multiplicity(const PlanarBranch& b1, const PlanarBranch& b2);

/// Branch type read off from the orders of (x, y) after one linear change of
/// coordinates: smooth (1, *), cusp (2, 2k+1), or the (3,4) branch.
struct BranchType {
    enum class Kind { Smooth, Cusp, E6 };
    Kind kind;
    unsigned k = 0;  ///< cusp (2, 2k+1)

    unsigned delta() const { return kind == Kind::Smooth ? 0 : kind == Kind::Cusp ? k : 3; }
    std::string to_string() const;
    friend bool operator==(const BranchType&, const BranchType&) = default;
};

struct GermSignature {
    unsigned branch_count;
    std::vector<BranchType> branch_types;
    std::vector<unsigned> contacts;  ///< pairwise intersection multiplicities, sorted
    unsigned delta;
    int milnor;  ///< 2 delta - r + 1

    std::string to_string() const;
};

/// Classification failure; carries the signature when it could be computed.
class UnclassifiedGerm : public Error {
public:
    UnclassifiedGerm(const std::string& what, std::optional<GermSignature> sig)
        : Error(what), signature_(std::move(sig)) {}
    const std::optional<GermSignature>& signature() const noexcept { return signature_; }

private:
    std::optional<GermSignature> signature_;
};

/// Throws UnclassifiedGerm for branches outside the catalog or coinciding branches.
BranchType branch_type(const PlanarBranch& b);
GermSignature germ_signature(const std::vector<PlanarBranch>& branches);

/// Names the germ: A_n, D_n, E6, E7 or an ordinary planar m-fold point (m >= 4).
/// Throws UnclassifiedGerm otherwise (a single smooth branch included).
SingularityType classify_germ(const std::vector<PlanarBranch>& branches);

}  // namespace g2maps

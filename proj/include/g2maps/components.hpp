#pragma once

#include <compare>
#include <string>
#include <vector>

#include "g2maps/errors.hpp"

namespace g2maps {

/// Non-increasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws DomainError on a zero part.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned sum() const;
    unsigned length() const noexcept { return static_cast<unsigned>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Multiset union.
    Partition merged(const Partition& other) const;

    /// "3,1" (empty string for the empty partition).
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
};

/// All partitions of n, largest first in lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions(unsigned n);

/// One irreducible-component family of genus-two stable maps.
class ComponentFamily {
public:
    enum class Kind { Main, D, HypD, E, EE, BrE };

    static ComponentFamily main();
    static ComponentFamily D(Partition mu);
    static ComponentFamily hypD(Partition mu);
    /// d0 >= 2.
    static ComponentFamily E(unsigned d0, Partition mu);
    /// d0 >= 1; the tail partitions are stored in canonical order.
    static ComponentFamily EE(Partition mu1, unsigned d0, Partition mu2);
    /// d0 >= 1.
    static ComponentFamily brE(unsigned d0, Partition mu);

    Kind kind() const noexcept { return kind_; }
    unsigned d0() const noexcept { return d0_; }
    const Partition& mu() const noexcept { return mu_; }
    /// Second tail partition of EE.
    const Partition& mu2() const noexcept { return mu2_; }

    /// Total degree; Main has no intrinsic degree and throws DomainError.
    unsigned degree() const;
    /// Number of rational tails k (k1 + k2 for EE).
    unsigned tail_count() const;

    /// Canonical FamilySpec text: main, D(2,1,1), hypD(2), E(4), E(3;1), EE(|4|), EE(1|2|1), brE(3;1).
    std::string to_spec() const;

    friend bool operator==(const ComponentFamily&, const ComponentFamily&) = default;

private:
    ComponentFamily(Kind k, unsigned d0, Partition mu, Partition mu2)
        : kind_(k), d0_(d0), mu_(std::move(mu)), mu2_(std::move(mu2)) {}
    Kind kind_;
    unsigned d0_;
    Partition mu_, mu2_;
};

/// Parses FamilySpec text; ParseError carries the offending offset.
ComponentFamily parse_family_spec(const std::string& text);

/// Main followed by every D, hypD, E, EE, brE instance of degree d. Kinds in that
/// order; inside a kind d0 descending, then tail partitions largest first (EE:
/// smaller first tail total first). Throws OutOfRegime when d <= 2.
std::vector<ComponentFamily> enumerate_families(int r, int d);

int virtual_dimension(int r, int d);
int hyperelliptic_cover_dimension(int r, int k);
/// Dimension of the family at (r, d); the family's degree must equal d.
int dimension(const ComponentFamily& f, int r, int d);

/// EE with d0 = 1 and brE with d0 = 1 meet main where a D family does;
/// returns that D family, or throws DomainError for other families.
ComponentFamily reduction_target(const ComponentFamily& f);
bool is_reducing(const ComponentFamily& f);

struct DualVertex {
    enum class Role { Core, ContractedCore, HyperellipticCover, ContractedElliptic, Elliptic, Bridge, Tail };
    unsigned genus;
    unsigned weight;
    Role role;
};

std::string to_string(DualVertex::Role role);

struct DualGraph {
    std::vector<DualVertex> vertices;
    std::vector<std::pair<unsigned, unsigned>> edges;  ///< parallel edges allowed

    /// Sum of vertex genera plus the first Betti number (graph assumed connected).
    unsigned total_genus() const;
    unsigned total_weight() const;
};

/// Weighted dual graph of the general member; Main takes its weight from d.
DualGraph generic_dual_graph(const ComponentFamily& f, unsigned d);

}  // namespace g2maps

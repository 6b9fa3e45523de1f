#include "g2maps/components.hpp"

namespace g2maps {

std::string to_string(DualVertex::Role role) {
    switch (role) {
        case DualVertex::Role::Core: return "core";
        case DualVertex::Role::ContractedCore: return "contracted-core";
        case DualVertex::Role::HyperellipticCover: return "hyperelliptic-cover";
        case DualVertex::Role::ContractedElliptic: return "contracted-elliptic";
        case DualVertex::Role::Elliptic: return "elliptic";
        case DualVertex::Role::Bridge: return "bridge";
        case DualVertex::Role::Tail: return "tail";
    }
    return {};
}

unsigned DualGraph::total_genus() const {
    unsigned g = 0;
    for (const auto& v : vertices) g += v.genus;
    return g + static_cast<unsigned>(edges.size()) + 1 - static_cast<unsigned>(vertices.size());
}

unsigned DualGraph::total_weight() const {
    unsigned w = 0;
    for (const auto& v : vertices) w += v.weight;
    return w;
}

namespace {

void attach_tails(DualGraph& g, unsigned at, const Partition& mu) {
    for (unsigned w : mu.parts()) {
        g.vertices.push_back({0, w, DualVertex::Role::Tail});
        g.edges.emplace_back(at, static_cast<unsigned>(g.vertices.size() - 1));
    }
}

}  // namespace

DualGraph generic_dual_graph(const ComponentFamily& f, unsigned d) {
    using K = ComponentFamily::Kind;
    using R = DualVertex::Role;
    if (f.kind() != K::Main && f.degree() != d)
        throw DomainError(f.to_spec() + " has degree " + std::to_string(f.degree()) + ", not " + std::to_string(d));
    DualGraph g;
    switch (f.kind()) {
        case K::Main:
            g.vertices.push_back({2, d, R::Core});
            break;
        case K::D:
            g.vertices.push_back({2, 0, R::ContractedCore});
            attach_tails(g, 0, f.mu());
            break;
        case K::HypD:
            g.vertices.push_back({2, 2, R::HyperellipticCover});
            attach_tails(g, 0, f.mu());
            break;
        case K::E:
            g.vertices.push_back({1, 0, R::ContractedElliptic});
            g.vertices.push_back({1, f.d0(), R::Elliptic});
            g.edges.emplace_back(0, 1);
            attach_tails(g, 0, f.mu());
            break;
        case K::EE:
            g.vertices.push_back({1, 0, R::ContractedElliptic});
            g.vertices.push_back({0, f.d0(), R::Bridge});
            g.vertices.push_back({1, 0, R::ContractedElliptic});
            g.edges.emplace_back(0, 1);
            g.edges.emplace_back(1, 2);
            attach_tails(g, 0, f.mu());
            attach_tails(g, 2, f.mu2());
            break;
        case K::BrE:
            // The bridge meets the elliptic vertex twice, closing a loop.
            g.vertices.push_back({1, 0, R::ContractedElliptic});
            g.vertices.push_back({0, f.d0(), R::Bridge});
            g.edges.emplace_back(0, 1);
            g.edges.emplace_back(0, 1);
            attach_tails(g, 0, f.mu());
            break;
    }
    return g;
}

}  // namespace g2maps

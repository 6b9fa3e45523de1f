#include "g2maps/components.hpp"

namespace g2maps {

int virtual_dimension(int r, int d) { return (3 - r) + d * (r + 1); }

int hyperelliptic_cover_dimension(int r, int k) { return 2 * r + 4 + k; }

int dimension(const ComponentFamily& f, int r, int d) {
    using K = ComponentFamily::Kind;
    if (f.kind() != K::Main && static_cast<int>(f.degree()) != d)
        throw DomainError(f.to_spec() + " has degree " + std::to_string(f.degree()) + ", not " + std::to_string(d));
    const int k = static_cast<int>(f.tail_count());
    const int base = d * (r + 1);
    switch (f.kind()) {
        case K::Main: return virtual_dimension(r, d);
        case K::D: return base + r - k + 3;
        case K::HypD: return base - k + 2;
        case K::E: return base - k + 2;
        case K::EE: return base + r - k + 1;
        case K::BrE: return base - k + 1;
    }
    return 0;
}

std::vector<ComponentFamily> enumerate_families(int r, int d) {
    if (r < 1) throw DomainError("target dimension r must be >= 1");
    if (d <= 2) throw OutOfRegime("degree " + std::to_string(d) + " is not above 2g - 2 = 2");
    const auto n = static_cast<unsigned>(d);
    std::vector<ComponentFamily> out{ComponentFamily::main()};
    for (const auto& mu : partitions(n)) out.push_back(ComponentFamily::D(mu));
    for (const auto& mu : partitions(n - 2)) out.push_back(ComponentFamily::hypD(mu));
    for (unsigned d0 = n; d0 >= 2; --d0)
        for (const auto& mu : partitions(n - d0)) out.push_back(ComponentFamily::E(d0, mu));
    for (unsigned d0 = n; d0 >= 1; --d0) {
        const unsigned rest = n - d0;
        for (unsigned s1 = 0; 2 * s1 <= rest; ++s1)
            for (const auto& mu1 : partitions(s1))
                for (const auto& mu2 : partitions(rest - s1)) {
                    if (2 * s1 == rest && mu2.parts() < mu1.parts()) continue;
                    out.push_back(ComponentFamily::EE(mu1, d0, mu2));
                }
    }
    for (unsigned d0 = n; d0 >= 1; --d0)
        for (const auto& mu : partitions(n - d0)) out.push_back(ComponentFamily::brE(d0, mu));
    return out;
}

}  // namespace g2maps

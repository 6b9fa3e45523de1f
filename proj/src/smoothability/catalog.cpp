#include <algorithm>

#include "g2maps/smoothability.hpp"

namespace g2maps {

namespace {

using ST = SingularityType;
using K = ComponentFamily::Kind;

std::vector<IntersectionComponent> components_of(const ComponentFamily& f) {
    const auto& p = f.mu().parts();
    auto is = [&](std::initializer_list<unsigned> parts) { return p == std::vector<unsigned>(parts); };
    switch (f.kind()) {
        case K::Main: return {{"main itself", 13, {}}};
        case K::D:
            if (is({4})) return {{"E6 image point", 12, {ST::E(6)}}, {"A4 at a Weierstrass point", 12, {ST::A(4)}}};
            if (is({3, 1}))
                return {{"E7 image point", 12, {ST::E(7)}},
                        {"D5 with the cubic tail at a Weierstrass point", 12, {ST::D(5)}},
                        {"A5 from conjugate attaching points", 12, {ST::A(5)}}};
            if (is({2, 2}))
                return {{"A5 from conjugate attaching points", 12, {ST::A(5)}},
                        {"conic tangent to a double line at a branch point", 12, {ST::genus_two_type_II(3)}}};
            if (is({2, 1, 1}))
                return {{"D6 from a conjugate line tangent to the conic", 12, {ST::D(6)}},
                        {"double line with two lines through a branch point", 12, {ST::genus_two_type_II(4)}},
                        {"contracted ribbon with three tails", 12, {ST::tailed_ribbon({1, 1, 1})}}};
            return {{"four lines matching the branch cross-ratio", 12, {ST::tailed_ribbon({1, 1, 1, 1})}}};
        case K::E:
            if (f.d0() == 4) return {{"cusp on the quartic", 12, {ST::A(2)}}};
            if (f.d0() == 3) return {{"tail line tangent to the cubic", 12, {ST::A(3)}}};
            if (is({2}))
                return {{"conic tangent to the double line", 12, {ST::A(3)}},
                        {"conic through a branch point", 12, {ST::A(2)}}};
            return {};
        case K::EE:
            if (f.d0() == 4) return {{"two cusps", 11, {ST::A(2), ST::A(2)}}};
            if (f.d0() == 3) return {{"cusp and tacnode", 11, {ST::A(2), ST::A(3)}}};
            if (f.d0() == 2 && f.mu().empty() && f.mu2().parts() == std::vector<unsigned>{2})
                return {{"conic tangent to the double line", 11, {ST::A(2), ST::A(3)}},
                        {"conic through the second branch point", 11, {ST::A(2), ST::A(2)}}};
            if (f.d0() == 2 && f.mu().empty()) return {{"cusp at a ramification point", 11, {ST::A(2)}}};
            if (f.d0() == 2)
                return {{"both lines equal the double line", 10, {ST::A(3), ST::A(3)}},
                        {"one line equal, one through a branch point", 10, {ST::A(2), ST::A(3)}},
                        {"both lines through branch points", 10, {ST::A(2), ST::A(2)}}};
            return {};
        case K::BrE:
            if (f.d0() == 4) return {{"tacnode on the quartic", 12, {ST::A(3)}}};
            return {};
        case K::HypD:
            if (is({2})) return {{"hyperelliptic ribbon with one tail", 11, {ST::tailed_ribbon({1})}}};
            return {};
    }
    return {};
}

}  // namespace

CatalogRecord catalog_record(const ComponentFamily& f) {
    const FamilyRule rule = family_rule(f);
    CatalogRecord rec{f, dimension(f, 2, 4), components_of(f), false, std::nullopt};
    if (rule.kind == FamilyRule::Kind::Contained && f.kind() != K::Main) rec.contained = true;
    if (rule.kind == FamilyRule::Kind::ReducesTo) rec.reduces_to = rule.target;
    return rec;
}

std::vector<CatalogRecord> intersection_catalog() {
    std::vector<CatalogRecord> out;
    for (const auto& f : enumerate_families(2, 4)) out.push_back(catalog_record(f));
    return out;
}

}  // namespace g2maps

#include <algorithm>
#include <set>

#include "g2maps/smoothability.hpp"

namespace g2maps {

namespace {

bool has_genus_two_core(const ComponentFamily& f) {
    return f.kind() == ComponentFamily::Kind::D || f.kind() == ComponentFamily::Kind::HypD;
}

std::vector<unsigned> tail_degrees(const ComponentFamily& f) {
    std::vector<unsigned> out;
    if (f.kind() == ComponentFamily::Kind::Main) return out;
    out = f.mu().parts();
    const auto& second = f.mu2().parts();
    out.insert(out.end(), second.begin(), second.end());
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string attach_ptr(std::size_t i) { return "/attach/" + std::to_string(i); }

}  // namespace

void validate_instance(const SmoothabilityInstance& inst) {
    const auto catalog = enumerate_families(2, 4);
    if (std::find(catalog.begin(), catalog.end(), inst.family) == catalog.end())
        throw ValidationError("/family", inst.family.to_spec() + " is not a (2,4) family");

    // Tails: one entry per part, unique labels, degree multiset equal to the tail partition.
    if (inst.attach.size() != tail_degrees(inst.family).size())
        throw ValidationError("/attach", "expected " + std::to_string(tail_degrees(inst.family).size()) +
                                             " attachments, got " + std::to_string(inst.attach.size()));
    std::vector<unsigned> degrees;
    std::set<std::string> labels;
    for (std::size_t i = 0; i < inst.attach.size(); ++i) {
        if (!labels.insert(inst.attach[i].tail).second)
            throw ValidationError(attach_ptr(i) + "/tail", "duplicate tail label " + inst.attach[i].tail);
        degrees.push_back(inst.attach[i].degree);
    }
    std::sort(degrees.rbegin(), degrees.rend());
    if (degrees != tail_degrees(inst.family))
        throw ValidationError("/attach", "tail degrees do not match " + inst.family.to_spec());

    // Attaching points only make sense on a genus-two core and must lie on the curve.
    for (std::size_t i = 0; i < inst.attach.size(); ++i) {
        const Attachment& a = inst.attach[i];
        if (a.point && a.generic)
            throw ValidationError(attach_ptr(i), "attachment is both generic and explicit");
        if (!a.point && !a.generic) {
            if (inst.family.kind() == ComponentFamily::Kind::D)
                throw ValidationError(attach_ptr(i), "D families need an attaching point or the generic marker");
            continue;
        }
        if (!has_genus_two_core(inst.family))
            throw ValidationError(attach_ptr(i), inst.family.to_spec() + " has no genus-two core");
        if (a.point) {
            if (!inst.curve) throw ValidationError("/curve", "attaching points need a curve");
            if (!inst.curve->contains(*a.point))
                throw ValidationError(attach_ptr(i), a.point->to_string() + " is not on the curve");
        }
    }

    if (inst.generic_attach) {
        bool special = false;
        bool any_generic = false;
        for (std::size_t i = 0; i < inst.attach.size(); ++i) {
            const Attachment& a = inst.attach[i];
            any_generic = any_generic || a.generic;
            if (a.point && inst.curve->is_weierstrass(*a.point)) special = true;
            for (std::size_t j = i + 1; j < inst.attach.size(); ++j) {
                const Attachment& b = inst.attach[j];
                if (a.point && b.point && inst.curve->are_conjugate(*a.point, *b.point)) special = true;
            }
        }
        if (*inst.generic_attach && special)
            throw ValidationError("/generic_attach", "declared generic but the points are special");
        if (!*inst.generic_attach && !special && any_generic)
            throw ValidationError("/generic_attach", "declared special but no special points are given");
    }

    const ImageData& img = inst.image;
    for (const auto& [tail, target] : img.tail_images) {
        if (!labels.count(tail)) throw ValidationError("/image/tail_images/" + tail, "unknown tail " + tail);
        if (!img.lines.count(target) && !img.conics.count(target))
            throw ValidationError("/image/tail_images/" + tail, "unknown line or conic " + target);
    }
    for (const auto& [component, cover] : img.double_covers) {
        const std::string ptr = "/image/double_covers/" + component;
        auto l = img.lines.find(cover.line);
        if (l == img.lines.end()) throw ValidationError(ptr + "/line", "unknown line " + cover.line);
        for (std::size_t j = 0; j < cover.branch_points.size(); ++j)
            if (!l->second.contains(cover.branch_points[j]))
                throw ValidationError(ptr + "/branch_points/" + std::to_string(j),
                                      cover.branch_points[j].to_string() + " is not on " + cover.line);
    }
}

}  // namespace g2maps

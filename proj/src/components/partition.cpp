#include <algorithm>
#include <functional>
#include <numeric>

#include "g2maps/components.hpp"

namespace g2maps {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end()) throw DomainError("partition with a zero part");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::merged(const Partition& other) const {
    std::vector<unsigned> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
}

namespace {

void extend(unsigned remaining, unsigned cap, std::vector<unsigned>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned p = std::min(remaining, cap); p >= 1; --p) {
        prefix.push_back(p);
        extend(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    extend(n, n, prefix, out);
    return out;
}

}  // namespace g2maps

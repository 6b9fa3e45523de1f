#include <cctype>

#include "g2maps/components.hpp"

namespace g2maps {

ComponentFamily ComponentFamily::main() { return ComponentFamily(Kind::Main, 0, {}, {}); }

ComponentFamily ComponentFamily::D(Partition mu) {
    if (mu.empty()) throw DomainError("D family needs at least one tail");
    return ComponentFamily(Kind::D, 0, std::move(mu), {});
}

ComponentFamily ComponentFamily::hypD(Partition mu) {
    if (mu.empty()) throw DomainError("hypD family needs at least one tail");
    return ComponentFamily(Kind::HypD, 2, std::move(mu), {});
}

ComponentFamily ComponentFamily::E(unsigned d0, Partition mu) {
    if (d0 < 2) throw DomainError("E family needs d0 >= 2");
    return ComponentFamily(Kind::E, d0, std::move(mu), {});
}

ComponentFamily ComponentFamily::EE(Partition mu1, unsigned d0, Partition mu2) {
    if (d0 < 1) throw DomainError("EE family needs d0 >= 1");
    // Canonical order: smaller tail total first, then lexicographically smaller.
    if (mu1.sum() > mu2.sum() || (mu1.sum() == mu2.sum() && mu2.parts() < mu1.parts())) std::swap(mu1, mu2);
    return ComponentFamily(Kind::EE, d0, std::move(mu1), std::move(mu2));
}

ComponentFamily ComponentFamily::brE(unsigned d0, Partition mu) {
    if (d0 < 1) throw DomainError("brE family needs d0 >= 1");
    return ComponentFamily(Kind::BrE, d0, std::move(mu), {});
}

unsigned ComponentFamily::degree() const {
    switch (kind_) {
        case Kind::Main: throw DomainError("main has no intrinsic degree");
        case Kind::D: return mu_.sum();
        case Kind::HypD: return 2 + mu_.sum();
        case Kind::E:
        case Kind::BrE: return d0_ + mu_.sum();
        case Kind::EE: return mu_.sum() + d0_ + mu2_.sum();
    }
    return 0;
}

unsigned ComponentFamily::tail_count() const { return mu_.length() + mu2_.length(); }

std::string ComponentFamily::to_spec() const {
    switch (kind_) {
        case Kind::Main: return "main";
        case Kind::D: return "D(" + mu_.to_string() + ")";
        case Kind::HypD: return "hypD(" + mu_.to_string() + ")";
        case Kind::E: return "E(" + std::to_string(d0_) + (mu_.empty() ? "" : ";" + mu_.to_string()) + ")";
        case Kind::EE: return "EE(" + mu_.to_string() + "|" + std::to_string(d0_) + "|" + mu2_.to_string() + ")";
        case Kind::BrE: return "brE(" + std::to_string(d0_) + (mu_.empty() ? "" : ";" + mu_.to_string()) + ")";
    }
    return {};
}

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : s_(text) {}

    ComponentFamily parse() {
        skip_space();
        const std::size_t name_at = pos_;
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
        ComponentFamily f = ComponentFamily::main();
        try {
            if (name == "main") {
                f = ComponentFamily::main();
            } else if (name == "D" || name == "hypD") {
                expect('(');
                Partition mu = partition_until(')');
                f = name == "D" ? ComponentFamily::D(std::move(mu)) : ComponentFamily::hypD(std::move(mu));
            } else if (name == "E" || name == "brE") {
                expect('(');
                const std::size_t at = pos_;
                const unsigned d0 = number();
                Partition mu;
                skip_space();
                if (peek() == ';')
                    ++pos_, mu = partition_until(')');
                else
                    expect(')');
                f = name == "E" ? make_checked([&] { return ComponentFamily::E(d0, mu); }, at)
                                : make_checked([&] { return ComponentFamily::brE(d0, mu); }, at);
            } else if (name == "EE") {
                expect('(');
                Partition mu1 = partition_until('|');
                const std::size_t at = pos_;
                const unsigned d0 = number();
                expect('|');
                Partition mu2 = partition_until(')');
                f = make_checked([&] { return ComponentFamily::EE(mu1, d0, mu2); }, at);
            } else {
                throw ParseError("unknown family '" + name + "'", name_at);
            }
        } catch (const DomainError& e) {
            throw ParseError(e.what(), name_at);
        }
        skip_space();
        if (pos_ != s_.size()) throw ParseError("trailing characters in family spec", pos_);
        return f;
    }

private:
    template <typename F>
    ComponentFamily make_checked(F&& make, std::size_t at) {
        try {
            return make();
        } catch (const DomainError& e) {
            throw ParseError(e.what(), at);
        }
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    unsigned number() {
        skip_space();
        const std::size_t start = pos_;
        unsigned v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
            if (v > 10000) throw ParseError("number too large", start);
        }
        if (pos_ == start) throw ParseError("expected a number", start);
        if (v == 0) throw ParseError("expected a positive number", start);
        return v;
    }

    // Comma-separated positive parts, possibly none, then `close`.
    Partition partition_until(char close) {
        std::vector<unsigned> parts;
        skip_space();
        if (peek() != close) {
            parts.push_back(number());
            skip_space();
            while (peek() == ',') {
                ++pos_;
                parts.push_back(number());
                skip_space();
            }
        }
        expect(close);
        return Partition(std::move(parts));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

ComponentFamily parse_family_spec(const std::string& text) { return SpecParser(text).parse(); }

bool is_reducing(const ComponentFamily& f) {
    return (f.kind() == ComponentFamily::Kind::EE || f.kind() == ComponentFamily::Kind::BrE) && f.d0() == 1;
}

ComponentFamily reduction_target(const ComponentFamily& f) {
    if (!is_reducing(f)) throw DomainError(f.to_spec() + " does not reduce to a D family");
    const Partition one({1});
    if (f.kind() == ComponentFamily::Kind::EE) return ComponentFamily::D(f.mu().merged(one).merged(f.mu2()));
    return ComponentFamily::D(one.merged(f.mu()));
}

}  // namespace g2maps

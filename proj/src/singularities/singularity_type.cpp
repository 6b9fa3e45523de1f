#include <cctype>
#include <sstream>

#include "g2maps/singularities.hpp"

namespace g2maps {

SingularityType SingularityType::ade(char letter, unsigned index) {
    switch (letter) {
        case 'A':
            if (index < 1) throw DomainError("A_n needs n >= 1");
            return SingularityType(Kind::A, index);
        case 'D':
            if (index < 4) throw DomainError("D_n needs n >= 4");
            return SingularityType(Kind::D, index);
        case 'E':
            if (index != 6 && index != 7 && index != 8) throw DomainError("E_n needs n in {6, 7, 8}");
            return SingularityType(Kind::E, index);
        default:
            throw DomainError(std::string("unknown ADE letter '") + letter + "'");
    }
}

SingularityType SingularityType::genus_two_type_I(unsigned m) {
    if (m < 1) throw DomainError("type I needs m >= 1");
    return SingularityType(Kind::GenusTwoTypeI, m);
}

SingularityType SingularityType::genus_two_type_II(unsigned m) {
    if (m < 2) throw DomainError("type II needs m >= 2");
    return SingularityType(Kind::GenusTwoTypeII, m);
}

SingularityType SingularityType::elliptic_m_fold(unsigned m) {
    if (m < 1) throw DomainError("elliptic m-fold point needs m >= 1");
    return SingularityType(Kind::EllipticMFold, m);
}

SingularityType SingularityType::rational_m_fold(unsigned m) {
    if (m < 2) throw DomainError("rational m-fold point needs m >= 2");
    return SingularityType(Kind::RationalMFold, m);
}

SingularityType SingularityType::ordinary_planar_m_fold(unsigned m) {
    if (m < 3) throw DomainError("planar m-fold point needs m >= 3");
    return SingularityType(Kind::OrdinaryPlanarMFold, m);
}

SingularityType SingularityType::tailed_ribbon(std::vector<unsigned> multiplicities) {
    if (multiplicities.empty()) throw DomainError("tailed ribbon needs at least one tail");
    for (unsigned m : multiplicities)
        if (m < 1) throw DomainError("tail multiplicities must be >= 1");
    const auto k = static_cast<unsigned>(multiplicities.size());
    return SingularityType(Kind::TailedRibbon, k, std::move(multiplicities));
}

unsigned SingularityType::milnor_number() const {
    if (!is_ade()) throw DomainError("Milnor number requested for non-ADE type " + to_string());
    return index_;
}

std::string SingularityType::to_string() const {
    switch (kind_) {
        case Kind::A: return "A" + std::to_string(index_);
        case Kind::D: return "D" + std::to_string(index_);
        case Kind::E: return "E" + std::to_string(index_);
        case Kind::GenusTwoTypeI: return "type I (m=" + std::to_string(index_) + ")";
        case Kind::GenusTwoTypeII: return "type II (m=" + std::to_string(index_) + ")";
        case Kind::EllipticMFold: return "elliptic " + std::to_string(index_) + "-fold point";
        case Kind::RationalMFold: return "rational " + std::to_string(index_) + "-fold point";
        case Kind::OrdinaryPlanarMFold: return "planar " + std::to_string(index_) + "-fold point";
        case Kind::TailedRibbon: {
            std::string s = "tailed ribbon (";
            for (std::size_t i = 0; i < tails_.size(); ++i) s += (i ? "," : "") + std::to_string(tails_[i]);
            return s + ")";
        }
    }
    return {};
}

namespace {

unsigned parse_count(const std::string& text, std::size_t& pos) {
    const std::size_t start = pos;
    unsigned v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned>(text[pos] - '0');
        if (v > 1000000) throw ParseError("number too large", start);
        ++pos;
    }
    if (pos == start) throw ParseError("expected a number", pos);
    return v;
}

void expect(const std::string& text, std::size_t& pos, const std::string& lit) {
    if (text.compare(pos, lit.size(), lit) != 0) throw ParseError("expected '" + lit + "'", pos);
    pos += lit.size();
}

bool accept(const std::string& text, std::size_t& pos, const std::string& lit) {
    if (text.compare(pos, lit.size(), lit) != 0) return false;
    pos += lit.size();
    return true;
}

}  // namespace

SingularityType SingularityType::parse(const std::string& text) {
    std::size_t pos = 0;
    auto finish = [&](SingularityType t) {
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        return t;
    };
    try {
        if (!text.empty() && (text[0] == 'A' || text[0] == 'D' || text[0] == 'E') && text.size() > 1 &&
            std::isdigit(static_cast<unsigned char>(text[1]))) {
            pos = 1;
            const unsigned n = parse_count(text, pos);
            return finish(ade(text[0], n));
        }
        if (accept(text, pos, "type II (m=")) {
            const unsigned m = parse_count(text, pos);
            expect(text, pos, ")");
            return finish(genus_two_type_II(m));
        }
        if (accept(text, pos, "type I (m=")) {
            const unsigned m = parse_count(text, pos);
            expect(text, pos, ")");
            return finish(genus_two_type_I(m));
        }
        for (auto [prefix, kind] : {std::pair{"elliptic ", Kind::EllipticMFold}, std::pair{"rational ", Kind::RationalMFold},
                                    std::pair{"planar ", Kind::OrdinaryPlanarMFold}}) {
            if (!accept(text, pos, prefix)) continue;
            const unsigned m = parse_count(text, pos);
            expect(text, pos, "-fold point");
            if (kind == Kind::EllipticMFold) return finish(elliptic_m_fold(m));
            if (kind == Kind::RationalMFold) return finish(rational_m_fold(m));
            return finish(ordinary_planar_m_fold(m));
        }
        if (accept(text, pos, "tailed ribbon (")) {
            std::vector<unsigned> ms{parse_count(text, pos)};
            while (accept(text, pos, ",")) ms.push_back(parse_count(text, pos));
            expect(text, pos, ")");
            return finish(tailed_ribbon(std::move(ms)));
        }
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
    throw ParseError("unknown singularity type '" + text + "'", 0);
}

}  // namespace g2maps

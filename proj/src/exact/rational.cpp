#include "g2maps/rational.hpp"

#include <cctype>

#include "g2maps/errors.hpp"

namespace g2maps {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num))
        throw ParseError("malformed rational numerator '" + std::string(text) + "'", 0);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational denominator '" + std::string(text) + "'",
                         slash == std::string_view::npos ? 0 : slash + 1);
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer common_denominator(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

}  // namespace g2maps

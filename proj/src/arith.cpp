#include "eltrans/arith.hpp"

#include <cctype>

namespace eltrans {

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw DomainError("malformed integer '" + std::string(text) + "'");
    }
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw DomainError("malformed integer '" + std::string(text) + "'");
        }
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw DomainError("zero denominator in '" + std::string(text) + "'");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

}  // namespace eltrans

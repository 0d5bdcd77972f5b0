// Exact integer and rational arithmetic shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace eltrans {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input violates a precondition of the calculus
/// (invalid word, divisibility failure, non-del-Pezzo state, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Always "p/q", reduced, with the sign on the numerator ("-1/1", "3/2").
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "p/q" or a bare integer "p". Throws DomainError on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace eltrans

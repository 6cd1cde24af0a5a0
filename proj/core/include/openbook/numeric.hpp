#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace openbook {

// Every quantity in this library is an exact integer or an exact reduced
// rational; there is no floating point in any computation path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// "p/q" in lowest terms with positive q, "p" alone when q == 1.
std::string to_string(const Rational& r);

// Strict decimal literal: optional sign followed by one or more digits.
// Returns false on anything else (no hex/octal prefixes, no whitespace).
bool parse_int(std::string_view text, Int& out);

}  // namespace openbook

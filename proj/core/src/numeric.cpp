#include "openbook/numeric.hpp"

namespace openbook {

std::string to_string(const Rational& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool parse_int(std::string_view text, Int& out) {
  if (text.empty()) return false;
  bool negative = false;
  size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  // Horner instead of the cpp_int string constructor: the latter honors
  // 0x/0 prefixes, which the grammar does not allow.
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? Int(-value) : value;
  return true;
}

}  // namespace openbook

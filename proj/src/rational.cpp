#include "ptomo/rational.hpp"

#include <cctype>

namespace ptomo {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw domain_error("parse_rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw domain_error("parse_rational: zero denominator");
    return Rational(num, den);
  }
  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt num = 0, den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw domain_error("parse_rational: malformed number");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else {
      throw domain_error("parse_rational: unexpected character in '" + text + "'");
    }
  }
  if (!seen_digit) throw domain_error("parse_rational: no digits in '" + text + "'");
  Rational q(num, den);
  return negative ? -q : q;
}

}  // namespace ptomo

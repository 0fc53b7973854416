#include "obcalc/rational.hpp"

#include "obcalc/error.hpp"

#include <cctype>

namespace obcalc {

std::string to_pq(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

std::string to_text(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return to_pq(r);
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const BigInt p = parse_integer(trim(t.substr(0, slash)), text);
  const BigInt q = parse_integer(trim(t.substr(slash + 1)), text);
  if (q <= 0) throw ParseError("denominator must be positive in '" + std::string(text) + "'");
  return Rational(p) / Rational(q);
}

}  // namespace obcalc

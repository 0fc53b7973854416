#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace obcalc {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

inline BigInt num(const Rational& r) { return BigInt(numerator(r)); }
inline BigInt den(const Rational& r) { return BigInt(denominator(r)); }

/// Wire form used in every JSON document: always "p/q", q >= 1.
std::string to_pq(const Rational& r);

/// Human form: integers print bare, everything else as "p/q".
std::string to_text(const Rational& r);

/// Accepts "p/q", "p" and optional leading sign; throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace obcalc

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obcalc/rational.hpp"

namespace obcalc::domains {

/// phi^m is isotopic to t_{c_1}^{k_1} ... t_{c_r}^{k_r}; boundary i has FDTC k_i/m.
struct PeriodicData {
  std::int64_t g = 1;
  std::int64_t r = 0;
  std::int64_t m = 1;
  std::vector<std::int64_t> k;  // ascending

  /// Throws DomainError. Negative entries are accepted only when
  /// allow_negative is set (tightness queries).
  void validate(bool allow_negative = false) const;
  Rational fdtc(std::size_t i) const { return Rational(k.at(i), m); }
};

/// Sorts k ascending and returns the permutation: sorted[i] = original[perm[i]].
std::vector<std::size_t> sort_boundaries(PeriodicData& pd);

struct DomainSolution {
  Rational N;
  std::vector<Rational> s;  // s_0 .. s_{r-1}
  Rational t;
  std::int64_t I = 1;  // 1-based index of the first nonzero k
};

/// nullopt is the trivial-form case (some k_i = 0). Requires r >= 2.
std::optional<DomainSolution> solve_domain(const PeriodicData& pd);

/// k_r (2 - 2g - r) / m. Throws DomainError in the trivial-form case.
Rational euler_measure(const PeriodicData& pd);

enum class C1Channel { Printed, FirstPrinciples };

std::string channel_name(C1Channel c);
C1Channel parse_channel(const std::string& text);

/// OBCALC_C1SQ_CHANNEL, default printed. Throws ParseError on other values.
C1Channel channel_from_env();

struct CobordismReport {
  bool trivial = false;
  Rational euler_measure;
  Rational self_intersection;
  Rational c1_pairing;
  Rational c1_squared_printed;
  Rational c1_squared_fp;
  C1Channel channel = C1Channel::Printed;
  Rational shift;

  Rational c1_squared() const {
    return channel == C1Channel::Printed ? c1_squared_printed : c1_squared_fp;
  }
};

/// Data of the cobordism that caps off boundary 1. Both c1^2 channels are
/// always filled in; `channel` picks the one that feeds the grading shift
/// (c1^2 - 2 chi - 3 sigma) / 4 with chi = 1, sigma = -1.
CobordismReport intersection_data(const PeriodicData& pd, C1Channel channel);

}  // namespace obcalc::domains

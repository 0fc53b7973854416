#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace obcalc::bracket {

/// Element of Z[zeta_8] in the basis 1, z, z^2, z^3 (z^4 = -1).
struct Z8 {
  std::array<std::int64_t, 4> c{0, 0, 0, 0};

  static Z8 unit(int power);  // z^power, any integer power
  Z8& operator+=(const Z8& o);
  Z8 operator*(const Z8& o) const;
  bool is_zero() const { return c == std::array<std::int64_t, 4>{0, 0, 0, 0}; }
  friend bool operator==(const Z8&, const Z8&) = default;
};

/// A closed 3-braid diagram: crossings +-1 (sigma_1^{+-1}) and +-2, closed
/// up, with at most one crossing replaced by its horizontal (unoriented)
/// smoothing.
struct Diagram {
  std::vector<int> crossings;
  std::optional<std::size_t> unoriented_at;
};

/// Kauffman bracket at A = zeta_8 by summing over all 2^c states. Only
/// one-loop states contribute since the loop value vanishes there.
Z8 state_sum(const Diagram& d);

/// Same value via the Temperley-Lieb algebra on three strands, linear in the
/// number of crossings.
Z8 temperley_lieb(const Diagram& d);

/// |<D>(zeta_8)|. Throws std::logic_error if the value is not a unit times an
/// integer (which would mean the evaluation is broken).
std::int64_t magnitude(const Z8& v);

}  // namespace obcalc::bracket

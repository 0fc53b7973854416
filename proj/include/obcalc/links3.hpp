#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "obcalc/mcg.hpp"

namespace obcalc::links3 {

/// A 3-braid as a list of single crossings: +-1 for sigma_1^{+-1}, +-2 for
/// sigma_2^{+-1}. Adjacent inverse crossings are cancelled on construction.
class Braid3Word {
 public:
  Braid3Word() = default;
  explicit Braid3Word(std::vector<int> crossings);

  /// Tokens s1, s2, a, b (and A, B for inverses), each optionally `^e`.
  static Braid3Word parse(std::string_view text);
  static Braid3Word from_twist_word(const mcg::TwistWord& w);
  mcg::TwistWord to_twist_word() const;

  const std::vector<int>& crossings() const { return crossings_; }
  std::size_t size() const { return crossings_.size(); }
  Braid3Word inverse() const;
  Braid3Word rotated(std::size_t shift) const;
  std::string str() const;

  friend Braid3Word operator*(const Braid3Word& x, const Braid3Word& y);
  friend bool operator==(const Braid3Word&, const Braid3Word&) = default;

 private:
  std::vector<int> crossings_;
};

/// (sigma_1 sigma_2)^{3d} sigma_2 sigma_1^{-n_1} ... sigma_2 sigma_1^{-n_k}.
Braid3Word braid_of(const std::vector<std::int64_t>& n, std::int64_t d);

/// |det(rho(b) - I)| = |2 - trace rho(b)|, the reduced Burau matrix at t = -1.
std::int64_t determinant(const Braid3Word& b);

/// |<closure>(zeta_8)| by the exponential state sum; at most 30 crossings.
std::int64_t determinant_state_sum(const Braid3Word& b);

/// Same through the Temperley-Lieb engine.
std::int64_t determinant_tl(const Braid3Word& b);

/// Index of the crossing of braid_of(n^-, 0) that is smoothed for B^u: the
/// last sigma_1^{-1} of the last block.
std::size_t resolution_site(const std::vector<std::int64_t>& n);

/// det(B^u_{n^-,0}) with the smoothing at `site` (default resolution_site).
/// A split resolution reports 0.
std::int64_t unoriented_resolution_det(const std::vector<std::int64_t>& n);
std::int64_t unoriented_resolution_det_at(const std::vector<std::int64_t>& n, std::size_t site);

struct HFModel {
  std::int64_t tower_count = 0;  // det(B_{n,0})
  std::int64_t hat_rank = 0;     // tower_count + 2
  int extra_generator_grading = 1;
};

HFModel hf_model(const std::vector<std::int64_t>& n);

enum class SupportGenus { Zero, One, UnknownD1 };
std::string support_genus_name(SupportGenus s);

/// One link of the Condition R certificate chain.
struct ChainStep {
  std::string rule;                // "base", "R-murasugi-minus", "R-murasugi-zero", "R-conj", "R-dtwist"
  std::vector<std::int64_t> n;     // tuple after the step
  std::int64_t d = 2;
};

struct SupportGenusReport {
  SupportGenus verdict = SupportGenus::Zero;
  std::vector<ChainStep> chain;  // non-empty only for d >= 2, starts at ((1), 2)
};

SupportGenusReport support_genus(const std::vector<std::int64_t>& n, std::int64_t d);

}  // namespace obcalc::links3

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "obcalc/rational.hpp"

namespace obcalc::mcg {

/// One signed Dehn twist t_id^exponent. The exponent is never zero inside a
/// normalized TwistWord.
struct Letter {
  std::string curve;
  std::int64_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A monodromy written as a product of Dehn twists, read left to right.
///
/// Adjacent letters on the same curve are merged and zero exponents dropped
/// on construction, so two TwistWords compare equal exactly when their
/// free-reduced spellings agree. The empty word is the identity.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<Letter> letters);

  /// Word grammar: whitespace-separated tokens `id` or `id^e` (signed e).
  /// The tokens `A` and `B` are shorthand for `a^-1` and `b^-1`.
  static TwistWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Sum of exponents; the abelianization B3 -> Z on {a,b} words.
  std::int64_t exponent_sum() const;
  /// Number of twists counted with multiplicity.
  std::int64_t twist_count() const;

  TwistWord inverse() const;
  TwistWord power(std::int64_t p) const;
  /// Cyclic rotation by `shift` letters (in the letter list, not twists).
  TwistWord rotated(std::size_t shift) const;
  /// Every letter satisfies `curve in allowed`.
  bool uses_only(std::initializer_list<std::string_view> allowed) const;

  std::string str() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  void normalize();
  std::vector<Letter> letters_;
};

/// Concatenation w1 * w2 with merge normalization.
TwistWord compose(const TwistWord& w1, const TwistWord& w2);

/// 2x2 integer matrix of determinant one. Products are overflow-checked.
struct SL2Matrix {
  std::array<std::int64_t, 4> e{1, 0, 0, 1};  // row major: a b / c d

  static SL2Matrix identity() { return {}; }
  std::int64_t trace() const { return e[0] + e[3]; }
  std::int64_t determinant() const;
  SL2Matrix operator*(const SL2Matrix& rhs) const;
  SL2Matrix inverse() const;
  bool is_identity() const { return e == std::array<std::int64_t, 4>{1, 0, 0, 1}; }
  bool is_minus_identity() const { return e == std::array<std::int64_t, 4>{-1, 0, 0, -1}; }

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

/// sigma_1 image [[1,1],[0,1]]; sigma_2 image [[1,0],[-1,1]].
SL2Matrix sigma1_matrix();
SL2Matrix sigma2_matrix();

/// Image of a word over {a,b} under t_a -> sigma_1, t_b -> sigma_2 followed
/// by the representation above. Throws DomainError on other letters.
SL2Matrix to_braid_matrix(const TwistWord& w);

struct Periodic {
  Rational fdtc;
  friend bool operator==(const Periodic&, const Periodic&) = default;
};
struct Reducible {
  friend bool operator==(const Reducible&, const Reducible&) = default;
};
/// h^d * t_b t_a^{-n_1} ... t_b t_a^{-n_k}; n is the least cyclic rotation.
struct PseudoAnosov {
  std::int64_t d = 0;
  std::vector<std::int64_t> n;
  friend bool operator==(const PseudoAnosov&, const PseudoAnosov&) = default;
};

using NormalForm3 = std::variant<Periodic, Reducible, PseudoAnosov>;

std::string describe(const NormalForm3& nf);

/// Nielsen-Thurston type of a word over {a,b} in MCG(S_{1,1}, boundary).
///
/// The word is pushed into PSL(2,Z) = Z/2 * Z/3 (generators S, U), freely and
/// cyclically reduced there, and the R/L syllables of the reduced cyclic word
/// give the block exponents. The power of h is then forced by the exponent
/// sum, and a mismatch in that identity throws std::logic_error.
NormalForm3 classify(const TwistWord& w);

/// Smallest m >= 1 with w^m central and equal to t_delta^k.
struct PeriodOrder {
  std::int64_t m = 1;
  std::int64_t k = 0;
};

/// Throws DomainError unless classify(w) is periodic.
PeriodOrder period_order(const TwistWord& w);

/// k/m with w^m = t_delta^k. Throws DomainError unless classify(w) is periodic.
Rational fdtc_periodic(const TwistWord& w);

/// h = (t_a t_b)^3 raised to d.
TwistWord half_twist_power(std::int64_t d);

/// h^d t_b t_a^{-n_1} ... t_b t_a^{-n_k}.
TwistWord normal_form_word(const std::vector<std::int64_t>& n, std::int64_t d);

enum class MurasugiOp { Minus, Zero, Cycle };

/// n^- (last entry + 1), n^0 (append 0) or a left rotation by one.
std::vector<std::int64_t> murasugi_op(const std::vector<std::int64_t>& n, MurasugiOp which);

/// A valid block tuple: non-empty, entries >= 0, some entry > 0.
bool valid_block_tuple(const std::vector<std::int64_t>& n);

/// Lexicographically least cyclic rotation.
std::vector<std::int64_t> least_rotation(const std::vector<std::int64_t>& n);

}  // namespace obcalc::mcg

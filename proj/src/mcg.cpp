#include "obcalc/mcg.hpp"

#include "obcalc/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace obcalc::mcg {

// ---------------------------------------------------------------------------
// TwistWord

TwistWord::TwistWord(std::vector<Letter> letters) : letters_(std::move(letters)) { normalize(); }

void TwistWord::normalize() {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto& l : letters_) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().curve == l.curve) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  letters_ = std::move(out);
}

TwistWord TwistWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "A" || tok == "B") {
      letters.push_back({std::string(1, static_cast<char>(std::tolower(tok[0]))), -1});
      continue;
    }
    const auto caret = tok.find('^');
    Letter l;
    l.curve = tok.substr(0, caret);
    if (l.curve.empty()) throw ParseError("empty curve id in token '" + tok + "'");
    if (caret != std::string::npos) {
      std::string_view e(tok);
      e.remove_prefix(caret + 1);
      if (!e.empty() && e.front() == '+') e.remove_prefix(1);
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), value);
      if (e.empty() || ec != std::errc() || ptr != e.data() + e.size())
        throw ParseError("bad exponent in token '" + tok + "'");
      l.exponent = value;
    }
    letters.push_back(std::move(l));
  }
  return TwistWord(std::move(letters));
}

std::int64_t TwistWord::exponent_sum() const {
  std::int64_t s = 0;
  for (const auto& l : letters_) s += l.exponent;
  return s;
}

std::int64_t TwistWord::twist_count() const {
  std::int64_t s = 0;
  for (const auto& l : letters_) s += l.exponent < 0 ? -l.exponent : l.exponent;
  return s;
}

TwistWord TwistWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return TwistWord(std::move(out));
}

TwistWord TwistWord::power(std::int64_t p) const {
  const TwistWord base = p < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (std::int64_t i = 0; i < (p < 0 ? -p : p); ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return TwistWord(std::move(out));
}

TwistWord TwistWord::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return TwistWord(std::move(out));
}

bool TwistWord::uses_only(std::initializer_list<std::string_view> allowed) const {
  return std::all_of(letters_.begin(), letters_.end(), [&](const Letter& l) {
    return std::find(allowed.begin(), allowed.end(), l.curve) != allowed.end();
  });
}

std::string TwistWord::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.curve;
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

TwistWord compose(const TwistWord& w1, const TwistWord& w2) {
  std::vector<Letter> all(w1.letters());
  all.insert(all.end(), w2.letters().begin(), w2.letters().end());
  return TwistWord(std::move(all));
}

// ---------------------------------------------------------------------------
// SL2

namespace {

std::int64_t checked_mul_add(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t x, y, z;
  if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y) ||
      __builtin_add_overflow(x, y, &z))
    throw DomainError("matrix entry overflow: word too long for 64-bit arithmetic");
  return z;
}

void require_ab(const TwistWord& w) {
  if (!w.uses_only({"a", "b"}))
    throw DomainError("word '" + w.str() + "' uses letters outside {a, b}");
}

}  // namespace

std::int64_t SL2Matrix::determinant() const {
  return checked_mul_add(e[0], e[3], -e[1], e[2]);
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& r) const {
  SL2Matrix out;
  out.e = {checked_mul_add(e[0], r.e[0], e[1], r.e[2]), checked_mul_add(e[0], r.e[1], e[1], r.e[3]),
           checked_mul_add(e[2], r.e[0], e[3], r.e[2]), checked_mul_add(e[2], r.e[1], e[3], r.e[3])};
  if (out.determinant() != 1) throw std::logic_error("SL2 product lost determinant one");
  return out;
}

SL2Matrix SL2Matrix::inverse() const { return SL2Matrix{{e[3], -e[1], -e[2], e[0]}}; }

SL2Matrix sigma1_matrix() { return SL2Matrix{{1, 1, 0, 1}}; }
SL2Matrix sigma2_matrix() { return SL2Matrix{{1, 0, -1, 1}}; }

SL2Matrix to_braid_matrix(const TwistWord& w) {
  require_ab(w);
  SL2Matrix m;
  for (const auto& l : w.letters()) {
    const SL2Matrix g = l.curve == "a" ? sigma1_matrix() : sigma2_matrix();
    const SL2Matrix step = l.exponent > 0 ? g : g.inverse();
    for (std::int64_t i = 0; i < (l.exponent < 0 ? -l.exponent : l.exponent); ++i) m = m * step;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Classification through PSL(2,Z) = <S> * <U>, S^2 = U^3 = 1.
//
// After conjugating the representation by diag(1,-1), t_a maps to R^-1 and
// t_b to L, where R = [[1,1],[0,1]] = SU and L = [[1,0],[1,1]] = SU^2 in PSL.
// Hence t_a = U^2 S, t_a^-1 = S U, t_b = S U^2, t_b^-1 = U S.

namespace {

enum : int { kS = 0, kU = 1, kU2 = 2 };

bool same_factor(int x, int y) { return (x == kS) == (y == kS); }

class PslReducer {
 public:
  void push(int t) {
    if (!stack_.empty() && same_factor(stack_.back(), t)) {
      if (t == kS) {
        stack_.pop_back();
      } else {
        const int c = (stack_.back() + t) % 3;
        if (c == 0) stack_.pop_back();
        else stack_.back() = c;
      }
      return;
    }
    stack_.push_back(t);
  }

  std::deque<int> cyclically_reduced() const {
    std::deque<int> w(stack_.begin(), stack_.end());
    while (w.size() >= 2 && same_factor(w.front(), w.back())) {
      if (w.front() == kS) {
        w.pop_front();
        w.pop_back();
      } else {
        const int c = (w.front() + w.back()) % 3;
        w.pop_back();
        if (c == 0) w.pop_front();
        else w.front() = c;
      }
    }
    return w;
  }

 private:
  std::vector<int> stack_;
};

std::deque<int> reduce_in_psl(const TwistWord& w) {
  PslReducer red;
  for (const auto& l : w.letters()) {
    const bool is_a = l.curve == "a";
    const bool positive = l.exponent > 0;
    int first, second;
    if (is_a) {
      first = positive ? kU2 : kS;
      second = positive ? kS : kU;
    } else {
      first = positive ? kS : kU;
      second = positive ? kU2 : kS;
    }
    for (std::int64_t i = 0; i < (positive ? l.exponent : -l.exponent); ++i) {
      red.push(first);
      red.push(second);
    }
  }
  return red.cyclically_reduced();
}

}  // namespace

std::vector<std::int64_t> least_rotation(const std::vector<std::int64_t>& n) {
  std::vector<std::int64_t> best = n;
  std::vector<std::int64_t> cur = n;
  for (std::size_t i = 1; i < n.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

NormalForm3 classify(const TwistWord& w) {
  require_ab(w);
  const std::int64_t e = w.exponent_sum();
  auto red = reduce_in_psl(w);

  // Elliptic or central image: finite order, hence periodic.
  if (red.size() <= 1) return Periodic{Rational(e, 12)};

  if (red.front() != kS) std::rotate(red.begin(), red.begin() + 1, red.end());
  // Syllables S U (= R) and S U^2 (= L).
  std::vector<bool> is_l;
  for (std::size_t i = 0; i + 1 < red.size(); i += 2) {
    if (red[i] != kS || red[i + 1] == kS) throw std::logic_error("PSL word not alternating");
    is_l.push_back(red[i + 1] == kU2);
  }
  const auto l_count = std::count(is_l.begin(), is_l.end(), true);
  if (l_count == 0 || l_count == static_cast<std::ptrdiff_t>(is_l.size())) return Reducible{};

  const auto first_l = std::find(is_l.begin(), is_l.end(), true);
  std::rotate(is_l.begin(), first_l, is_l.end());
  std::vector<std::int64_t> n;
  for (bool l : is_l) {
    if (l) n.push_back(0);
    else ++n.back();
  }
  std::int64_t sum_n = 0;
  for (auto v : n) sum_n += v;
  const auto k = static_cast<std::int64_t>(n.size());
  const std::int64_t rest = e - k + sum_n;
  if (rest % 6 != 0)
    throw std::logic_error("exponent-sum identity e = 6d + k - sum(n) has no integer solution");
  return PseudoAnosov{rest / 6, least_rotation(n)};
}

PeriodOrder period_order(const TwistWord& w) {
  const auto nf = classify(w);
  if (!std::holds_alternative<Periodic>(nf))
    throw DomainError("word '" + w.str() + "' is not periodic (" + describe(nf) + ")");
  const auto red = reduce_in_psl(w);
  std::int64_t psl_order = 1;
  if (red.size() == 1) psl_order = red.front() == kS ? 2 : 3;
  // w^psl_order is central in B3, i.e. h^j with 6j = psl_order * e(w).
  const std::int64_t six_j = psl_order * w.exponent_sum();
  if (six_j % 6 != 0) throw std::logic_error("central power has non-integral h exponent");
  const std::int64_t j = six_j / 6;
  if (j % 2 == 0) return {psl_order, j / 2};
  return {2 * psl_order, j};
}

Rational fdtc_periodic(const TwistWord& w) {
  const auto po = period_order(w);
  return Rational(po.k, po.m);
}

std::string describe(const NormalForm3& nf) {
  if (const auto* p = std::get_if<Periodic>(&nf)) return "periodic, FDTC " + to_text(p->fdtc);
  if (std::holds_alternative<Reducible>(nf)) return "reducible";
  const auto& pa = std::get<PseudoAnosov>(nf);
  std::string s = "pseudo-Anosov, n = (";
  for (std::size_t i = 0; i < pa.n.size(); ++i) s += (i ? "," : "") + std::to_string(pa.n[i]);
  return s + "), d = " + std::to_string(pa.d);
}

TwistWord half_twist_power(std::int64_t d) { return TwistWord::parse("a b").power(3 * d); }

TwistWord normal_form_word(const std::vector<std::int64_t>& n, std::int64_t d) {
  std::vector<Letter> letters(half_twist_power(d).letters());
  for (auto v : n) {
    letters.push_back({"b", 1});
    letters.push_back({"a", -v});
  }
  return TwistWord(std::move(letters));
}

bool valid_block_tuple(const std::vector<std::int64_t>& n) {
  if (n.empty()) return false;
  bool positive = false;
  for (auto v : n) {
    if (v < 0) return false;
    positive = positive || v > 0;
  }
  return positive;
}

std::vector<std::int64_t> murasugi_op(const std::vector<std::int64_t>& n, MurasugiOp which) {
  if (!valid_block_tuple(n)) throw DomainError("block tuple must be non-negative with a positive entry");
  std::vector<std::int64_t> out = n;
  switch (which) {
    case MurasugiOp::Minus: ++out.back(); break;
    case MurasugiOp::Zero: out.push_back(0); break;
    case MurasugiOp::Cycle: std::rotate(out.begin(), out.begin() + 1, out.end()); break;
  }
  return out;
}

}  // namespace obcalc::mcg

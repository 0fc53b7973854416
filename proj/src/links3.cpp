#include "obcalc/links3.hpp"

#include "obcalc/bracket.hpp"
#include "obcalc/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace obcalc::links3 {

Braid3Word::Braid3Word(std::vector<int> crossings) {
  for (int x : crossings) {
    if (x != 1 && x != -1 && x != 2 && x != -2) throw std::invalid_argument("3-braid crossing out of range");
    if (!crossings_.empty() && crossings_.back() == -x) crossings_.pop_back();
    else crossings_.push_back(x);
  }
}

Braid3Word Braid3Word::parse(std::string_view text) {
  std::vector<int> out;
  const auto word = mcg::TwistWord::parse(text);
  for (const auto& l : word.letters()) {
    int g;
    if (l.curve == "s1" || l.curve == "a") g = 1;
    else if (l.curve == "s2" || l.curve == "b") g = 2;
    else throw ParseError("unknown 3-braid generator '" + l.curve + "'");
    const std::int64_t count = l.exponent < 0 ? -l.exponent : l.exponent;
    if (count > 100000) throw DomainError("braid word too long");
    out.insert(out.end(), static_cast<std::size_t>(count), l.exponent < 0 ? -g : g);
  }
  return Braid3Word(std::move(out));
}

Braid3Word Braid3Word::from_twist_word(const mcg::TwistWord& w) {
  if (!w.uses_only({"a", "b"})) throw DomainError("word '" + w.str() + "' uses letters outside {a, b}");
  return parse(w.str());
}

mcg::TwistWord Braid3Word::to_twist_word() const {
  std::vector<mcg::Letter> letters;
  for (int x : crossings_) letters.push_back({x == 1 || x == -1 ? "a" : "b", x > 0 ? 1 : -1});
  return mcg::TwistWord(std::move(letters));
}

Braid3Word Braid3Word::inverse() const {
  std::vector<int> out(crossings_.rbegin(), crossings_.rend());
  for (int& x : out) x = -x;
  return Braid3Word(std::move(out));
}

Braid3Word Braid3Word::rotated(std::size_t shift) const {
  if (crossings_.empty()) return *this;
  std::vector<int> out(crossings_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return Braid3Word(std::move(out));
}

std::string Braid3Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < crossings_.size();) {
    std::size_t j = i;
    while (j < crossings_.size() && crossings_[j] == crossings_[i]) ++j;
    const int x = crossings_[i];
    const auto run = static_cast<std::int64_t>(j - i);
    if (!out.empty()) out += ' ';
    out += (x == 1 || x == -1) ? "s1" : "s2";
    const std::int64_t e = x > 0 ? run : -run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Braid3Word operator*(const Braid3Word& x, const Braid3Word& y) {
  std::vector<int> all(x.crossings_);
  all.insert(all.end(), y.crossings_.begin(), y.crossings_.end());
  return Braid3Word(std::move(all));
}

Braid3Word braid_of(const std::vector<std::int64_t>& n, std::int64_t d) {
  return Braid3Word::from_twist_word(mcg::normal_form_word(n, d));
}

std::int64_t determinant(const Braid3Word& b) {
  const std::int64_t v = 2 - mcg::to_braid_matrix(b.to_twist_word()).trace();
  return v < 0 ? -v : v;
}

std::int64_t determinant_state_sum(const Braid3Word& b) {
  return bracket::magnitude(bracket::state_sum({b.crossings(), std::nullopt}));
}

std::int64_t determinant_tl(const Braid3Word& b) {
  return bracket::magnitude(bracket::temperley_lieb({b.crossings(), std::nullopt}));
}

namespace {

void require_valid(const std::vector<std::int64_t>& n) {
  if (!mcg::valid_block_tuple(n))
    throw DomainError("block tuple must be non-empty, non-negative, with a positive entry");
}

// braid_of without free reduction, so crossing indices match the blocks.
std::vector<int> raw_blocks(const std::vector<std::int64_t>& n) {
  std::vector<int> out;
  for (auto v : n) {
    out.push_back(2);
    out.insert(out.end(), static_cast<std::size_t>(v), -1);
  }
  return out;
}

}  // namespace

std::size_t resolution_site(const std::vector<std::int64_t>& n) {
  require_valid(n);
  return raw_blocks(mcg::murasugi_op(n, mcg::MurasugiOp::Minus)).size() - 1;
}

std::int64_t unoriented_resolution_det_at(const std::vector<std::int64_t>& n, std::size_t site) {
  require_valid(n);
  const auto crossings = raw_blocks(mcg::murasugi_op(n, mcg::MurasugiOp::Minus));
  if (site >= crossings.size() || crossings[site] != -1)
    throw DomainError("resolution site must be a sigma_1^{-1} crossing");
  return bracket::magnitude(bracket::temperley_lieb({crossings, site}));
}

std::int64_t unoriented_resolution_det(const std::vector<std::int64_t>& n) {
  return unoriented_resolution_det_at(n, resolution_site(n));
}

HFModel hf_model(const std::vector<std::int64_t>& n) {
  require_valid(n);
  HFModel h;
  h.tower_count = determinant(braid_of(n, 0));
  h.hat_rank = h.tower_count + 2;
  return h;
}

std::string support_genus_name(SupportGenus s) {
  switch (s) {
    case SupportGenus::Zero: return "zero";
    case SupportGenus::One: return "one";
    case SupportGenus::UnknownD1: return "unknown_d1";
  }
  return {};
}

namespace {

using Tuple = std::vector<std::int64_t>;

Tuple rotate_left(Tuple t, std::size_t k) {
  if (!t.empty()) std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k % t.size()), t.end());
  return t;
}

bool is_rotation(const Tuple& x, const Tuple& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (rotate_left(x, k) == y) return true;
  return x.empty();
}

// Walks n back to (1) through inverse Murasugi moves and returns the forward
// steps from (1) to n.
std::vector<ChainStep> chain_to(const Tuple& n) {
  std::vector<ChainStep> reversed;  // reversed[i].n is reached by reversed[i].rule
  Tuple x = n;
  auto bring_to_end = [&](std::size_t i) {
    const std::size_t k = (i + 1) % x.size();
    if (k == 0) return;
    reversed.push_back({"R-conj", x, 2});
    x = rotate_left(x, k);
  };
  while (x != Tuple{1}) {
    const auto zero = std::find(x.begin(), x.end(), 0);
    if (zero != x.end()) {
      bring_to_end(static_cast<std::size_t>(zero - x.begin()));
      reversed.push_back({"R-murasugi-zero", x, 2});
      x.pop_back();
      continue;
    }
    std::size_t pick = x.size() - 1;
    for (std::size_t i = x.size(); i-- > 0;)
      if (x[i] > 1) {
        pick = i;
        break;
      }
    bring_to_end(pick);
    reversed.push_back({"R-murasugi-minus", x, 2});
    --x.back();
  }
  std::vector<ChainStep> chain{{"base", {1}, 2}};
  chain.insert(chain.end(), reversed.rbegin(), reversed.rend());

  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Tuple& prev = chain[i - 1].n;
    const Tuple& cur = chain[i].n;
    bool ok = false;
    if (chain[i].rule == "R-murasugi-zero") ok = mcg::murasugi_op(prev, mcg::MurasugiOp::Zero) == cur;
    else if (chain[i].rule == "R-murasugi-minus") ok = mcg::murasugi_op(prev, mcg::MurasugiOp::Minus) == cur;
    else ok = is_rotation(prev, cur);
    if (!ok) throw std::logic_error("Condition R chain step does not check");
  }
  if (chain.back().n != n) throw std::logic_error("Condition R chain does not end at the target tuple");
  return chain;
}

}  // namespace

SupportGenusReport support_genus(const std::vector<std::int64_t>& n, std::int64_t d) {
  require_valid(n);
  SupportGenusReport rep;
  if (d <= 0) {
    rep.verdict = SupportGenus::Zero;
  } else if (d == 1) {
    rep.verdict = SupportGenus::UnknownD1;
  } else {
    rep.verdict = SupportGenus::One;
    rep.chain = chain_to(n);
    for (std::int64_t e = 3; e <= d; ++e) rep.chain.push_back({"R-dtwist", n, e});
  }
  return rep;
}

}  // namespace obcalc::links3

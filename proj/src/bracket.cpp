#include "obcalc/bracket.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace obcalc::bracket {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("bracket coefficient overflow");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("bracket coefficient overflow");
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t components() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Z8 Z8::unit(int power) {
  int p = ((power % 8) + 8) % 8;
  Z8 z;
  if (p < 4) z.c[static_cast<std::size_t>(p)] = 1;
  else z.c[static_cast<std::size_t>(p - 4)] = -1;
  return z;
}

Z8& Z8::operator+=(const Z8& o) {
  for (std::size_t i = 0; i < 4; ++i) c[i] = add(c[i], o.c[i]);
  return *this;
}

Z8 Z8::operator*(const Z8& o) const {
  Z8 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const std::int64_t v = mul(c[i], o.c[j]);
      if (i + j < 4) out.c[i + j] = add(out.c[i + j], v);
      else out.c[i + j - 4] = add(out.c[i + j - 4], -v);
    }
  return out;
}

std::int64_t magnitude(const Z8& v) {
  std::int64_t found = 0;
  int nonzero = 0;
  for (auto x : v.c)
    if (x != 0) {
      ++nonzero;
      found = x < 0 ? -x : x;
    }
  if (nonzero > 1) throw std::logic_error("bracket value at zeta_8 is not a unit multiple of an integer");
  return found;
}

Z8 state_sum(const Diagram& d) {
  const std::size_t c = d.crossings.size();
  if (c > 30) throw std::invalid_argument("state sum limited to 30 crossings");
  if (d.unoriented_at && *d.unoriented_at >= c) throw std::out_of_range("smoothing marker past the last crossing");
  const std::size_t levels = c == 0 ? 1 : c;
  auto node = [levels](std::size_t level, std::size_t strand) { return (level % levels) * 3 + strand; };

  Z8 total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    if (d.unoriented_at && ((state >> *d.unoriented_at) & 1U) == 0) continue;
    UnionFind uf(levels * 3);
    int power = 0;
    for (std::size_t l = 0; l < c; ++l) {
      const int x = d.crossings[l];
      const std::size_t lo = static_cast<std::size_t>(x < 0 ? -x : x) - 1;
      const bool horizontal = (state >> l) & 1U;
      for (std::size_t s = 0; s < 3; ++s)
        if (s != lo && s != lo + 1) uf.unite(node(l, s), node(l + 1, s));
      if (horizontal) {
        uf.unite(node(l, lo), node(l, lo + 1));
        uf.unite(node(l + 1, lo), node(l + 1, lo + 1));
      } else {
        uf.unite(node(l, lo), node(l + 1, lo));
        uf.unite(node(l, lo + 1), node(l + 1, lo + 1));
      }
      if (d.unoriented_at && *d.unoriented_at == l) continue;
      // Positive crossings weigh the vertical smoothing by A, negative ones
      // the horizontal smoothing.
      power += (horizontal == (x < 0)) ? 1 : -1;
    }
    if (uf.components() == 1) total += Z8::unit(power);
  }
  return total;
}

namespace {

// Planar matching of bottom points 0..2 and top points 3..5.
using Matching = std::array<int, 6>;

constexpr Matching kIdentity{3, 4, 5, 0, 1, 2};
constexpr Matching kE1{1, 0, 5, 4, 3, 2};
constexpr Matching kE2{3, 2, 1, 0, 5, 4};

// Stacks `upper` on top of `lower`; returns the matching and the number of
// closed loops formed in the middle.
std::pair<Matching, int> stack(const Matching& lower, const Matching& upper) {
  // nodes 0..5 lower, 6..11 upper
  UnionFind uf(12);
  for (int i = 0; i < 6; ++i) {
    uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(lower[static_cast<std::size_t>(i)]));
    uf.unite(static_cast<std::size_t>(6 + i), static_cast<std::size_t>(6 + upper[static_cast<std::size_t>(i)]));
  }
  for (int j = 0; j < 3; ++j) uf.unite(static_cast<std::size_t>(3 + j), static_cast<std::size_t>(6 + j));
  const std::array<std::size_t, 6> outer{0, 1, 2, 9, 10, 11};
  Matching out{};
  std::vector<bool> outer_root(12, false);
  for (std::size_t a = 0; a < 6; ++a) {
    outer_root[uf.find(outer[a])] = true;
    for (std::size_t b = 0; b < 6; ++b)
      if (a != b && uf.find(outer[a]) == uf.find(outer[b])) out[a] = static_cast<int>(b);
  }
  int loops = 0;
  for (std::size_t i = 0; i < 12; ++i)
    if (uf.find(i) == i && !outer_root[i]) ++loops;
  return {out, loops};
}

int closure_loops(const Matching& m) {
  UnionFind uf(6);
  for (std::size_t i = 0; i < 6; ++i) uf.unite(i, static_cast<std::size_t>(m[i]));
  for (std::size_t j = 0; j < 3; ++j) uf.unite(j, 3 + j);
  return static_cast<int>(uf.components());
}

}  // namespace

Z8 temperley_lieb(const Diagram& d) {
  if (d.unoriented_at && *d.unoriented_at >= d.crossings.size())
    throw std::out_of_range("smoothing marker past the last crossing");
  // The loop value vanishes at A = zeta_8, so any term that closes a loop
  // in the middle is dropped at once.
  std::map<Matching, Z8> current{{kIdentity, Z8::unit(0)}};
  for (std::size_t l = 0; l < d.crossings.size(); ++l) {
    const int x = d.crossings[l];
    const Matching& e = (x == 1 || x == -1) ? kE1 : kE2;
    std::vector<std::pair<Matching, Z8>> terms;
    if (d.unoriented_at && *d.unoriented_at == l) {
      terms.push_back({e, Z8::unit(0)});
    } else {
      terms.push_back({kIdentity, Z8::unit(x > 0 ? 1 : -1)});
      terms.push_back({e, Z8::unit(x > 0 ? -1 : 1)});
    }
    std::map<Matching, Z8> next;
    for (const auto& [m, coef] : current)
      for (const auto& [t, w] : terms) {
        const auto [prod, loops] = stack(m, t);
        if (loops > 0) continue;
        next[prod] += coef * w;
      }
    current = std::move(next);
  }
  Z8 total;
  for (const auto& [m, coef] : current)
    if (closure_loops(m) == 1) total += coef;
  return total;
}

}  // namespace obcalc::bracket

#pragma once

// Hand-rolled generators and independent oracles shared by the unit and
// acceptance tests. Nothing here calls the functions it is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "obcalc/foliations.hpp"
#include "obcalc/openbook.hpp"
#include "obcalc/rational.hpp"

namespace testing {

using obcalc::Rational;
using Rng = std::mt19937_64;
namespace ob = obcalc::openbook;
namespace fol = obcalc::foliations;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Generators

/// Word over {a, b} with unit exponents, as text, of length in [0, max_len].
inline std::string random_ab_word(Rng& rng, int max_len) {
  const auto len = uniform(rng, 0, max_len);
  std::string s;
  for (std::int64_t i = 0; i < len; ++i) {
    if (i) s += ' ';
    s += "abAB"[uniform(rng, 0, 3)];
  }
  return s;
}

/// 3-braid as crossing list (+-1, +-2).
inline std::vector<int> random_braid(Rng& rng, int max_len) {
  const auto len = uniform(rng, 0, max_len);
  std::vector<int> out;
  for (std::int64_t i = 0; i < len; ++i) {
    const int g = static_cast<int>(uniform(rng, 1, 2));
    out.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return out;
}

/// Valid block tuple: entries in [0, max_entry], some entry positive.
inline std::vector<std::int64_t> random_blocks(Rng& rng, int max_len, int max_entry) {
  std::vector<std::int64_t> n;
  do {
    n.assign(static_cast<std::size_t>(uniform(rng, 1, max_len)), 0);
    for (auto& x : n) x = uniform(rng, 0, max_entry);
  } while (std::all_of(n.begin(), n.end(), [](auto x) { return x == 0; }));
  return n;
}

/// Every valid block tuple with length <= max_len and entries <= max_entry.
inline std::vector<std::vector<std::int64_t>> all_blocks(int max_len, int max_entry) {
  std::vector<std::vector<std::int64_t>> out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(len), 0);
    while (true) {
      if (std::any_of(n.begin(), n.end(), [](auto x) { return x > 0; })) out.push_back(n);
      std::size_t i = 0;
      while (i < n.size() && n[i] == max_entry) n[i++] = 0;
      if (i == n.size()) break;
      ++n[i];
    }
  }
  return out;
}

struct PeriodicInput {
  std::int64_t m;
  std::vector<std::int64_t> k;  // ascending
};

// Denominators for which the genus-one grading table has a row.
inline bool graded_denominator(std::int64_t k, std::int64_t m) {
  const auto g = std::gcd(k, m);
  const auto q = m / g;
  return q == 1 || q == 2 || q == 3 || q == 4 || q == 6;
}

/// Genus-one periodic data with r <= max_r, m <= max_m, 0 <= k_i <= max_k,
/// some k_i > 0 when r >= 2, and k_r / m in the range of the grading table.
inline PeriodicInput random_periodic(Rng& rng, int max_r, int max_m, int max_k) {
  while (true) {
    PeriodicInput p;
    p.m = uniform(rng, 1, max_m);
    p.k.resize(static_cast<std::size_t>(uniform(rng, 1, max_r)));
    for (auto& x : p.k) x = uniform(rng, 0, max_k);
    std::sort(p.k.begin(), p.k.end());
    if (p.k.size() >= 2 && p.k.back() == 0) continue;
    if (!graded_denominator(p.k.back(), p.m)) continue;
    return p;
  }
}

/// Random descriptor with labels prefix+i and curves prefix+"c"+j. Every curve
/// carries a cap image for every boundary, so any cap is defined.
inline ob::OpenBookDesc random_book(Rng& rng, const std::string& prefix, int min_r = 1) {
  ob::OpenBookDesc book;
  book.surface.genus = uniform(rng, 0, 2);
  const auto r = uniform(rng, min_r, 4);
  for (std::int64_t i = 0; i < r; ++i) book.surface.boundary.push_back(prefix + std::to_string(i));
  const auto curves = uniform(rng, 1, 5);
  std::vector<std::string> ids;
  for (std::int64_t j = 0; j < curves; ++j) {
    ob::CurveInfo c;
    c.id = prefix + "c" + std::to_string(j);
    const bool parallel = uniform(rng, 0, 2) == 0;
    if (parallel) {
      c.kind = ob::CurveKind::BoundaryParallel;
      c.parallel_to = book.surface.boundary[static_cast<std::size_t>(uniform(rng, 0, r - 1))];
    } else {
      c.kind = uniform(rng, 0, 1) ? ob::CurveKind::Nonseparating : ob::CurveKind::Generic;
    }
    for (const auto& b : book.surface.boundary) {
      if (parallel && b == c.parallel_to) continue;
      c.cap_images[b] = uniform(rng, 0, 3) == 0 ? ob::CapImage::null() : ob::CapImage::unaffected();
    }
    ids.push_back(c.id);
    book.alphabet.emplace(c.id, c);
  }
  std::vector<obcalc::mcg::Letter> letters;
  const auto len = uniform(rng, 0, 6);
  for (std::int64_t i = 0; i < len; ++i)
    letters.push_back({ids[static_cast<std::size_t>(uniform(rng, 0, curves - 1))],
                       uniform(rng, 0, 1) ? 1 : -1});
  book.monodromy = obcalc::mcg::TwistWord(letters);
  book.validate();
  return book;
}

/// Random data satisfying the balance: boundary counts are drawn first and the
/// remaining defect is split into interior singularities of >= 3 prongs.
inline fol::FoliationData random_foliation(Rng& rng) {
  while (true) {
    const auto g = uniform(rng, 0, 3);
    const auto r = uniform(rng, 1, 4);
    std::vector<std::int64_t> sings;
    std::int64_t boundary_part = 0;
    for (std::int64_t i = 0; i < r; ++i) {
      sings.push_back(uniform(rng, 1, 5));
      boundary_part += 2 - sings.back();
    }
    std::int64_t defect = boundary_part - (4 - 4 * g);  // sum over interior of (p - 2)
    if (defect < 0) continue;
    std::vector<std::int64_t> interior;
    while (defect > 0) {
      const auto part = uniform(rng, 1, defect);
      interior.push_back(part + 2);
      defect -= part;
    }
    fol::FoliationData fd;
    fd.surface.genus = g;
    for (std::size_t i = 0; i < sings.size(); ++i) {
      const auto label = "B" + std::to_string(i + 1);
      fd.surface.boundary.push_back(label);
      fd.boundary_sings[label] = sings[i];
    }
    fd.interior_prongs = std::move(interior);
    for (const auto& b : fd.surface.boundary)
      if (uniform(rng, 0, 1)) fd.fdtc[b] = Rational(uniform(rng, 0, 12), uniform(rng, 1, 6));
    return fd;
  }
}

// ---------------------------------------------------------------------------
// Oracles

namespace oracle {

using Mat2 = std::array<std::int64_t, 4>;

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

/// t_a -> [[1,1],[0,1]], t_b -> [[1,0],[-1,1]] on a word of single letters.
inline Mat2 matrix_of(const std::string& word) {
  const Mat2 a{1, 1, 0, 1}, ai{1, -1, 0, 1}, b{1, 0, -1, 1}, bi{1, 0, 1, 1};
  Mat2 m{1, 0, 0, 1};
  for (char c : word) {
    switch (c) {
      case 'a': m = mul(m, a); break;
      case 'A': m = mul(m, ai); break;
      case 'b': m = mul(m, b); break;
      case 'B': m = mul(m, bi); break;
      default: break;
    }
  }
  return m;
}

inline std::int64_t exponent_sum(const std::string& word) {
  std::int64_t e = 0;
  for (char c : word) e += (c == 'a' || c == 'b') ? 1 : (c == 'A' || c == 'B') ? -1 : 0;
  return e;
}

enum class Type { Periodic, Reducible, PseudoAnosov };

/// Nielsen-Thurston type from the trace alone.
inline Type type_of(const Mat2& m) {
  const auto tr = m[0] + m[3];
  const bool central = m[1] == 0 && m[2] == 0;
  if (central || (tr > -2 && tr < 2)) return Type::Periodic;
  if (tr == 2 || tr == -2) return Type::Reducible;
  return Type::PseudoAnosov;
}

/// Order of a periodic matrix in SL(2,Z); 0 if it has none below 13.
inline std::int64_t order(const Mat2& m) {
  Mat2 p = m;
  for (std::int64_t i = 1; i <= 12; ++i) {
    if (p == Mat2{1, 0, 0, 1}) return i;
    p = mul(p, m);
  }
  return 0;
}

/// The FDTC of a periodic class is the abelianization scaled so that the
/// boundary twist (t_a t_b)^6, of exponent sum 12, has coefficient one.
inline Rational periodic_fdtc(const std::string& word) { return Rational(exponent_sum(word), 12); }

/// Unreduced Burau matrix of a 3-braid at t = -1; the determinant of the
/// closure is |det| of the leading 2x2 minor of I - B.
inline std::int64_t burau3_det(const std::vector<int>& crossings) {
  using M3 = std::array<std::int64_t, 9>;
  auto mul3 = [](const M3& x, const M3& y) {
    M3 z{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) z[3 * i + j] += x[3 * i + k] * y[3 * k + j];
    return z;
  };
  // sigma_i: block [[1 - t, t], [1, 0]] at t = -1 is [[2, -1], [1, 0]];
  // its inverse is [[0, 1], [-1, 2]].
  auto gen = [](int g) {
    M3 m{1, 0, 0, 0, 1, 0, 0, 0, 1};
    const int o = std::abs(g) == 1 ? 0 : 1;
    const std::array<std::int64_t, 4> blk = g > 0 ? std::array<std::int64_t, 4>{2, -1, 1, 0}
                                                  : std::array<std::int64_t, 4>{0, 1, -1, 2};
    m[3 * o + o] = blk[0];
    m[3 * o + o + 1] = blk[1];
    m[3 * (o + 1) + o] = blk[2];
    m[3 * (o + 1) + o + 1] = blk[3];
    return m;
  };
  M3 b{1, 0, 0, 0, 1, 0, 0, 0, 1};
  for (int c : crossings) b = mul3(b, gen(c));
  const std::int64_t a00 = 1 - b[0], a01 = -b[1], a10 = -b[3], a11 = 1 - b[4];
  const auto d = a00 * a11 - a01 * a10;
  return d < 0 ? -d : d;
}

/// Solves A x = y over Q by Gauss-Jordan elimination; A is square and
/// invertible.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> y) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(y[piv], y[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      y[row] -= f * y[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) y[i] /= a[i][i];
  return y;
}

/// Multiplicities of the periodic domain: adjacent differences
/// k_i (s_i - s_{i+1}) = -k_r and k_r s_r = -k_r (1-based, s_{r+1} = 0).
inline std::vector<Rational> domain_multiplicities(const std::vector<std::int64_t>& k) {
  const std::size_t r = k.size();
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r, Rational(0)));
  std::vector<Rational> y(r, Rational(-k.back()));
  for (std::size_t i = 0; i < r; ++i) {
    a[i][i] = Rational(k[i]);
    if (i + 1 < r) a[i][i + 1] = Rational(-k[i]);
  }
  return solve(a, y);
}

struct GradingRow {
  std::int64_t den, offset;
  Rational value;
};

/// Grading of the contact class of a genus-one, one-boundary periodic open
/// book, indexed by FDTC rows (num = den * k + offset with k >= 0).
inline const std::vector<GradingRow>& grading_rows() {
  static const std::vector<GradingRow> rows{
      {6, 1, Rational(-1, 2)}, {6, 5, Rational(-2)},    {4, 1, Rational(-1, 4)}, {4, 3, Rational(-7, 4)},
      {3, 1, Rational(0)},     {3, 2, Rational(-3, 2)}, {2, -1, Rational(-1)},   {1, 0, Rational(-1)},
  };
  return rows;
}

/// Rows matching c (with k >= 0), as indices into grading_rows().
inline std::vector<std::size_t> matching_rows(const Rational& c) {
  std::vector<std::size_t> out;
  const auto p = obcalc::num(c), q = obcalc::den(c);
  for (std::size_t i = 0; i < grading_rows().size(); ++i) {
    const auto& row = grading_rows()[i];
    if (q != row.den) continue;
    const obcalc::BigInt shifted = p - row.offset;
    if (shifted % row.den == 0 && shifted / row.den >= 0) out.push_back(i);
  }
  return out;
}

}  // namespace oracle
}  // namespace testing

#include "obcalc/dthree.hpp"

#include "obcalc/error.hpp"

#include <array>
#include <cstdlib>

namespace obcalc::dthree {

namespace {

struct Row {
  std::int64_t den;
  std::int64_t offset;  // numerator = den * k + offset
  Rational value;
  const char* label;
};

const std::array<Row, 8>& rows() {
  static const std::array<Row, 8> table{{
      {6, 5, Rational(-2), "(6k+5)/6"},
      {4, 3, Rational(-7, 4), "(4k+3)/4"},
      {3, 2, Rational(-3, 2), "(3k+2)/3"},
      {6, 1, Rational(-1, 2), "(6k+1)/6"},
      {4, 1, Rational(-1, 4), "(4k+1)/4"},
      {3, 1, Rational(0), "(3k+1)/3"},
      {2, -1, Rational(-1), "(2k-1)/2"},
      {1, 0, Rational(-1), "k"},
  }};
  return table;
}

struct Match {
  const Row* row;
  BigInt k;
};

Match lookup(const Rational& c) {
  const BigInt p = num(c), q = den(c);
  for (const auto& row : rows()) {
    if (q != row.den) continue;
    const BigInt shifted = p - row.offset;
    if (shifted % row.den != 0) continue;
    const BigInt k = shifted / row.den;
    if (k >= 0) return {&row, k};
  }
  throw DomainError("overtwisted regime: FDTC " + to_text(c) + " matches no grading row");
}

}  // namespace

Rational f_table(const Rational& c) { return lookup(c).row->value; }

std::string f_row(const Rational& c) {
  const auto m = lookup(c);
  return std::string(m.row->label) + " with k = " + m.k.str();
}

Rational offset_from_env() {
  const char* v = std::getenv("OBCALC_D3_OFFSET");
  if (v == nullptr || *v == '\0') return Rational(0);
  const Rational off = parse_rational(v);
  if (den(off * 2) != 1) throw ParseError("OBCALC_D3_OFFSET must be a half-integer");
  return off;
}

GradingReport d3(const domains::PeriodicData& pd, domains::C1Channel channel, const Rational& offset) {
  pd.validate();
  if (pd.g != 1) throw DomainError("the d3 formula covers genus-one pages only");
  if (pd.r < 1) throw DomainError("d3 needs at least one boundary component");
  if (den(offset * 2) != 1) throw DomainError("d3 offset must be a half-integer");

  GradingReport rep;
  rep.data = pd;
  rep.channel = channel;
  rep.offset = offset;
  const auto r = pd.r;
  for (std::int64_t i = 0; i < r; ++i)
    if (pd.k[static_cast<std::size_t>(i)] != 0) {
      rep.I = i + 1;
      break;
    }
  if (rep.I == 0 && r >= 2) throw DomainError("every k_i vanishes: the index I is undefined");

  rep.fdtc_last = pd.fdtc(static_cast<std::size_t>(r - 1));
  rep.f_value = f_table(rep.fdtc_last);

  Rational shift_printed(0), shift_fp(0);
  for (std::int64_t j = 0; j + 1 < r; ++j) {
    domains::PeriodicData tail{pd.g, r - j, pd.m, std::vector<std::int64_t>(pd.k.begin() + j, pd.k.end())};
    const auto printed = domains::intersection_data(tail, domains::C1Channel::Printed);
    const auto fp = domains::intersection_data(tail, domains::C1Channel::FirstPrinciples);
    shift_printed += printed.shift;
    shift_fp += fp.shift;
    rep.caps.push_back(channel == domains::C1Channel::Printed ? printed : fp);
  }
  rep.d3_telescoped_printed = -(rep.f_value + shift_printed) - Rational(1, 2);
  rep.d3_telescoped_fp = -(rep.f_value + shift_fp) - Rational(1, 2);
  rep.d3_telescoped =
      channel == domains::C1Channel::Printed ? rep.d3_telescoped_printed : rep.d3_telescoped_fp;

  if (r == 1) {
    rep.d3_printed = -rep.f_value - Rational(1, 2);
    return rep;
  }
  if (rep.I < r) {
    // Tail locality: s_j of the full vector is s_{j-I+1} of the vector
    // truncated to k_I, ..., k_r.
    const auto sol = domains::solve_domain(
        {pd.g, r - rep.I + 1, pd.m, std::vector<std::int64_t>(pd.k.begin() + (rep.I - 1), pd.k.end())});
    rep.s = sol->s;
  }
  Rational sum(0);
  const Rational m(pd.m), kr(pd.k.back());
  for (std::int64_t j = rep.I - 1; j <= r - 2; ++j) {
    const auto t = static_cast<std::size_t>(j - (rep.I - 1));
    const Rational kj1(pd.k[static_cast<std::size_t>(j)]);
    const Rational top = kr * Rational(j - r) - kj1 * rep.s[t];
    sum += top * top / (m * kj1 * rep.s[t] * rep.s[t + 1]);
  }
  rep.d3_printed = -rep.f_value + Rational(3 * rep.I - r - 4, 4) - sum / 4;
  return rep;
}

std::string tightness_name(Tightness t) {
  return t == Tightness::TightSteinFillable ? "tight_stein_fillable" : "overtwisted";
}

Tightness tightness(const domains::PeriodicData& pd) {
  if (pd.r < 1 || pd.k.empty()) throw DomainError("tightness needs at least one boundary component");
  pd.validate(true);
  return pd.k.front() >= 0 ? Tightness::TightSteinFillable : Tightness::Overtwisted;
}

BindingBound binding_margin(std::int64_t r, const Rational& d3_value) {
  BindingBound b;
  b.margin = Rational(r + 1) + Rational(4) * d3_value;
  b.satisfied = b.margin >= 0;
  return b;
}

BindingBound binding_bound(const domains::PeriodicData& pd, domains::C1Channel channel, const Rational& offset) {
  if (tightness(pd) != Tightness::TightSteinFillable)
    throw DomainError("binding bound applies to tight contact structures only");
  return binding_margin(pd.r, d3(pd, channel, offset).d3());
}

}  // namespace obcalc::dthree

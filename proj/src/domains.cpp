#include "obcalc/domains.hpp"

#include "obcalc/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace obcalc::domains {

void PeriodicData::validate(bool allow_negative) const {
  if (g < 0) throw DomainError("negative genus");
  if (m < 1) throw DomainError("m must be a positive integer");
  if (r < 0 || static_cast<std::size_t>(r) != k.size())
    throw DomainError("k must have exactly r = " + std::to_string(r) + " entries");
  if (!std::is_sorted(k.begin(), k.end())) throw DomainError("k must be sorted ascending");
  if (!allow_negative && !k.empty() && k.front() < 0)
    throw DomainError("k entries must be non-negative");
}

std::vector<std::size_t> sort_boundaries(PeriodicData& pd) {
  std::vector<std::size_t> perm(pd.k.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return pd.k[a] < pd.k[b]; });
  std::vector<std::int64_t> sorted;
  for (auto i : perm) sorted.push_back(pd.k[i]);
  pd.k = std::move(sorted);
  return perm;
}

std::optional<DomainSolution> solve_domain(const PeriodicData& pd) {
  pd.validate();
  if (pd.r < 2) throw DomainError("capping needs r >= 2");
  if (pd.k.front() == 0) return std::nullopt;

  const auto r = static_cast<std::size_t>(pd.r);
  const Rational kr(pd.k.back());
  DomainSolution sol;
  sol.t = -kr;
  sol.s.assign(r, Rational(0));
  Rational tail(0);
  for (std::size_t i = r; i-- > 0;) {
    // tail = sum_{j=i+1}^{r} 1/k_j in 1-based indexing, i.e. k[i..r-1] here.
    tail += Rational(1, pd.k[i]);
    sol.s[i] = -kr * tail;
  }
  sol.N = Rational(pd.k.front()) * sol.s[0] / Rational(pd.m);
  return sol;
}

Rational euler_measure(const PeriodicData& pd) {
  if (!solve_domain(pd)) throw DomainError("euler measure undefined: intersection form is trivial");
  return Rational(pd.k.back() * (2 - 2 * pd.g - pd.r), pd.m);
}

std::string channel_name(C1Channel c) { return c == C1Channel::Printed ? "printed" : "first_principles"; }

C1Channel parse_channel(const std::string& text) {
  if (text == "printed") return C1Channel::Printed;
  if (text == "first_principles") return C1Channel::FirstPrinciples;
  throw ParseError("unknown c1^2 channel '" + text + "' (expected printed or first_principles)");
}

C1Channel channel_from_env() {
  const char* v = std::getenv("OBCALC_C1SQ_CHANNEL");
  if (v == nullptr || *v == '\0') return C1Channel::Printed;
  return parse_channel(v);
}

CobordismReport intersection_data(const PeriodicData& pd, C1Channel channel) {
  CobordismReport rep;
  rep.channel = channel;
  const auto sol = solve_domain(pd);
  if (!sol) {
    rep.trivial = true;
    rep.shift = Rational(-1, 2);
    return rep;
  }
  const Rational m(pd.m), k1(pd.k.front()), kr(pd.k.back());
  const Rational& s0 = sol->s[0];
  const Rational& s1 = sol->s[1];
  rep.euler_measure = kr * Rational(2 - 2 * pd.g - pd.r) / m;
  rep.self_intersection = -sol->N * s1;
  rep.c1_pairing = abs(sol->N);
  const Rational top = kr * Rational(2 - 2 * pd.g - pd.r) - k1 * s0;
  rep.c1_squared_printed = top * top / (m * k1 * s0 * s1);
  rep.c1_squared_fp = rep.c1_pairing * rep.c1_pairing / rep.self_intersection;
  rep.shift = (rep.c1_squared() - Rational(2) + Rational(3)) / Rational(4);
  return rep;
}

}  // namespace obcalc::domains

#pragma once

#include <string>
#include <vector>

#include "obcalc/domains.hpp"
#include "obcalc/rational.hpp"

namespace obcalc::dthree {

/// Grading of the contact class of a genus-one, one-boundary periodic open
/// book as a function of its FDTC c. Throws DomainError ("overtwisted
/// regime") when c matches no row with k >= 0.
Rational f_table(const Rational& c);

/// The row f_table used, e.g. "(6k+1)/6 with k = 0".
std::string f_row(const Rational& c);

/// OBCALC_D3_OFFSET as a half-integer, default 0. Throws ParseError.
Rational offset_from_env();

struct GradingReport {
  domains::PeriodicData data;
  std::int64_t I = 0;  // 0 when every k vanishes (r = 1 only)
  Rational fdtc_last;
  Rational f_value;
  /// One report per cap, capping in ascending-k order; stage j caps the
  /// boundary of k_{j+1} on the page carrying k_{j+1}, ..., k_r.
  std::vector<domains::CobordismReport> caps;
  std::vector<Rational> s;  // s_{I-1}, ..., s_{r-1}; empty when I >= r

  Rational d3_printed;          // closed form
  Rational d3_telescoped;       // telescope under `channel`
  Rational d3_telescoped_printed;
  Rational d3_telescoped_fp;
  domains::C1Channel channel = domains::C1Channel::Printed;
  Rational offset;

  /// d3_telescoped + offset: the value the rest of the library consumes.
  Rational d3() const { return d3_telescoped + offset; }
};

/// Requires g = 1 and sorted non-negative k; r >= 2 needs some k_i > 0.
/// The data are evaluated formally: realizability by an actual periodic
/// diffeomorphism is not checked.
GradingReport d3(const domains::PeriodicData& pd, domains::C1Channel channel, const Rational& offset = Rational(0));

enum class Tightness { TightSteinFillable, Overtwisted };
std::string tightness_name(Tightness t);

/// All boundary FDTCs non-negative. Negative k allowed; r = 0 rejected.
Tightness tightness(const domains::PeriodicData& pd);

struct BindingBound {
  bool satisfied = false;
  Rational margin;  // r + 1 + 4 d3
};

BindingBound binding_margin(std::int64_t r, const Rational& d3);

/// Throws DomainError on overtwisted input.
BindingBound binding_bound(const domains::PeriodicData& pd, domains::C1Channel channel,
                           const Rational& offset = Rational(0));

}  // namespace obcalc::dthree

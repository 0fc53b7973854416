#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "obcalc/openbook.hpp"
#include "obcalc/rational.hpp"

namespace obcalc::foliations {

/// Singularity data of the stable foliation of a pseudo-Anosov monodromy.
/// The FDTCs are supplied, never computed.
struct FoliationData {
  openbook::SurfaceSig surface;
  std::vector<std::int64_t> interior_prongs;
  std::map<std::string, std::int64_t> boundary_sings;
  std::map<std::string, Rational> fdtc;

  friend bool operator==(const FoliationData&, const FoliationData&) = default;
};

struct Violation {
  std::string constraint;
  Rational amount;  // lhs - rhs for the balance identity, offending value otherwise
};

/// Empty when fd is consistent. Balance: 2 chi + 2r = sum over interior of
/// (2 - p) plus sum over boundaries of (2 - p_i).
std::vector<Violation> validate(const FoliationData& fd);

/// Throws DomainError when p = 1 at the label (or the label is unknown).
FoliationData cap_foliation(const FoliationData& fd, const std::string& label);

struct UImageReport {
  bool in_im_U_all_d = false;
  std::string reason;
};

UImageReport u_image_report(const FoliationData& fd);

FoliationData from_json(const nlohmann::json& j);
nlohmann::json to_json(const FoliationData& fd);

}  // namespace obcalc::foliations

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "obcalc/mcg.hpp"

namespace obcalc::openbook {

struct SurfaceSig {
  std::int64_t genus = 0;
  std::vector<std::string> boundary;

  std::int64_t r() const { return static_cast<std::int64_t>(boundary.size()); }
  std::int64_t euler_characteristic() const { return 2 - 2 * genus - r(); }
  bool has_label(const std::string& label) const;

  friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

/// What happens to a curve when one particular boundary component is capped.
struct CapImage {
  enum class Kind { Unaffected, NullHomotopic, Becomes };
  Kind kind = Kind::Unaffected;
  std::string target;  // only for Becomes

  static CapImage unaffected() { return {}; }
  static CapImage null() { return {Kind::NullHomotopic, {}}; }
  static CapImage becomes(std::string id) { return {Kind::Becomes, std::move(id)}; }

  std::string str() const;
  static CapImage parse(const std::string& text);

  friend bool operator==(const CapImage&, const CapImage&) = default;
};

enum class CurveKind { Nonseparating, Generic, BoundaryParallel };

struct CurveInfo {
  std::string id;
  CurveKind kind = CurveKind::Generic;
  std::string parallel_to;  // label, only for BoundaryParallel
  std::map<std::string, CapImage> cap_images;

  std::string kind_str() const;

  friend bool operator==(const CurveInfo&, const CurveInfo&) = default;
};

/// Page signature, monodromy and declared capping behaviour of every curve.
///
/// Curve geometry is never computed: capping a boundary rewrites letters
/// only through the cap_images entries supplied here.
struct OpenBookDesc {
  SurfaceSig surface;
  mcg::TwistWord monodromy;
  std::map<std::string, CurveInfo> alphabet;

  /// Checks the descriptor invariants and fills in the implied null entry of
  /// boundary-parallel curves. Throws DomainError.
  void validate();

  friend bool operator==(const OpenBookDesc&, const OpenBookDesc&) = default;
};

OpenBookDesc cap_off(const OpenBookDesc& ob, const std::string& label, bool allow_closed = false);

using LabelPair = std::pair<std::string, std::string>;

/// Glues ob1's first label of each pair to ob2's second label.
OpenBookDesc glue(const OpenBookDesc& ob1, const OpenBookDesc& ob2, const std::vector<LabelPair>& pairs,
                  bool allow_closed = false);

/// Attaches a 1-handle with feet on the two labels and caps the result.
OpenBookDesc self_glue(const OpenBookDesc& ob, const LabelPair& pair, bool allow_closed = false);

/// Monodromy product on a common page. Curves declared in both books must
/// agree; the alphabet of the result is the union.
OpenBookDesc compose(const OpenBookDesc& ob1, const OpenBookDesc& ob2);

/// Contact (sign)-surgery on K: the monodromy picks up t_K^{-sign}.
OpenBookDesc surgery_compose(const OpenBookDesc& ob, const std::string& curve, int sign);

struct Stabilization {
  OpenBookDesc ob;
  std::string stabilized_curve;  // K'
  std::string b_plus;
  std::string b_minus;
};

/// Two positive stabilizations making room for the Legendrian stabilization
/// K' of K. Capping b_plus and b_minus (in either order) sends K' back to K
/// and undoes the two stabilization twists.
Stabilization legendrian_stabilize(const OpenBookDesc& ob, const std::string& curve, int sign);

OpenBookDesc from_json(const nlohmann::json& j);
nlohmann::json to_json(const OpenBookDesc& ob);

std::string summary(const OpenBookDesc& ob);

}  // namespace obcalc::openbook

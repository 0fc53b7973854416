#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "obcalc/domains.hpp"
#include "obcalc/foliations.hpp"
#include "obcalc/mcg.hpp"
#include "obcalc/openbook.hpp"

namespace obcalc::infer {

enum class Predicate {
  CNonzero,
  CZero,
  Tight,
  Overtwisted,
  SteinFillable,
  ConditionR,  // c+ is not in the image of U^d for some d
  InImUAllD,
  SgGe,  // arg: n
  SgEq,  // arg: n
  C1Nontorsion,
  BindingBoundOk,
  CapCobordismNotStein,  // arg: boundary label
};

std::string predicate_name(Predicate p);
Predicate parse_predicate(const std::string& name);
bool predicate_takes_arg(Predicate p);

struct FactKey {
  std::string subject;
  Predicate predicate;
  std::string arg;

  auto operator<=>(const FactKey&) const = default;
  std::string str() const;
};

struct RuleInfo {
  std::string id;
  std::string theorem;
  std::string statement;
};

/// The rule table in its canonical order.
const std::vector<RuleInfo>& rules();

struct Fact {
  std::size_t id = 0;
  FactKey key;
  bool asserted = true;
  std::size_t rule = 0;  // index into rules() when derived
  std::vector<std::size_t> premises;
  std::string note;
  std::size_t round = 0;
};

struct Subject {
  std::string id;
  openbook::OpenBookDesc ob;
  /// S_{1,1} words over {a, b} are classified automatically.
  std::optional<mcg::NormalForm3> normal_form;
  std::optional<domains::PeriodicData> periodic;  // k may contain negatives
  std::optional<foliations::FoliationData> foliation;
};

struct Relation {
  enum class Kind { Cap, Compose, Glue, SelfGlue, Surgery, Stabilize };
  Kind kind;
  std::vector<std::string> inputs;
  std::string result;
  std::string label;  // Cap
  std::string curve;  // Surgery, Stabilize
  int sign = 0;       // Surgery coefficient
  bool boundary_parallel_to_label = false;  // Surgery: curve parallel to `label`
  std::string base;   // Stabilize: surgery on the unstabilized knot
};

struct Script {
  std::map<std::string, Subject> subjects;
  std::vector<Relation> relations;
  std::vector<FactKey> facts;
};

/// Throws ParseError on schema errors and DomainError on unknown subjects or
/// failing open-book operations.
Script parse_script(const nlohmann::json& j);

struct RunOptions {
  domains::C1Channel channel = domains::C1Channel::Printed;
  Rational d3_offset{0};
  /// Order in which rules are tried each round (a permutation of rules()
  /// indices). The closure does not depend on it.
  std::optional<std::vector<std::size_t>> rule_order;
};

struct Conflict {
  std::size_t first;
  std::size_t second;
  std::string reason;
};

struct Closure {
  std::vector<Fact> facts;  // ids are positions
  std::vector<Conflict> conflicts;

  bool ok() const { return conflicts.empty(); }
  std::optional<std::size_t> find(const FactKey& key) const;
  /// Rule ids along the derivation of `id`, premises before conclusions.
  std::vector<std::string> rule_chain(std::size_t id) const;
  std::string derivation_text(std::size_t id) const;
};

/// Least fixed point of the rules over the script. Stops after the round in
/// which a contradiction first appears.
Closure run(const Script& script, const RunOptions& options = {});

std::string closure_text(const Closure& c);
nlohmann::json closure_json(const Closure& c);

}  // namespace obcalc::infer

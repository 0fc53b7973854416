#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "obcalc/error.hpp"
#include "obcalc/infer.hpp"
#include "../support.hpp"

using namespace obcalc;
using namespace obcalc::infer;

namespace {

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(OBCALC_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::size_t fact(const Closure& c, const std::string& subject, Predicate p, const std::string& arg = "") {
  const auto id = c.find({subject, p, arg});
  REQUIRE(id.has_value());
  return *id;
}

bool in_order(const std::vector<std::string>& chain, const std::vector<std::string>& wanted) {
  auto it = chain.begin();
  for (const auto& w : wanted) {
    it = std::find(it, chain.end(), w);
    if (it == chain.end()) return false;
    ++it;
  }
  return true;
}

}  // namespace

TEST_CASE("rule table") {
  const auto& table = rules();
  CHECK(table.size() == 22);
  std::set<std::string> ids;
  for (const auto& r : table) {
    CHECK(ids.insert(r.id).second);
    CHECK_FALSE(r.theorem.empty());
    CHECK_FALSE(r.statement.empty());
  }
  for (const char* id : {"R-cap", "R-capR", "R-comult", "R-twist", "R-stab", "R-glue", "R-planar", "R-nontor",
                         "R-OT-sg", "R-periodic", "R-bound", "R-pa", "R-dtwist"})
    CHECK(ids.count(id));
}

TEST_CASE("predicates") {
  CHECK(parse_predicate("condition_R") == Predicate::ConditionR);
  CHECK(predicate_name(Predicate::InImUAllD) == "in_im_U_all_d");
  CHECK(predicate_takes_arg(Predicate::SgGe));
  CHECK_FALSE(predicate_takes_arg(Predicate::Tight));
  CHECK_THROWS_AS(parse_predicate("happy"), ParseError);
  CHECK(FactKey{"X", Predicate::SgGe, "1"}.str() == "sg_ge(X, 1)");
}

TEST_CASE("capping pipeline derives positive support genus for the capped book") {
  const auto script = parse_script(load("capping_pipeline.json"));
  CHECK(script.subjects.at("Y").ob.monodromy.str() == "a b a b a b a b a b^3");
  const auto c = run(script);
  REQUIRE(c.ok());
  const auto sg = fact(c, "Y", Predicate::SgGe, "1");
  CHECK(in_order(c.rule_chain(sg), {"R-nontor", "R-capR", "R-planar"}));
  CHECK(c.facts[sg].premises.size() == 1);
  CHECK(c.derivation_text(sg).find("asserted") != std::string::npos);
  // The capped book has torsion c1, so R-nontor alone never fires on it.
  CHECK_FALSE(c.find({"Y", Predicate::C1Nontorsion, ""}).has_value());
  CHECK(c.facts[fact(c, "Y", Predicate::ConditionR)].rule == 2);
}

TEST_CASE("closure is independent of rule order") {
  for (const char* name : {"capping_pipeline.json", "family_chain.json", "conflict.json"}) {
    const auto script = parse_script(load(name));
    const auto reference = closure_json(run(script));
    testing::Rng rng(71);
    std::vector<std::size_t> order(rules().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (int i = 0; i < 100; ++i) {
      std::shuffle(order.begin(), order.end(), rng);
      RunOptions opt;
      opt.rule_order = order;
      CHECK(closure_json(run(script, opt)) == reference);
    }
  }
}

TEST_CASE("rule order must be a permutation") {
  const auto script = parse_script(load("conflict.json"));
  RunOptions opt;
  opt.rule_order = std::vector<std::size_t>{0, 1, 2};
  CHECK_THROWS_AS(run(script, opt), std::invalid_argument);
}

TEST_CASE("family chain") {
  const auto c = run(parse_script(load("family_chain.json")));
  REQUIRE(c.ok());
  CHECK(rules()[c.facts[fact(c, "F10", Predicate::ConditionR)].rule].id == "R-murasugi-zero");
  CHECK(rules()[c.facts[fact(c, "F11", Predicate::ConditionR)].rule].id == "R-murasugi-minus");
  CHECK(rules()[c.facts[fact(c, "F11d4", Predicate::ConditionR)].rule].id == "R-dtwist");
  fact(c, "F11d4", Predicate::SgEq, "1");
  fact(c, "G", Predicate::Overtwisted);
  fact(c, "G", Predicate::SgEq, "0");
  CHECK_FALSE(c.find({"G", Predicate::ConditionR, ""}).has_value());
}

TEST_CASE("contradictions halt with both derivations") {
  const auto c = run(parse_script(load("conflict.json")));
  REQUIRE_FALSE(c.ok());
  const auto& first = c.conflicts.front();
  CHECK(first.reason == "tight and overtwisted on P");
  CHECK(c.facts[first.first].asserted);
  CHECK(rules()[c.facts[first.second].rule].id == "R-periodic");
  const auto j = closure_json(c);
  CHECK(j.at("status") == "conflict");
  CHECK(closure_text(c).find("CONFLICT") != std::string::npos);
}

TEST_CASE("periodic annotations feed the binding bound") {
  const auto script = parse_script(nlohmann::json::parse(R"({
    "subjects": {"T": {"genus": 1, "boundary": ["B1", "B2"], "monodromy": ""}},
    "annotations": {"T": {"periodic": {"m": 6, "k": [1, 0]}}}
  })"));
  CHECK(script.subjects.at("T").periodic->k == std::vector<std::int64_t>{0, 1});
  const auto c = run(script);
  REQUIRE(c.ok());
  CHECK(c.facts[fact(c, "T", Predicate::BindingBoundOk)].note == "margin 5 (printed)");

  const auto tight_only = parse_script(nlohmann::json::parse(R"({
    "subjects": {"T": {"genus": 1, "boundary": ["B1", "B2"]}},
    "annotations": {"T": {"periodic": {"m": 6, "k": [1, 2]}}}
  })"));
  CHECK_FALSE(run(tight_only).find({"T", Predicate::BindingBoundOk, ""}).has_value());
  RunOptions fp;
  fp.channel = domains::C1Channel::FirstPrinciples;
  CHECK(run(tight_only, fp).find({"T", Predicate::BindingBoundOk, ""}).has_value());
}

TEST_CASE("foliation annotations and Condition R conflict") {
  const auto script = parse_script(nlohmann::json::parse(R"({
    "subjects": {"Z": {"genus": 1, "boundary": ["B1", "B2"], "monodromy": ""}},
    "annotations": {"Z": {"foliation": {"genus": 1, "boundary": ["B1", "B2"],
                                        "boundary_sings": {"B1": 2, "B2": 2}, "fdtc": {"B1": "1/2"}}}},
    "facts": [{"subject": "Z", "predicate": "condition_R"}]
  })"));
  const auto c = run(script);
  REQUIRE_FALSE(c.ok());
  CHECK(c.conflicts.front().reason.find("condition_R") != std::string::npos);
}

TEST_CASE("relations: compose, glue, surgery, stabilize") {
  const auto script = parse_script(nlohmann::json::parse(R"({
    "subjects": {
      "A": {"genus": 0, "boundary": ["P", "Q"], "monodromy": "x",
            "alphabet": [{"id": "x", "kind": "boundary-parallel:P", "cap_images": {"Q": "unaffected"}},
                         {"id": "k", "kind": "generic", "cap_images": {"P": "unaffected", "Q": "unaffected"}}]},
      "B": {"genus": 0, "boundary": ["R", "S"], "monodromy": "y^-1",
            "alphabet": [{"id": "y", "kind": "boundary-parallel:R"}]}
    },
    "operations": [
      {"op": "compose", "left": "A", "right": "A", "result": "AA"},
      {"op": "glue", "left": "A", "right": "B", "pairs": [["Q", "S"]], "result": "AB"},
      {"op": "surgery", "subject": "A", "curve": "x", "sign": 1, "result": "Ax"},
      {"op": "stabilize", "subject": "A", "curve": "k", "sign": "+", "surgery": -1, "base": "Ak", "result": "Ak+"}
    ],
    "facts": [{"subject": "Ax", "predicate": "c_nonzero"}, {"subject": "B", "predicate": "c_nonzero"}]
  })"));
  const auto c = run(script);
  REQUIRE(c.ok());
  CHECK(rules()[c.facts[fact(c, "AA", Predicate::CNonzero)].rule].id == "R-comult");
  CHECK(rules()[c.facts[fact(c, "AB", Predicate::CNonzero)].rule].id == "R-glue");
  CHECK(rules()[c.facts[fact(c, "A", Predicate::CapCobordismNotStein, "P")].rule].id == "R-stein-obstruction");
  fact(c, "Ak+", Predicate::CNonzero);
  fact(c, "Ak", Predicate::CNonzero);
}

TEST_CASE("script errors") {
  CHECK_THROWS_AS(parse_script(nlohmann::json::parse("[]")), ParseError);
  CHECK_THROWS_AS(parse_script(nlohmann::json::parse(R"({"facts": [{"subject": "Q", "predicate": "tight"}]})")),
                  DomainError);
  CHECK_THROWS_AS(parse_script(nlohmann::json::parse(R"({"subjects": {"Q": {"genus": 0, "boundary": ["P"]}},
      "facts": [{"subject": "Q", "predicate": "sg_ge"}]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_script(nlohmann::json::parse(R"({"operations": [{"op": "melt", "result": "Z"}]})")),
                  ParseError);
}

#include "doctest.h"

#include "obcalc/error.hpp"
#include "obcalc/openbook.hpp"
#include "../support.hpp"

using namespace obcalc;
using namespace obcalc::openbook;

namespace {

OpenBookDesc torus_two_holes() {
  return from_json(nlohmann::json::parse(R"({
    "genus": 1, "boundary": ["B1", "B2"], "monodromy": "a b c^2",
    "alphabet": [
      {"id": "a", "kind": "nonseparating", "cap_images": {"B1": "unaffected", "B2": "unaffected"}},
      {"id": "b", "kind": "nonseparating", "cap_images": {"B1": "unaffected", "B2": "unaffected"}},
      {"id": "c", "kind": "boundary-parallel:B2", "cap_images": {"B1": "unaffected"}}
    ]})"));
}

}  // namespace

TEST_CASE("descriptor JSON round trip and implied cap data") {
  const auto ob = torus_two_holes();
  CHECK(ob.alphabet.at("c").cap_images.at("B2") == CapImage::null());
  CHECK(from_json(to_json(ob)) == ob);
  CHECK(summary(ob) == "S_{1,2} boundary [B1, B2] monodromy a b c^2");
  CHECK(CapImage::parse("becomes:x") == CapImage::becomes("x"));
  CHECK(CapImage::becomes("x").str() == "becomes:x");
  CHECK_THROWS_AS(CapImage::parse("gone"), ParseError);
  CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"genus": 0})")), ParseError);
  CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"genus": 0, "boundary": ["X", "X"]})")), DomainError);
  CHECK_THROWS_AS(from_json(nlohmann::json::parse(
                      R"({"genus": 0, "boundary": ["X"], "monodromy": "a", "alphabet": []})")),
                  DomainError);
}

TEST_CASE("capping") {
  const auto ob = torus_two_holes();
  const auto capped = cap_off(ob, "B2");
  CHECK(capped.surface.r() == 1);
  CHECK(capped.monodromy.str() == "a b");
  CHECK_FALSE(capped.alphabet.count("c"));
  CHECK_THROWS_AS(cap_off(capped, "B1"), DomainError);
  CHECK(cap_off(capped, "B1", true).surface.r() == 0);
  CHECK_THROWS_AS(cap_off(ob, "B9"), DomainError);

  auto missing = ob;
  missing.alphabet.at("a").cap_images.erase("B1");
  CHECK_THROWS_WITH_AS(cap_off(missing, "B1"), doctest::Contains("insufficient curve metadata"), DomainError);
}

TEST_CASE("gluing signatures") {
  const auto ob = torus_two_holes();
  auto other = from_json(nlohmann::json::parse(R"({"genus": 0, "boundary": ["P", "Q", "R"], "monodromy": "x"})"));
  const auto g = glue(ob, other, {{"B1", "P"}});
  CHECK(g.surface.genus == 1);
  CHECK(g.surface.boundary == std::vector<std::string>{"B2", "Q", "R"});
  CHECK(g.monodromy.str() == "a b c^2 x");
  CHECK_THROWS_AS(glue(ob, ob, {{"B1", "B1"}}), DomainError);
  CHECK_THROWS_AS(glue(ob, other, {}), DomainError);
  const auto s = self_glue(other, {"P", "Q"});
  CHECK(s.surface.genus == 1);
  CHECK(s.surface.boundary == std::vector<std::string>{"R"});
  CHECK_THROWS_AS(self_glue(ob, {"B1", "B2"}), DomainError);
  CHECK(self_glue(ob, {"B1", "B2"}, true).surface.r() == 0);
  // Curves parallel to a glued boundary are no longer boundary-parallel.
  const auto g2 = glue(ob, other, {{"B2", "P"}});
  CHECK(g2.alphabet.at("c").kind == CurveKind::Generic);
}

TEST_CASE("euler characteristic is additive under gluing") {
  testing::Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    const auto x = testing::random_book(rng, "X");
    const auto y = testing::random_book(rng, "Y");
    const auto n = testing::uniform(rng, 1, std::min(x.surface.r(), y.surface.r()));
    std::vector<LabelPair> pairs;
    for (std::int64_t j = 0; j < n; ++j)
      pairs.push_back({x.surface.boundary[static_cast<std::size_t>(j)], y.surface.boundary[static_cast<std::size_t>(j)]});
    const auto g = glue(x, y, pairs, true);
    CHECK(g.surface.euler_characteristic() == x.surface.euler_characteristic() + y.surface.euler_characteristic());
    CHECK(g.surface.genus == x.surface.genus + y.surface.genus + n - 1);

    // Multi-pair glue is one glue followed by self-glues.
    auto step = glue(x, y, {pairs.front()}, true);
    for (std::size_t j = 1; j < pairs.size(); ++j) step = self_glue(step, pairs[j], true);
    CHECK(step == g);

    if (x.surface.r() >= 2) {
      const auto s = self_glue(x, {x.surface.boundary[0], x.surface.boundary[1]}, true);
      CHECK(s.surface.euler_characteristic() == x.surface.euler_characteristic());
    }
  }
}

TEST_CASE("capping distinct boundaries commutes") {
  testing::Rng rng(52);
  for (int i = 0; i < 500; ++i) {
    const auto ob = testing::random_book(rng, "Z", 2);
    const auto& b = ob.surface.boundary;
    const auto i1 = static_cast<std::size_t>(testing::uniform(rng, 0, ob.surface.r() - 1));
    auto i2 = static_cast<std::size_t>(testing::uniform(rng, 0, ob.surface.r() - 2));
    if (i2 >= i1) ++i2;
    const auto one = cap_off(cap_off(ob, b[i1], true), b[i2], true);
    const auto two = cap_off(cap_off(ob, b[i2], true), b[i1], true);
    CHECK(one == two);
    CHECK(one.surface.euler_characteristic() == ob.surface.euler_characteristic() + 2);
  }
}

TEST_CASE("compose and surgery") {
  const auto ob = torus_two_holes();
  const auto twice = compose(ob, ob);
  CHECK(twice.monodromy.str() == "a b c^2 a b c^2");
  auto clash = ob;
  clash.alphabet.at("a").kind = CurveKind::Generic;
  CHECK_THROWS_AS(compose(ob, clash), DomainError);
  CHECK(surgery_compose(ob, "a", 1).monodromy.str() == "a b c^2 a^-1");
  CHECK(surgery_compose(ob, "a", -1).monodromy.str() == "a b c^2 a");
  CHECK_THROWS_AS(surgery_compose(ob, "a", 2), DomainError);
  CHECK_THROWS_AS(surgery_compose(ob, "q", 1), DomainError);
}

TEST_CASE("stabilize then cap twice recovers the surgery on K") {
  testing::Rng rng(53);
  for (int i = 0; i < 300; ++i) {
    const auto ob = testing::random_book(rng, "W");
    const auto k = std::next(ob.alphabet.begin(), testing::uniform(rng, 0, static_cast<std::int64_t>(ob.alphabet.size()) - 1))->first;
    const int leg = testing::uniform(rng, 0, 1) ? 1 : -1;
    const int surgery = testing::uniform(rng, 0, 1) ? 1 : -1;
    const auto st = legendrian_stabilize(ob, k, leg);
    CHECK(st.ob.surface.r() == ob.surface.r() + 2);
    const auto stab = surgery_compose(st.ob, st.stabilized_curve, surgery);
    const auto base = surgery_compose(ob, k, surgery);
    CHECK(cap_off(cap_off(stab, st.b_plus), st.b_minus) == base);
    CHECK(cap_off(cap_off(stab, st.b_minus), st.b_plus) == base);
  }
}

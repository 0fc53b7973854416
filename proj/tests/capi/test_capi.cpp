#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>

#include "json.hpp"

#include "obcalc/obcalc.h"

namespace {

std::string text_of(obc_report* r) {
  std::string s = obc_report_text(r);
  obc_report_free(r);
  return s;
}

}  // namespace

TEST_CASE("classify through the C interface") {
  obc_report* r = nullptr;
  REQUIRE(obc_classify("a b", &r) == OBC_OK);
  const auto j = nlohmann::json::parse(obc_report_json(r));
  CHECK(j.at("fdtc") == "1/6");
  CHECK(text_of(r) == "periodic, FDTC 1/6\n");

  r = nullptr;
  CHECK(obc_classify("a^x", &r) == OBC_USAGE_ERROR);
  CHECK(r == nullptr);
  CHECK(std::string(obc_last_error()).size() > 0);
  CHECK(obc_classify("a c", &r) == OBC_DOMAIN_ERROR);
  CHECK(obc_classify(nullptr, &r) == OBC_USAGE_ERROR);
}

TEST_CASE("d3 through the C interface") {
  const std::int64_t k[] = {1, 0};
  obc_report* r = nullptr;
  REQUIRE(obc_d3(1, 6, k, 2, OBC_CHANNEL_PRINTED, nullptr, &r) == OBC_OK);
  const auto j = nlohmann::json::parse(obc_report_json(r));
  obc_report_free(r);
  CHECK(j.at("d3") == "1/2");
  CHECK(j.at("k_sorted") == nlohmann::json::array({0, 1}));
  CHECK(j.at("permutation") == nlohmann::json::array({2, 1}));

  const std::int64_t k2[] = {1, 2};
  REQUIRE(obc_d3(1, 6, k2, 2, OBC_CHANNEL_FIRST_PRINCIPLES, "-1/2", &r) == OBC_OK);
  const auto j2 = nlohmann::json::parse(obc_report_json(r));
  obc_report_free(r);
  CHECK(j2.at("d3") == "-9/8");
  CHECK(j2.at("offset") == "-1/2");

  CHECK(obc_d3(1, 6, k2, 2, OBC_CHANNEL_PRINTED, "1/3", &r) == OBC_USAGE_ERROR);
  CHECK(obc_d3(2, 6, k2, 2, OBC_CHANNEL_PRINTED, nullptr, &r) == OBC_DOMAIN_ERROR);
}

TEST_CASE("determinants and support genus") {
  obc_report* r = nullptr;
  REQUIRE(obc_det("s2 s1^-1", 1, &r) == OBC_OK);
  CHECK(nlohmann::json::parse(obc_report_json(r)).at("determinant") == 1);
  obc_report_free(r);

  const std::int64_t n[] = {1, 2};
  REQUIRE(obc_support_genus(n, 2, 2, &r) == OBC_OK);
  const auto j = nlohmann::json::parse(obc_report_json(r));
  obc_report_free(r);
  CHECK(j.at("support_genus") == "one");
  CHECK(j.at("chain").front().at("rule") == "base");
}

TEST_CASE("open book handles") {
  const char* torus = R"({"genus": 1, "boundary": ["B1", "B2"], "monodromy": "a c",
    "alphabet": [{"id": "a", "cap_images": {"B1": "unaffected", "B2": "unaffected"}},
                 {"id": "c", "kind": "boundary-parallel:B2", "cap_images": {"B1": "unaffected"}}]})";
  const char* pants = R"({"genus": 0, "boundary": ["P", "Q", "R"], "monodromy": ""})";
  obc_openbook *t = nullptr, *p = nullptr, *out = nullptr;
  REQUIRE(obc_openbook_from_json(torus, &t) == OBC_OK);
  REQUIRE(obc_openbook_from_json(pants, &p) == OBC_OK);

  REQUIRE(obc_openbook_cap(t, "B2", 0, &out) == OBC_OK);
  obc_report* r = nullptr;
  REQUIRE(obc_openbook_report(out, &r) == OBC_OK);
  CHECK(nlohmann::json::parse(obc_report_json(r)).at("monodromy") == "a");
  obc_report_free(r);
  obc_openbook_free(out);

  const char* left[] = {"B1"};
  const char* right[] = {"P"};
  REQUIRE(obc_openbook_glue(t, p, left, right, 1, 0, &out) == OBC_OK);
  REQUIRE(obc_openbook_report(out, &r) == OBC_OK);
  CHECK(nlohmann::json::parse(obc_report_json(r)).at("genus") == 1);
  obc_report_free(r);
  obc_openbook_free(out);

  REQUIRE(obc_openbook_self_glue(p, "P", "Q", 0, &out) == OBC_OK);
  obc_openbook_free(out);
  CHECK(obc_openbook_self_glue(t, "B1", "B2", 0, &out) == OBC_DOMAIN_ERROR);
  CHECK(obc_openbook_from_json("{", &out) == OBC_USAGE_ERROR);
  CHECK(obc_openbook_cap(t, "nope", 0, &out) == OBC_DOMAIN_ERROR);

  obc_openbook_free(t);
  obc_openbook_free(p);
}

TEST_CASE("infer and validate-pa report on failure too") {
  obc_report* r = nullptr;
  const char* script = R"({"subjects": {"P": {"genus": 1, "boundary": ["B"], "monodromy": "a b"}},
                           "facts": [{"subject": "P", "predicate": "overtwisted"}]})";
  CHECK(obc_infer(script, OBC_CHANNEL_PRINTED, &r) == OBC_DOMAIN_ERROR);
  REQUIRE(r != nullptr);
  CHECK(nlohmann::json::parse(obc_report_json(r)).at("status") == "conflict");
  obc_report_free(r);

  r = nullptr;
  const char* bad = R"({"genus": 1, "boundary": ["B1"], "interior_prongs": [3], "boundary_sings": {"B1": 2}})";
  CHECK(obc_validate_pa(bad, &r) == OBC_DOMAIN_ERROR);
  REQUIRE(r != nullptr);
  CHECK(nlohmann::json::parse(obc_report_json(r)).at("valid") == false);
  obc_report_free(r);
}

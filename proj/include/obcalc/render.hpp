#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "obcalc/domains.hpp"
#include "obcalc/foliations.hpp"
#include "obcalc/openbook.hpp"

namespace obcalc::render {

/// Text and JSON forms of one result. Rationals in JSON are always "p/q".
struct Rendered {
  std::string text;
  nlohmann::json json;
  bool ok = true;  // false when the result itself is a failed check
};

Rendered classify(const std::string& word);
Rendered d3(std::int64_t genus, std::int64_t m, const std::vector<std::int64_t>& k, domains::C1Channel channel,
            const Rational& offset);
Rendered det(const std::string& braid, bool with_oracle);
Rendered support_genus(const std::vector<std::int64_t>& n, std::int64_t d);
Rendered openbook(const openbook::OpenBookDesc& ob);
Rendered validate_pa(const foliations::FoliationData& fd);

}  // namespace obcalc::render

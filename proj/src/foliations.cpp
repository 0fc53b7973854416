#include "obcalc/foliations.hpp"

#include "obcalc/error.hpp"

#include <set>

namespace obcalc::foliations {

std::vector<Violation> validate(const FoliationData& fd) {
  std::vector<Violation> out;
  const auto& s = fd.surface;
  if (s.genus < 0) out.push_back({"genus >= 0", Rational(s.genus)});
  std::set<std::string> labels(s.boundary.begin(), s.boundary.end());
  if (labels.size() != s.boundary.size())
    out.push_back({"distinct boundary labels", Rational(static_cast<std::int64_t>(s.boundary.size() - labels.size()))});
  for (auto p : fd.interior_prongs)
    if (p < 3) out.push_back({"interior prong count >= 3", Rational(p)});
  for (const auto& b : s.boundary) {
    auto it = fd.boundary_sings.find(b);
    if (it == fd.boundary_sings.end()) out.push_back({"singularity count for boundary " + b, Rational(0)});
    else if (it->second < 1) out.push_back({"boundary singularity count >= 1 on " + b, Rational(it->second)});
  }
  for (const auto& [label, p] : fd.boundary_sings)
    if (!labels.count(label)) out.push_back({"singularity count for unknown boundary " + label, Rational(p)});
  for (const auto& [label, c] : fd.fdtc)
    if (!labels.count(label)) out.push_back({"fdtc for unknown boundary " + label, c});

  std::int64_t rhs = 0;
  for (auto p : fd.interior_prongs) rhs += 2 - p;
  for (const auto& [label, p] : fd.boundary_sings) rhs += 2 - p;
  const std::int64_t lhs = 2 * s.euler_characteristic() + 2 * s.r();
  if (lhs != rhs) out.push_back({"balance 2chi + 2r = sum(2 - p)", Rational(lhs - rhs)});
  return out;
}

FoliationData cap_foliation(const FoliationData& fd, const std::string& label) {
  auto it = fd.boundary_sings.find(label);
  if (!fd.surface.has_label(label) || it == fd.boundary_sings.end())
    throw DomainError("unknown boundary label '" + label + "'");
  const std::int64_t p = it->second;
  if (p <= 1) throw DomainError("not cappable as pseudo-Anosov: boundary '" + label + "' has " + std::to_string(p) +
                                " singularity");
  FoliationData out = fd;
  std::erase(out.surface.boundary, label);
  out.boundary_sings.erase(label);
  out.fdtc.erase(label);
  if (p >= 3) out.interior_prongs.push_back(p);
  return out;
}

UImageReport u_image_report(const FoliationData& fd) {
  if (fd.surface.genus != 1) return {false, "hypothesis violated: page genus is not one"};
  if (fd.surface.r() == 0) return {false, "hypothesis violated: page has no boundary"};
  for (const auto& b : fd.surface.boundary) {
    auto it = fd.boundary_sings.find(b);
    if (it == fd.boundary_sings.end() || it->second != 2)
      return {false, "hypothesis violated: boundary " + b + " does not carry exactly two singularities"};
  }
  if (!validate(fd).empty()) return {false, "invalid foliation data"};
  for (const auto& b : fd.surface.boundary) {
    auto it = fd.fdtc.find(b);
    if (it != fd.fdtc.end() && it->second < 1)
      return {true, "fdtc " + to_text(it->second) + " < 1 at boundary " + b};
  }
  return {false, "every supplied fdtc is at least 1"};
}

FoliationData from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("foliation descriptor must be a JSON object");
  FoliationData fd;
  try {
    fd.surface.genus = j.at("genus").get<std::int64_t>();
    fd.surface.boundary = j.at("boundary").get<std::vector<std::string>>();
    if (j.contains("interior_prongs")) fd.interior_prongs = j.at("interior_prongs").get<std::vector<std::int64_t>>();
    fd.boundary_sings = j.at("boundary_sings").get<std::map<std::string, std::int64_t>>();
    if (j.contains("fdtc"))
      for (const auto& [label, v] : j.at("fdtc").items()) fd.fdtc.emplace(label, parse_rational(v.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad foliation descriptor: ") + e.what());
  }
  return fd;
}

nlohmann::json to_json(const FoliationData& fd) {
  nlohmann::json fdtc = nlohmann::json::object();
  for (const auto& [label, c] : fd.fdtc) fdtc[label] = to_pq(c);
  return {{"genus", fd.surface.genus},
          {"boundary", fd.surface.boundary},
          {"interior_prongs", fd.interior_prongs},
          {"boundary_sings", fd.boundary_sings},
          {"fdtc", fdtc}};
}

}  // namespace obcalc::foliations

#include "obcalc/openbook.hpp"

#include "obcalc/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace obcalc::openbook {

bool SurfaceSig::has_label(const std::string& label) const {
  return std::find(boundary.begin(), boundary.end(), label) != boundary.end();
}

std::string CapImage::str() const {
  switch (kind) {
    case Kind::Unaffected: return "unaffected";
    case Kind::NullHomotopic: return "null-homotopic";
    case Kind::Becomes: return "becomes:" + target;
  }
  return {};
}

CapImage CapImage::parse(const std::string& text) {
  if (text == "unaffected") return unaffected();
  if (text == "null-homotopic" || text == "null") return null();
  if (text.rfind("becomes:", 0) == 0 && text.size() > 8) return becomes(text.substr(8));
  throw ParseError("bad cap image '" + text + "'");
}

std::string CurveInfo::kind_str() const {
  switch (kind) {
    case CurveKind::Nonseparating: return "nonseparating";
    case CurveKind::Generic: return "generic";
    case CurveKind::BoundaryParallel: return "boundary-parallel:" + parallel_to;
  }
  return {};
}

void OpenBookDesc::validate() {
  if (surface.genus < 0) throw DomainError("negative genus");
  std::set<std::string> seen;
  for (const auto& b : surface.boundary) {
    if (b.empty()) throw DomainError("empty boundary label");
    if (!seen.insert(b).second) throw DomainError("duplicate boundary label '" + b + "'");
  }
  for (auto& [id, c] : alphabet) {
    if (id != c.id) throw std::logic_error("alphabet key does not match curve id");
    if (c.kind == CurveKind::BoundaryParallel) {
      if (!surface.has_label(c.parallel_to))
        throw DomainError("curve '" + id + "' is parallel to unknown boundary '" + c.parallel_to + "'");
      auto [it, inserted] = c.cap_images.try_emplace(c.parallel_to, CapImage::null());
      if (!inserted && it->second.kind != CapImage::Kind::NullHomotopic)
        throw DomainError("boundary-parallel curve '" + id + "' must die when '" + c.parallel_to +
                          "' is capped");
    }
    for (const auto& [label, img] : c.cap_images)
      if (!surface.has_label(label))
        throw DomainError("curve '" + id + "' has cap data for unknown boundary '" + label + "'");
  }
  for (const auto& l : monodromy.letters())
    if (!alphabet.count(l.curve))
      throw DomainError("monodromy letter '" + l.curve + "' is not in the alphabet");
}

namespace {

OpenBookDesc checked(OpenBookDesc ob) {
  ob.validate();
  return ob;
}

void require_label(const OpenBookDesc& ob, const std::string& label) {
  if (!ob.surface.has_label(label)) throw DomainError("unknown boundary label '" + label + "'");
}

void erase_label(std::vector<std::string>& boundary, const std::string& label) {
  boundary.erase(std::remove(boundary.begin(), boundary.end(), label), boundary.end());
}

// Removes every trace of a boundary label that no longer exists on the page,
// without capping it.
void forget_label(OpenBookDesc& ob, const std::string& label) {
  erase_label(ob.surface.boundary, label);
  for (auto& [id, c] : ob.alphabet) {
    c.cap_images.erase(label);
    if (c.kind == CurveKind::BoundaryParallel && c.parallel_to == label) {
      c.kind = CurveKind::Generic;
      c.parallel_to.clear();
    }
  }
}

std::string fresh(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string s = base + "_" + std::to_string(i);
    if (!taken.count(s)) return s;
  }
}

}  // namespace

OpenBookDesc cap_off(const OpenBookDesc& ob, const std::string& label, bool allow_closed) {
  require_label(ob, label);
  if (ob.surface.r() == 1 && !allow_closed)
    throw DomainError("capping '" + label + "' would close the page; closed output not permitted");

  std::set<std::string> used;
  for (const auto& l : ob.monodromy.letters()) used.insert(l.curve);

  std::map<std::string, CapImage> image;
  for (const auto& [id, c] : ob.alphabet) {
    auto it = c.cap_images.find(label);
    if (it != c.cap_images.end()) image.emplace(id, it->second);
    else if (used.count(id))
      throw DomainError("insufficient curve metadata: curve '" + id + "' has no cap behaviour for '" +
                        label + "'");
  }

  OpenBookDesc out;
  out.surface = ob.surface;
  erase_label(out.surface.boundary, label);
  for (const auto& [id, c] : ob.alphabet) {
    auto it = image.find(id);
    if (it != image.end() && it->second.kind != CapImage::Kind::Unaffected) continue;
    CurveInfo kept = c;
    kept.cap_images.erase(label);
    out.alphabet.emplace(id, std::move(kept));
  }

  std::vector<mcg::Letter> letters;
  for (const auto& l : ob.monodromy.letters()) {
    const CapImage& img = image.at(l.curve);
    if (img.kind == CapImage::Kind::NullHomotopic) continue;
    if (img.kind == CapImage::Kind::Becomes) {
      if (!out.alphabet.count(img.target))
        throw DomainError("curve '" + l.curve + "' becomes '" + img.target +
                          "', which is not a curve of the capped page");
      letters.push_back({img.target, l.exponent});
    } else {
      letters.push_back(l);
    }
  }
  out.monodromy = mcg::TwistWord(std::move(letters));
  return checked(std::move(out));
}

OpenBookDesc glue(const OpenBookDesc& ob1, const OpenBookDesc& ob2, const std::vector<LabelPair>& pairs,
                  bool allow_closed) {
  if (pairs.empty()) throw DomainError("glue needs at least one boundary pair");
  for (const auto& b : ob1.surface.boundary)
    if (ob2.surface.has_label(b)) throw DomainError("boundary label '" + b + "' occurs in both books");
  for (const auto& [id, c] : ob1.alphabet)
    if (ob2.alphabet.count(id)) throw DomainError("curve id '" + id + "' occurs in both books");

  std::set<std::string> left, right;
  for (const auto& [l, r] : pairs) {
    require_label(ob1, l);
    require_label(ob2, r);
    if (!left.insert(l).second || !right.insert(r).second)
      throw DomainError("boundary label reused in glue pairs");
  }
  const auto n = static_cast<std::int64_t>(pairs.size());
  const std::int64_t r_out = ob1.surface.r() + ob2.surface.r() - 2 * n;
  if (r_out < 1 && !allow_closed)
    throw DomainError("neither book has more than " + std::to_string(n) +
                      " boundary components; closed output not permitted");

  OpenBookDesc out;
  out.surface.genus = ob1.surface.genus + ob2.surface.genus + n - 1;
  out.surface.boundary = ob1.surface.boundary;
  out.surface.boundary.insert(out.surface.boundary.end(), ob2.surface.boundary.begin(),
                              ob2.surface.boundary.end());
  out.alphabet = ob1.alphabet;
  out.alphabet.insert(ob2.alphabet.begin(), ob2.alphabet.end());
  out.monodromy = mcg::compose(ob1.monodromy, ob2.monodromy);
  for (const auto& [l, r] : pairs) {
    forget_label(out, l);
    forget_label(out, r);
  }
  return checked(std::move(out));
}

OpenBookDesc self_glue(const OpenBookDesc& ob, const LabelPair& pair, bool allow_closed) {
  require_label(ob, pair.first);
  require_label(ob, pair.second);
  if (pair.first == pair.second) throw DomainError("self-glue needs two distinct boundary labels");
  const std::int64_t need = allow_closed ? 2 : 3;
  if (ob.surface.r() < need)
    throw DomainError("self-glue needs at least " + std::to_string(need) + " boundary components");
  OpenBookDesc out = ob;
  out.surface.genus += 1;
  forget_label(out, pair.first);
  forget_label(out, pair.second);
  return checked(std::move(out));
}

OpenBookDesc compose(const OpenBookDesc& ob1, const OpenBookDesc& ob2) {
  if (!(ob1.surface == ob2.surface)) throw DomainError("compose needs the same page");
  OpenBookDesc out = ob1;
  for (const auto& [id, c] : ob2.alphabet) {
    auto [it, inserted] = out.alphabet.emplace(id, c);
    if (!inserted && !(it->second == c))
      throw DomainError("curve '" + id + "' is declared differently in the two books");
  }
  out.monodromy = mcg::compose(ob1.monodromy, ob2.monodromy);
  return checked(std::move(out));
}

OpenBookDesc surgery_compose(const OpenBookDesc& ob, const std::string& curve, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("surgery coefficient must be +1 or -1");
  if (!ob.alphabet.count(curve)) throw DomainError("unknown curve '" + curve + "'");
  OpenBookDesc out = ob;
  out.monodromy = mcg::compose(ob.monodromy, mcg::TwistWord({{curve, -sign}}));
  return out;
}

Stabilization legendrian_stabilize(const OpenBookDesc& ob, const std::string& curve, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be + or -");
  if (!ob.alphabet.count(curve)) throw DomainError("unknown curve '" + curve + "'");

  std::set<std::string> labels(ob.surface.boundary.begin(), ob.surface.boundary.end());
  std::set<std::string> ids;
  for (const auto& [id, c] : ob.alphabet) ids.insert(id);

  Stabilization st;
  st.b_plus = fresh("B+", labels);
  labels.insert(st.b_plus);
  st.b_minus = fresh("B-", labels);

  auto take = [&ids](const std::string& base) {
    std::string s = fresh(base, ids);
    ids.insert(s);
    return s;
  };
  const std::string s_plus = take("s_" + st.b_plus);
  const std::string s_minus = take("s_" + st.b_minus);
  st.stabilized_curve = take(std::string(sign > 0 ? "S+(" : "S-(") + curve + ")");
  const std::string after_plus = take(st.stabilized_curve + "~" + st.b_plus);
  const std::string after_minus = take(st.stabilized_curve + "~" + st.b_minus);

  OpenBookDesc& out = st.ob;
  out = ob;
  out.surface.boundary.push_back(st.b_plus);
  out.surface.boundary.push_back(st.b_minus);
  for (auto& [id, c] : out.alphabet) {
    c.cap_images[st.b_plus] = CapImage::unaffected();
    c.cap_images[st.b_minus] = CapImage::unaffected();
  }

  auto add = [&out](CurveInfo c) { out.alphabet.emplace(c.id, std::move(c)); };
  add({s_plus, CurveKind::BoundaryParallel, st.b_plus,
       {{st.b_plus, CapImage::null()}, {st.b_minus, CapImage::unaffected()}}});
  add({s_minus, CurveKind::BoundaryParallel, st.b_minus,
       {{st.b_minus, CapImage::null()}, {st.b_plus, CapImage::unaffected()}}});
  add({st.stabilized_curve, CurveKind::Generic, {},
       {{st.b_plus, CapImage::becomes(after_plus)}, {st.b_minus, CapImage::becomes(after_minus)}}});
  // K' with one of the two new boundaries capped; capping the other one
  // finishes the destabilization.
  add({after_plus, CurveKind::Generic, {}, {{st.b_minus, CapImage::becomes(curve)}}});
  add({after_minus, CurveKind::Generic, {}, {{st.b_plus, CapImage::becomes(curve)}}});

  out.monodromy = mcg::compose(ob.monodromy, mcg::TwistWord({{s_plus, 1}, {s_minus, 1}}));
  out.validate();
  return st;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

CurveInfo curve_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("alphabet entries must be objects");
  CurveInfo c;
  c.id = field<std::string>(j, "id");
  const std::string kind = j.contains("kind") ? field<std::string>(j, "kind") : "generic";
  if (kind == "nonseparating") c.kind = CurveKind::Nonseparating;
  else if (kind == "generic") c.kind = CurveKind::Generic;
  else if (kind.rfind("boundary-parallel:", 0) == 0 && kind.size() > 18) {
    c.kind = CurveKind::BoundaryParallel;
    c.parallel_to = kind.substr(18);
  } else {
    throw ParseError("bad curve kind '" + kind + "'");
  }
  if (j.contains("cap_images")) {
    const auto& caps = j.at("cap_images");
    if (!caps.is_object()) throw ParseError("cap_images must be an object");
    for (const auto& [label, v] : caps.items()) {
      if (!v.is_string()) throw ParseError("cap image values must be strings");
      c.cap_images.emplace(label, CapImage::parse(v.get<std::string>()));
    }
  }
  return c;
}

}  // namespace

OpenBookDesc from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("open book descriptor must be a JSON object");
  OpenBookDesc ob;
  ob.surface.genus = field<std::int64_t>(j, "genus");
  ob.surface.boundary = field<std::vector<std::string>>(j, "boundary");
  ob.monodromy = mcg::TwistWord::parse(j.contains("monodromy") ? field<std::string>(j, "monodromy") : "");
  if (j.contains("alphabet")) {
    if (!j.at("alphabet").is_array()) throw ParseError("alphabet must be an array");
    for (const auto& e : j.at("alphabet")) {
      CurveInfo c = curve_from_json(e);
      const std::string id = c.id;
      if (!ob.alphabet.emplace(id, std::move(c)).second)
        throw ParseError("curve '" + id + "' declared twice");
    }
  } else {
    for (const auto& l : ob.monodromy.letters()) ob.alphabet.emplace(l.curve, CurveInfo{l.curve, CurveKind::Generic, {}, {}});
  }
  ob.validate();
  return ob;
}

nlohmann::json to_json(const OpenBookDesc& ob) {
  nlohmann::json alphabet = nlohmann::json::array();
  for (const auto& [id, c] : ob.alphabet) {
    nlohmann::json caps = nlohmann::json::object();
    for (const auto& [label, img] : c.cap_images) caps[label] = img.str();
    alphabet.push_back({{"id", id}, {"kind", c.kind_str()}, {"cap_images", caps}});
  }
  return {{"genus", ob.surface.genus},
          {"boundary", ob.surface.boundary},
          {"monodromy", ob.monodromy.str()},
          {"alphabet", alphabet}};
}

std::string summary(const OpenBookDesc& ob) {
  std::ostringstream os;
  os << "S_{" << ob.surface.genus << "," << ob.surface.r() << "} boundary [";
  for (std::size_t i = 0; i < ob.surface.boundary.size(); ++i)
    os << (i ? ", " : "") << ob.surface.boundary[i];
  os << "] monodromy " << (ob.monodromy.empty() ? std::string("id") : ob.monodromy.str());
  return os.str();
}

}  // namespace obcalc::openbook

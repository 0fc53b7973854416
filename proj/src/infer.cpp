#include "obcalc/infer.hpp"

#include "obcalc/dthree.hpp"
#include "obcalc/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace obcalc::infer {

namespace {

struct PredicateName {
  Predicate p;
  const char* name;
  bool arg;
};

constexpr PredicateName kPredicates[] = {
    {Predicate::CNonzero, "c_nonzero", false},
    {Predicate::CZero, "c_zero", false},
    {Predicate::Tight, "tight", false},
    {Predicate::Overtwisted, "overtwisted", false},
    {Predicate::SteinFillable, "stein_fillable", false},
    {Predicate::ConditionR, "condition_R", false},
    {Predicate::InImUAllD, "in_im_U_all_d", false},
    {Predicate::SgGe, "sg_ge", true},
    {Predicate::SgEq, "sg_eq", true},
    {Predicate::C1Nontorsion, "c1_nontorsion", false},
    {Predicate::BindingBoundOk, "binding_bound_ok", false},
    {Predicate::CapCobordismNotStein, "cap_cobordism_not_stein", true},
};

}  // namespace

std::string predicate_name(Predicate p) {
  for (const auto& e : kPredicates)
    if (e.p == p) return e.name;
  return "?";
}

Predicate parse_predicate(const std::string& name) {
  for (const auto& e : kPredicates)
    if (name == e.name) return e.p;
  throw ParseError("unknown predicate '" + name + "'");
}

bool predicate_takes_arg(Predicate p) {
  for (const auto& e : kPredicates)
    if (e.p == p) return e.arg;
  return false;
}

std::string FactKey::str() const {
  return predicate_name(predicate) + "(" + subject + (arg.empty() ? "" : ", " + arg) + ")";
}

// ---------------------------------------------------------------------------
// Rule table

namespace {

enum RuleIndex : std::size_t {
  kComult,
  kCap,
  kCapR,
  kTwist,
  kSteinObstruction,
  kStab,
  kGlue,
  kPlanar,
  kNontor,
  kOtSg,
  kOtVanish,
  kPeriodic,
  kStein,
  kPositive,
  kBound,
  kPa,
  kFamilyTight,
  kConj,
  kMurasugiZero,
  kMurasugiMinus,
  kDtwist,
  kSgEq,
  kRuleCount
};

}  // namespace

const std::vector<RuleInfo>& rules() {
  static const std::vector<RuleInfo> table{
      {"R-comult", "comultiplicativity",
       "If two open books on the same page both have non-vanishing contact class, so does the open book whose "
       "monodromy is their composition."},
      {"R-cap", "capping naturality",
       "Capping off a boundary component gives a map carrying the capped class to the uncapped class: a "
       "non-vanishing uncapped class forces a non-vanishing capped class, and a vanishing capped class forces a "
       "vanishing uncapped class."},
      {"R-capR", "capping naturality (U-equivariance)",
       "The capping map commutes with U, so Condition R passes from the uncapped book to the capped book, and "
       "membership in every image of U^d passes from the capped book to the uncapped book."},
      {"R-twist", "boundary twist naturality",
       "The cobordism of a (-1)-framed handle along the capped binding component carries the class of phi to the "
       "class of phi composed with a left-handed twist about a curve parallel to that component."},
      {"R-stein-obstruction", "Stein obstruction for the capping cobordism",
       "The capping cobordism admits a compatible Stein structure only if the class of phi composed with a "
       "left-handed boundary-parallel twist vanishes; a non-vanishing class rules it out."},
      {"R-stab", "Legendrian stabilization naturality",
       "There is a U-equivariant map carrying the class of contact (+-1)-surgery on K to that of the same surgery "
       "on a Legendrian stabilization of K."},
      {"R-glue", "gluing",
       "Gluing two open books along boundary components, or self-gluing one, preserves non-vanishing of the "
       "contact class when every input class is non-vanishing."},
      {"R-planar", "planarity obstruction",
       "A planar contact structure has its class in the image of U^d for every d, so Condition R forces support "
       "genus at least one."},
      {"R-nontor", "non-torsion criterion",
       "A non-vanishing class whose first Chern class is non-torsion satisfies Condition R."},
      {"R-OT-sg", "overtwisted support genus", "Every overtwisted contact structure has support genus zero."},
      {"R-ot-vanish", "vanishing for overtwisted structures",
       "The contact class of an overtwisted contact structure vanishes."},
      {"R-periodic", "periodic tightness criterion",
       "A periodic monodromy supports a tight, Stein fillable contact structure when every boundary fractional "
       "Dehn twist coefficient is non-negative, and an overtwisted one otherwise."},
      {"R-stein", "Stein fillability",
       "A Stein fillable contact structure is tight and has non-vanishing contact class."},
      {"R-positive", "positive factorization",
       "A monodromy written as a product of right-handed Dehn twists supports a Stein fillable contact "
       "structure."},
      {"R-bound", "binding bound",
       "A tight contact structure supported by a genus one open book with periodic monodromy and r binding "
       "components satisfies r + 1 + 4 d3 >= 0."},
      {"R-pa", "pseudo-Anosov U-image",
       "For a genus one pseudo-Anosov open book with exactly two foliation singularities on every boundary "
       "component, some fractional Dehn twist coefficient below 1 puts the class in the image of U^d for every "
       "d."},
      {"R-family-tight", "3-braid tightness classification",
       "The contact structure of h^d t_b t_a^-n1 ... t_b t_a^-nk on the one-holed torus is tight exactly when "
       "d > 0."},
      {"R-conj", "conjugation invariance",
       "Conjugate monodromies on the one-holed torus support the same contact structure, so all facts transfer "
       "between pseudo-Anosov words with equal normal form."},
      {"R-murasugi-zero", "Condition R under appending a zero block",
       "Since phi_{n0,2} = phi_{n,2} t_b, Stein naturality carries Condition R from (n, 2) to (n0, 2)."},
      {"R-murasugi-minus", "Condition R under incrementing the last block",
       "The surgery exact triangle for the extra t_a splits by the determinant identity, so Condition R passes "
       "from (n, 2) to (n-, 2)."},
      {"R-dtwist", "Condition R under extra full twists",
       "phi_{n,d} is phi_{n,2} followed by right-handed twists about a and b, so Condition R of (n, 2) gives "
       "Condition R of (n, d) for d >= 2."},
      {"R-sg-eq", "support genus upper bound",
       "A contact structure supported by a genus g page has support genus at most g, so a lower bound of g is "
       "sharp."},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Script parsing

namespace {

template <typename T>
T get(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

Subject make_subject(const std::string& id, openbook::OpenBookDesc ob) {
  Subject s;
  s.id = id;
  s.ob = std::move(ob);
  if (s.ob.surface.genus == 1 && s.ob.surface.r() == 1 && s.ob.monodromy.uses_only({"a", "b"})) {
    s.normal_form = mcg::classify(s.ob.monodromy);
    if (std::holds_alternative<mcg::Periodic>(*s.normal_form)) {
      const auto po = mcg::period_order(s.ob.monodromy);
      s.periodic = domains::PeriodicData{1, 1, po.m, {po.k}};
    }
  }
  return s;
}

int parse_sign(const nlohmann::json& v) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "+" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
  }
  throw ParseError("sign must be +1, -1, \"+\" or \"-\"");
}

openbook::OpenBookDesc family_book(const std::vector<std::int64_t>& n, std::int64_t d) {
  if (!mcg::valid_block_tuple(n)) throw DomainError("family tuple must be non-negative with a positive entry");
  openbook::OpenBookDesc ob;
  ob.surface = {1, {"B"}};
  ob.monodromy = mcg::normal_form_word(n, d);
  for (const char* id : {"a", "b"})
    ob.alphabet.emplace(id, openbook::CurveInfo{id, openbook::CurveKind::Nonseparating, {}, {}});
  ob.validate();
  return ob;
}

}  // namespace

Script parse_script(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("script must be a JSON object");
  Script sc;
  auto add_subject = [&sc](const std::string& id, openbook::OpenBookDesc ob) {
    if (id.empty()) throw ParseError("empty subject id");
    if (sc.subjects.count(id)) throw DomainError("subject '" + id + "' defined twice");
    sc.subjects.emplace(id, make_subject(id, std::move(ob)));
  };
  auto subject = [&sc](const std::string& id) -> const Subject& {
    auto it = sc.subjects.find(id);
    if (it == sc.subjects.end()) throw DomainError("unknown subject '" + id + "'");
    return it->second;
  };

  if (j.contains("subjects")) {
    if (!j.at("subjects").is_object()) throw ParseError("subjects must be an object");
    for (const auto& [id, desc] : j.at("subjects").items()) add_subject(id, openbook::from_json(desc));
  }

  if (j.contains("operations")) {
    if (!j.at("operations").is_array()) throw ParseError("operations must be an array");
    for (const auto& op : j.at("operations")) {
      const auto kind = get<std::string>(op, "op");
      const auto result = get<std::string>(op, "result");
      Relation rel;
      rel.result = result;
      if (kind == "cap") {
        rel.kind = Relation::Kind::Cap;
        rel.inputs = {get<std::string>(op, "subject")};
        rel.label = get<std::string>(op, "label");
        const bool closed = op.contains("allow_closed") && get<bool>(op, "allow_closed");
        add_subject(result, openbook::cap_off(subject(rel.inputs[0]).ob, rel.label, closed));
      } else if (kind == "compose") {
        rel.kind = Relation::Kind::Compose;
        rel.inputs = {get<std::string>(op, "left"), get<std::string>(op, "right")};
        add_subject(result, openbook::compose(subject(rel.inputs[0]).ob, subject(rel.inputs[1]).ob));
      } else if (kind == "glue") {
        rel.kind = Relation::Kind::Glue;
        rel.inputs = {get<std::string>(op, "left"), get<std::string>(op, "right")};
        const auto pairs = get<std::vector<std::pair<std::string, std::string>>>(op, "pairs");
        const bool closed = op.contains("allow_closed") && get<bool>(op, "allow_closed");
        add_subject(result, openbook::glue(subject(rel.inputs[0]).ob, subject(rel.inputs[1]).ob, pairs, closed));
      } else if (kind == "self_glue") {
        rel.kind = Relation::Kind::SelfGlue;
        rel.inputs = {get<std::string>(op, "subject")};
        const auto pair = get<std::pair<std::string, std::string>>(op, "pair");
        const bool closed = op.contains("allow_closed") && get<bool>(op, "allow_closed");
        add_subject(result, openbook::self_glue(subject(rel.inputs[0]).ob, pair, closed));
      } else if (kind == "surgery") {
        rel.kind = Relation::Kind::Surgery;
        rel.inputs = {get<std::string>(op, "subject")};
        rel.curve = get<std::string>(op, "curve");
        rel.sign = parse_sign(op.at("sign"));
        const auto& ob = subject(rel.inputs[0]).ob;
        auto it = ob.alphabet.find(rel.curve);
        if (it != ob.alphabet.end() && it->second.kind == openbook::CurveKind::BoundaryParallel) {
          rel.boundary_parallel_to_label = true;
          rel.label = it->second.parallel_to;
        }
        add_subject(result, openbook::surgery_compose(ob, rel.curve, rel.sign));
      } else if (kind == "stabilize") {
        rel.kind = Relation::Kind::Stabilize;
        rel.inputs = {get<std::string>(op, "subject")};
        rel.curve = get<std::string>(op, "curve");
        rel.sign = parse_sign(op.at("surgery"));
        rel.base = get<std::string>(op, "base");
        const int leg_sign = parse_sign(op.at("sign"));
        const auto& ob = subject(rel.inputs[0]).ob;
        const auto st = openbook::legendrian_stabilize(ob, rel.curve, leg_sign);
        auto base_ob = openbook::surgery_compose(ob, rel.curve, rel.sign);
        auto stab_ob = openbook::surgery_compose(st.ob, st.stabilized_curve, rel.sign);
        const auto back = openbook::cap_off(openbook::cap_off(stab_ob, st.b_plus), st.b_minus);
        if (!(back == base_ob)) throw std::logic_error("stabilized surgery does not cap back to the base surgery");
        add_subject(rel.base, std::move(base_ob));
        add_subject(result, std::move(stab_ob));
      } else if (kind == "family") {
        const auto n = get<std::vector<std::int64_t>>(op, "n");
        add_subject(result, family_book(n, get<std::int64_t>(op, "d")));
        continue;
      } else {
        throw ParseError("unknown operation '" + kind + "'");
      }
      sc.relations.push_back(std::move(rel));
    }
  }

  if (j.contains("annotations")) {
    if (!j.at("annotations").is_object()) throw ParseError("annotations must be an object");
    for (const auto& [id, ann] : j.at("annotations").items()) {
      subject(id);
      Subject& s = sc.subjects.at(id);
      if (ann.contains("periodic")) {
        const auto& p = ann.at("periodic");
        domains::PeriodicData pd{s.ob.surface.genus, s.ob.surface.r(), get<std::int64_t>(p, "m"),
                                 get<std::vector<std::int64_t>>(p, "k")};
        domains::sort_boundaries(pd);
        pd.validate(true);
        s.periodic = pd;
      }
      if (ann.contains("foliation")) {
        auto fd = foliations::from_json(ann.at("foliation"));
        if (fd.surface.genus != s.ob.surface.genus || fd.surface.r() != s.ob.surface.r())
          throw DomainError("foliation data of '" + id + "' does not match its page");
        s.foliation = std::move(fd);
      }
    }
  }

  if (j.contains("facts")) {
    if (!j.at("facts").is_array()) throw ParseError("facts must be an array");
    for (const auto& f : j.at("facts")) {
      FactKey key{get<std::string>(f, "subject"), parse_predicate(get<std::string>(f, "predicate")), ""};
      subject(key.subject);
      if (f.contains("arg")) {
        const auto& a = f.at("arg");
        key.arg = a.is_string() ? a.get<std::string>() : a.dump();
      }
      if (predicate_takes_arg(key.predicate) == key.arg.empty())
        throw ParseError("predicate '" + predicate_name(key.predicate) + "' " +
                         (key.arg.empty() ? "needs an argument" : "takes no argument"));
      sc.facts.push_back(std::move(key));
    }
  }
  return sc;
}

// ---------------------------------------------------------------------------
// Engine

namespace {

struct Candidate {
  FactKey key;
  std::size_t rule;
  std::vector<std::size_t> premises;
  std::string note;
};

const mcg::PseudoAnosov* pseudo_anosov(const Subject& s) {
  return s.normal_form ? std::get_if<mcg::PseudoAnosov>(&*s.normal_form) : nullptr;
}

bool all_positive(const mcg::TwistWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(), [](const mcg::Letter& l) { return l.exponent > 0; });
}

std::string tuple_str(const std::vector<std::int64_t>& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

// Some rotation of `from`, moved by `op`, is a rotation of `to`.
bool murasugi_step(const std::vector<std::int64_t>& from, const std::vector<std::int64_t>& to, mcg::MurasugiOp op) {
  std::vector<std::int64_t> rot = from;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (mcg::least_rotation(mcg::murasugi_op(rot, op)) == to) return true;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return false;
}

class Engine {
 public:
  Engine(const Script& sc, const RunOptions& opt) : sc_(sc), opt_(opt) {}

  Closure run() {
    for (const auto& key : sc_.facts) {
      if (index_.count(key)) continue;
      add({key, 0, {}, ""}, true, 0);
    }
    check_conflicts();
    std::vector<std::size_t> order(kRuleCount);
    for (std::size_t i = 0; i < kRuleCount; ++i) order[i] = i;
    if (opt_.rule_order) {
      order = *opt_.rule_order;
      std::vector<std::size_t> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted.size() != kRuleCount || sorted[i] != i)
          throw std::invalid_argument("rule order must be a permutation of the rule table");
    }

    for (std::size_t round = 1; out_.conflicts.empty(); ++round) {
      std::vector<Candidate> cands;
      for (auto r : order) fire(r, cands);
      // Keep one canonical derivation per new fact, then add in key order so
      // fact ids do not depend on the rule order.
      std::map<FactKey, Candidate> best;
      for (auto& c : cands) {
        if (index_.count(c.key)) continue;
        auto it = best.find(c.key);
        if (it == best.end() || std::tie(c.rule, c.premises, c.note) < std::tie(it->second.rule, it->second.premises,
                                                                                 it->second.note))
          best.insert_or_assign(c.key, c);
      }
      if (best.empty()) break;
      for (auto& [key, c] : best) add(std::move(c), false, round);
      check_conflicts();
    }
    return std::move(out_);
  }

 private:
  std::optional<std::size_t> has(const std::string& subject, Predicate p, const std::string& arg = "") const {
    auto it = index_.find(FactKey{subject, p, arg});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void add(Candidate c, bool asserted, std::size_t round) {
    Fact f;
    f.id = out_.facts.size();
    f.key = c.key;
    f.asserted = asserted;
    f.rule = c.rule;
    f.premises = std::move(c.premises);
    f.note = std::move(c.note);
    f.round = round;
    index_.emplace(f.key, f.id);
    by_subject_[f.key.subject].push_back(f.id);
    out_.facts.push_back(std::move(f));
  }

  void emit(std::vector<Candidate>& out, const std::string& subject, Predicate p, std::size_t rule,
            std::vector<std::size_t> premises, std::string note = {}, std::string arg = {}) const {
    FactKey key{subject, p, std::move(arg)};
    if (index_.count(key)) return;
    out.push_back({std::move(key), rule, std::move(premises), std::move(note)});
  }

  // premise(subject, p) => conclusion(target, q)
  void implication(std::vector<Candidate>& out, std::size_t rule, const std::string& from, Predicate p,
                   const std::string& to, Predicate q) const {
    if (auto id = has(from, p)) emit(out, to, q, rule, {*id});
  }

  void fire(std::size_t rule, std::vector<Candidate>& out) const {
    using P = Predicate;
    using K = Relation::Kind;
    switch (rule) {
      case kComult:
        for (const auto& rel : sc_.relations)
          if (rel.kind == K::Compose) {
            auto a = has(rel.inputs[0], P::CNonzero), b = has(rel.inputs[1], P::CNonzero);
            if (a && b) emit(out, rel.result, P::CNonzero, rule, {*a, *b});
          }
        break;
      case kCap:
        for (const auto& rel : sc_.relations)
          if (rel.kind == K::Cap) {
            implication(out, rule, rel.inputs[0], P::CNonzero, rel.result, P::CNonzero);
            implication(out, rule, rel.result, P::CZero, rel.inputs[0], P::CZero);
          }
        break;
      case kCapR:
        for (const auto& rel : sc_.relations)
          if (rel.kind == K::Cap) {
            implication(out, rule, rel.inputs[0], P::ConditionR, rel.result, P::ConditionR);
            implication(out, rule, rel.result, P::InImUAllD, rel.inputs[0], P::InImUAllD);
          }
        break;
      case kTwist:
        for (const auto& rel : sc_.relations)
          if (rel.kind == K::Surgery && rel.sign == 1 && rel.boundary_parallel_to_label &&
              sc_.subjects.at(rel.inputs[0]).ob.surface.r() > 1) {
            implication(out, rule, rel.inputs[0], P::CZero, rel.result, P::CZero);
            implication(out, rule, rel.result, P::CNonzero, rel.inputs[0], P::CNonzero);
          }
        break;
      case kSteinObstruction:
        for (const auto& rel : sc_.relations)
          if (rel.kind == K::Surgery && rel.sign == 1 && rel.boundary_parallel_to_label &&
              sc_.subjects.at(rel.inputs[0]).ob.surface.r() > 1)
            if (auto id = has(rel.result, P::CNonzero))
              emit(out, rel.inputs[0], P::CapCobordismNotStein, rule, {*id}, {}, rel.label);
        break;
      case kStab:
        for (const auto& rel : sc_.relations)
          if (rel.kind == K::Stabilize) {
            implication(out, rule, rel.result, P::CNonzero, rel.base, P::CNonzero);
            implication(out, rule, rel.base, P::CZero, rel.result, P::CZero);
            implication(out, rule, rel.result, P::ConditionR, rel.base, P::ConditionR);
            implication(out, rule, rel.base, P::InImUAllD, rel.result, P::InImUAllD);
          }
        break;
      case kGlue:
        for (const auto& rel : sc_.relations) {
          if (rel.kind == K::Glue) {
            auto a = has(rel.inputs[0], P::CNonzero), b = has(rel.inputs[1], P::CNonzero);
            if (a && b) emit(out, rel.result, P::CNonzero, rule, {*a, *b});
          } else if (rel.kind == K::SelfGlue) {
            implication(out, rule, rel.inputs[0], P::CNonzero, rel.result, P::CNonzero);
          }
        }
        break;
      case kPlanar:
        for (const auto& [id, s] : sc_.subjects)
          if (auto f = has(id, P::ConditionR)) emit(out, id, P::SgGe, rule, {*f}, {}, "1");
        break;
      case kNontor:
        for (const auto& [id, s] : sc_.subjects) {
          auto a = has(id, P::CNonzero), b = has(id, P::C1Nontorsion);
          if (a && b) emit(out, id, P::ConditionR, rule, {*a, *b});
        }
        break;
      case kOtSg:
        for (const auto& [id, s] : sc_.subjects)
          if (auto f = has(id, P::Overtwisted)) emit(out, id, P::SgEq, rule, {*f}, {}, "0");
        break;
      case kOtVanish:
        for (const auto& [id, s] : sc_.subjects) implication(out, rule, id, P::Overtwisted, id, P::CZero);
        break;
      case kPeriodic:
        for (const auto& [id, s] : sc_.subjects) {
          if (!s.periodic) continue;
          const auto& pd = *s.periodic;
          std::string note = "periodic, m = " + std::to_string(pd.m) + ", k = " + tuple_str(pd.k);
          if (pd.k.empty()) continue;
          if (pd.k.front() >= 0) {
            emit(out, id, P::Tight, rule, {}, note);
            emit(out, id, P::SteinFillable, rule, {}, note);
          } else {
            emit(out, id, P::Overtwisted, rule, {}, note);
          }
        }
        break;
      case kStein:
        for (const auto& [id, s] : sc_.subjects) {
          implication(out, rule, id, P::SteinFillable, id, P::CNonzero);
          implication(out, rule, id, P::SteinFillable, id, P::Tight);
        }
        break;
      case kPositive:
        for (const auto& [id, s] : sc_.subjects)
          if (all_positive(s.ob.monodromy))
            emit(out, id, P::SteinFillable, rule, {},
                 "monodromy " + (s.ob.monodromy.empty() ? std::string("id") : s.ob.monodromy.str()));
        break;
      case kBound:
        for (const auto& [id, s] : sc_.subjects) {
          if (!s.periodic || s.ob.surface.genus != 1) continue;
          auto t = has(id, P::Tight);
          if (!t) continue;
          try {
            const auto b = dthree::binding_bound(*s.periodic, opt_.channel, opt_.d3_offset);
            if (b.satisfied)
              emit(out, id, P::BindingBoundOk, rule, {*t},
                   "margin " + to_text(b.margin) + " (" + domains::channel_name(opt_.channel) + ")");
          } catch (const DomainError&) {
            // outside the range of the d3 formula
          }
        }
        break;
      case kPa:
        for (const auto& [id, s] : sc_.subjects) {
          if (!s.foliation) continue;
          const auto rep = foliations::u_image_report(*s.foliation);
          if (rep.in_im_U_all_d) emit(out, id, P::InImUAllD, rule, {}, rep.reason);
        }
        break;
      case kFamilyTight:
        for (const auto& [id, s] : sc_.subjects)
          if (const auto* pa = pseudo_anosov(s)) {
            const std::string note = "n = " + tuple_str(pa->n) + ", d = " + std::to_string(pa->d);
            emit(out, id, pa->d > 0 ? P::Tight : P::Overtwisted, rule, {}, note);
          }
        break;
      case kConj:
        for (const auto& [x, sx] : sc_.subjects) {
          const auto* px = pseudo_anosov(sx);
          if (!px) continue;
          auto it = by_subject_.find(x);
          if (it == by_subject_.end()) continue;
          for (const auto& [y, sy] : sc_.subjects) {
            const auto* py = pseudo_anosov(sy);
            if (x == y || !py || !(*px == *py)) continue;
            for (auto fid : it->second) {
              const auto& k = out_.facts[fid].key;
              if (k.predicate == P::CapCobordismNotStein || k.predicate == P::C1Nontorsion) continue;
              emit(out, y, k.predicate, rule, {fid}, {}, k.arg);
            }
          }
        }
        break;
      case kMurasugiZero:
      case kMurasugiMinus:
      case kDtwist:
        for (const auto& [x, sx] : sc_.subjects) {
          const auto* px = pseudo_anosov(sx);
          if (!px || px->d != 2) continue;
          auto f = has(x, P::ConditionR);
          if (!f) continue;
          for (const auto& [y, sy] : sc_.subjects) {
            const auto* py = pseudo_anosov(sy);
            if (!py || x == y) continue;
            bool ok = false;
            if (rule == kDtwist) ok = py->d > 2 && py->n == px->n;
            else if (py->d == 2)
              ok = murasugi_step(px->n, py->n, rule == kMurasugiZero ? mcg::MurasugiOp::Zero : mcg::MurasugiOp::Minus);
            if (ok) emit(out, y, P::ConditionR, rule, {*f}, "from " + tuple_str(px->n) + " to " + tuple_str(py->n));
          }
        }
        break;
      case kSgEq:
        for (const auto& [id, s] : sc_.subjects) {
          const auto g = std::to_string(s.ob.surface.genus);
          if (auto f = has(id, P::SgGe, g)) emit(out, id, P::SgEq, rule, {*f}, {}, g);
        }
        break;
      default:
        throw std::logic_error("unknown rule index");
    }
  }

  void conflict(std::size_t a, std::size_t b, std::string reason) {
    for (const auto& c : out_.conflicts)
      if (c.first == a && c.second == b) return;
    out_.conflicts.push_back({a, b, std::move(reason)});
  }

  void check_conflicts() {
    using P = Predicate;
    const std::pair<P, P> opposite[] = {
        {P::CNonzero, P::CZero},
        {P::Tight, P::Overtwisted},
        {P::SteinFillable, P::Overtwisted},
        {P::ConditionR, P::InImUAllD},
    };
    for (const auto& [subject, ids] : by_subject_) {
      for (const auto& [p, q] : opposite) {
        auto a = has(subject, p), b = has(subject, q);
        if (a && b)
          conflict(std::min(*a, *b), std::max(*a, *b),
                   predicate_name(p) + " and " + predicate_name(q) + " on " + subject);
      }
      const auto genus = sc_.subjects.at(subject).ob.surface.genus;
      for (auto i : ids) {
        const auto& ki = out_.facts[i].key;
        if (ki.predicate == P::SgGe && std::stoll(ki.arg) > genus)
          conflict(i, i, "support genus bound exceeds the page genus of " + subject);
        for (auto j : ids) {
          if (j <= i) continue;
          const auto& kj = out_.facts[j].key;
          auto bad = [](const FactKey& eq, const FactKey& other) {
            if (eq.predicate != P::SgEq) return false;
            if (other.predicate == P::SgEq) return eq.arg != other.arg;
            return other.predicate == P::SgGe && std::stoll(other.arg) > std::stoll(eq.arg);
          };
          if (bad(ki, kj) || bad(kj, ki)) conflict(i, j, "incompatible support genus facts on " + subject);
        }
      }
    }
  }

  const Script& sc_;
  const RunOptions& opt_;
  Closure out_;
  std::map<FactKey, std::size_t> index_;
  std::map<std::string, std::vector<std::size_t>> by_subject_;
};

}  // namespace

Closure run(const Script& script, const RunOptions& options) { return Engine(script, options).run(); }

std::optional<std::size_t> Closure::find(const FactKey& key) const {
  for (const auto& f : facts)
    if (f.key == key) return f.id;
  return std::nullopt;
}

std::vector<std::string> Closure::rule_chain(std::size_t id) const {
  std::vector<std::string> chain;
  std::set<std::size_t> seen;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (!seen.insert(i).second) return;
    const auto& f = facts.at(i);
    for (auto p : f.premises) walk(p);
    if (!f.asserted) chain.push_back(rules()[f.rule].id);
  };
  walk(id);
  return chain;
}

std::string Closure::derivation_text(std::size_t id) const {
  std::ostringstream os;
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int depth) {
    const auto& f = facts.at(i);
    os << std::string(static_cast<std::size_t>(2 * depth), ' ') << "[" << f.id << "] " << f.key.str();
    if (f.asserted) {
      os << "  asserted\n";
      return;
    }
    const auto& r = rules()[f.rule];
    os << "  by " << r.id << " (" << r.theorem << ")";
    if (!f.note.empty()) os << "; " << f.note;
    os << "\n";
    for (auto p : f.premises) walk(p, depth + 1);
  };
  walk(id, 0);
  return os.str();
}

std::string closure_text(const Closure& c) {
  std::ostringstream os;
  std::size_t asserted = 0;
  for (const auto& f : c.facts) asserted += f.asserted;
  os << c.facts.size() << " facts (" << asserted << " asserted, " << c.facts.size() - asserted << " derived)\n";
  for (const auto& f : c.facts) {
    if (f.asserted) continue;
    os << "\n" << c.derivation_text(f.id);
  }
  for (const auto& k : c.conflicts) {
    os << "\nCONFLICT: " << k.reason << "\n" << c.derivation_text(k.first);
    if (k.second != k.first) os << c.derivation_text(k.second);
  }
  return os.str();
}

nlohmann::json closure_json(const Closure& c) {
  nlohmann::json facts = nlohmann::json::array();
  for (const auto& f : c.facts) {
    nlohmann::json jf{{"id", f.id}, {"subject", f.key.subject}, {"predicate", predicate_name(f.key.predicate)}};
    if (!f.key.arg.empty()) jf["arg"] = f.key.arg;
    if (f.asserted) {
      jf["provenance"] = "asserted";
    } else {
      const auto& r = rules()[f.rule];
      jf["provenance"] = {{"rule", r.id}, {"theorem", r.theorem}, {"premises", f.premises}};
      if (!f.note.empty()) jf["provenance"]["note"] = f.note;
    }
    facts.push_back(std::move(jf));
  }
  nlohmann::json conflicts = nlohmann::json::array();
  for (const auto& k : c.conflicts) conflicts.push_back({{"facts", {k.first, k.second}}, {"reason", k.reason}});
  return {{"status", c.ok() ? "ok" : "conflict"}, {"facts", facts}, {"conflicts", conflicts}};
}

}  // namespace obcalc::infer

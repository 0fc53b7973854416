#include "obcalc/render.hpp"

#include "obcalc/dthree.hpp"
#include "obcalc/error.hpp"
#include "obcalc/links3.hpp"
#include "obcalc/mcg.hpp"

#include <algorithm>
#include <sstream>

namespace obcalc::render {

namespace {

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

nlohmann::json pq_list(const std::vector<Rational>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(to_pq(x));
  return a;
}

}  // namespace

Rendered classify(const std::string& word) {
  const auto w = mcg::TwistWord::parse(word);
  const auto nf = mcg::classify(w);
  const auto m = mcg::to_braid_matrix(w);
  Rendered r;
  r.text = mcg::describe(nf) + "\n";
  nlohmann::json j{{"word", w.str()},
                   {"exponent_sum", w.exponent_sum()},
                   {"matrix", {m.e[0], m.e[1], m.e[2], m.e[3]}},
                   {"trace", m.trace()}};
  if (const auto* p = std::get_if<mcg::Periodic>(&nf)) {
    const auto po = mcg::period_order(w);
    j["type"] = "periodic";
    j["fdtc"] = to_pq(p->fdtc);
    j["m"] = po.m;
    j["k"] = po.k;
  } else if (std::holds_alternative<mcg::Reducible>(nf)) {
    j["type"] = "reducible";
  } else {
    const auto& pa = std::get<mcg::PseudoAnosov>(nf);
    j["type"] = "pseudo_anosov";
    j["d"] = pa.d;
    j["n"] = pa.n;
    j["normal_form"] = mcg::normal_form_word(pa.n, pa.d).str();
  }
  r.json = std::move(j);
  return r;
}

Rendered d3(std::int64_t genus, std::int64_t m, const std::vector<std::int64_t>& k, domains::C1Channel channel,
            const Rational& offset) {
  domains::PeriodicData pd{genus, static_cast<std::int64_t>(k.size()), m, k};
  const auto perm = domains::sort_boundaries(pd);
  const auto rep = dthree::d3(pd, channel, offset);
  const auto bound = dthree::binding_margin(pd.r, rep.d3());

  std::vector<std::int64_t> perm1;
  for (auto p : perm) perm1.push_back(static_cast<std::int64_t>(p) + 1);

  std::ostringstream os;
  os << "sorted k: " << join(pd.k) << "  (input positions " << join(perm1) << ")\n";
  os << "m = " << m << ", r = " << pd.r << ", I = " << (rep.I == 0 ? std::string("undefined") : std::to_string(rep.I))
     << "\n";
  std::vector<std::string> s_text;
  for (const auto& x : rep.s) s_text.push_back(to_text(x));
  os << "s: ";
  if (s_text.empty()) os << "(none)";
  for (std::size_t i = 0; i < s_text.size(); ++i)
    os << (i ? ", " : "") << "s_" << (static_cast<std::size_t>(rep.I) - 1 + i) << " = " << s_text[i];
  os << "\n\n";

  nlohmann::json caps = nlohmann::json::array();
  std::vector<std::vector<std::string>> rows{
      {"cap", "k", "form", "chi_hat", "H^2", "<c1,H>", "c1^2 printed", "c1^2 fp", "shift"}};
  for (std::size_t j = 0; j < rep.caps.size(); ++j) {
    const auto& c = rep.caps[j];
    const auto kj = pd.k[j];
    if (c.trivial) {
      rows.push_back({std::to_string(j + 1), std::to_string(kj), "trivial", "-", "-", "-", "-", "-", to_text(c.shift)});
      caps.push_back({{"k", kj}, {"form", "trivial"}, {"shift", to_pq(c.shift)}});
    } else {
      rows.push_back({std::to_string(j + 1), std::to_string(kj), "negative", to_text(c.euler_measure),
                      to_text(c.self_intersection), to_text(c.c1_pairing), to_text(c.c1_squared_printed),
                      to_text(c.c1_squared_fp), to_text(c.shift)});
      caps.push_back({{"k", kj},
                      {"form", "negative"},
                      {"euler_measure", to_pq(c.euler_measure)},
                      {"self_intersection", to_pq(c.self_intersection)},
                      {"c1_pairing", to_pq(c.c1_pairing)},
                      {"c1_squared_printed", to_pq(c.c1_squared_printed)},
                      {"c1_squared_fp", to_pq(c.c1_squared_fp)},
                      {"shift", to_pq(c.shift)}});
    }
  }
  if (rep.caps.empty()) os << "no caps (one boundary component)\n";
  else os << table(rows);
  os << "\nf(" << to_text(rep.fdtc_last) << ") = " << to_text(rep.f_value) << "  [row " << dthree::f_row(rep.fdtc_last)
     << "]\n";
  os << table({{"d3 closed form (printed c1^2)", "=", to_text(rep.d3_printed)},
               {"d3 telescoped (printed c1^2)", "=", to_text(rep.d3_telescoped_printed)},
               {"d3 telescoped (first_principles c1^2)", "=", to_text(rep.d3_telescoped_fp)}});
  os << "channel " << domains::channel_name(channel) << ", offset " << to_text(offset) << "\n";
  os << "d3 = " << to_text(rep.d3()) << "\n";
  os << "binding margin r + 1 + 4 d3 = " << to_text(bound.margin) << (bound.satisfied ? " (satisfied)" : " (violated)")
     << "\n";
  os << "note: (m, k) is evaluated formally; realizability by a periodic map is not checked. c1 is torsion for "
        "non-negative periodic data, so d3 is defined.\n";

  Rendered r;
  r.text = os.str();
  r.json = {{"genus", genus},
            {"m", m},
            {"k_sorted", pd.k},
            {"permutation", perm1},
            {"I", rep.I},
            {"s", pq_list(rep.s)},
            {"caps", caps},
            {"fdtc_last", to_pq(rep.fdtc_last)},
            {"f", to_pq(rep.f_value)},
            {"d3_printed", to_pq(rep.d3_printed)},
            {"d3_telescoped_printed", to_pq(rep.d3_telescoped_printed)},
            {"d3_telescoped_first_principles", to_pq(rep.d3_telescoped_fp)},
            {"channel", domains::channel_name(channel)},
            {"offset", to_pq(offset)},
            {"d3", to_pq(rep.d3())},
            {"binding_margin", to_pq(bound.margin)},
            {"binding_bound", bound.satisfied ? "satisfied" : "violated"},
            {"formal", true}};
  return r;
}

Rendered det(const std::string& braid, bool with_oracle) {
  const auto b = links3::Braid3Word::parse(braid);
  const auto value = links3::determinant(b);
  Rendered r;
  r.text = std::to_string(value) + "\n";
  r.json = {{"braid", b.str()}, {"crossings", b.size()}, {"determinant", value}, {"method", "burau"}};
  if (with_oracle) {
    const bool small = b.size() <= 20;
    const auto oracle = small ? links3::determinant_state_sum(b) : links3::determinant_tl(b);
    const char* method = small ? "bracket state sum" : "bracket via Temperley-Lieb";
    r.text += "oracle (" + std::string(method) + "): " + std::to_string(oracle) + "\n";
    r.json["oracle"] = {{"method", method}, {"determinant", oracle}, {"agrees", oracle == value}};
    r.ok = oracle == value;
  }
  return r;
}

Rendered support_genus(const std::vector<std::int64_t>& n, std::int64_t d) {
  const auto rep = links3::support_genus(n, d);
  const auto hf = links3::hf_model(n);
  std::ostringstream os;
  os << "support genus of xi_{(" << join(n) << ")," << d << "}: " << links3::support_genus_name(rep.verdict) << "\n";
  os << (d > 0 ? "tight" : "overtwisted") << "\n";
  os << "det(B_{n,0}) = " << hf.tower_count << ", rank HF-hat(-Sigma(B_{n,2})) = " << hf.hat_rank << "\n";
  nlohmann::json chain = nlohmann::json::array();
  if (!rep.chain.empty()) os << "Condition R chain:\n";
  for (const auto& step : rep.chain) {
    os << "  " << step.rule << "  ->  ((" << join(step.n) << "), " << step.d << ")\n";
    chain.push_back({{"rule", step.rule}, {"n", step.n}, {"d", step.d}});
  }
  Rendered r;
  r.text = os.str();
  r.json = {{"n", n},
            {"d", d},
            {"support_genus", links3::support_genus_name(rep.verdict)},
            {"tight", d > 0},
            {"hf_model",
             {{"tower_count", hf.tower_count},
              {"hat_rank", hf.hat_rank},
              {"extra_generator_grading", hf.extra_generator_grading}}},
            {"chain", chain}};
  return r;
}

Rendered openbook(const openbook::OpenBookDesc& ob) {
  std::ostringstream os;
  os << openbook::summary(ob) << "\n";
  os << "chi = " << ob.surface.euler_characteristic() << "\n";
  for (const auto& [id, c] : ob.alphabet) {
    os << "  " << id << "  " << c.kind_str();
    for (const auto& [label, img] : c.cap_images) os << "  " << label << ":" << img.str();
    os << "\n";
  }
  Rendered r;
  r.text = os.str();
  r.json = openbook::to_json(ob);
  return r;
}

Rendered validate_pa(const foliations::FoliationData& fd) {
  const auto violations = foliations::validate(fd);
  const auto u = foliations::u_image_report(fd);
  std::ostringstream os;
  nlohmann::json vj = nlohmann::json::array();
  if (violations.empty()) os << "ok\n";
  for (const auto& v : violations) {
    os << "violation: " << v.constraint << " (by " << to_text(v.amount) << ")\n";
    vj.push_back({{"constraint", v.constraint}, {"amount", to_pq(v.amount)}});
  }
  os << "U-image: " << (u.in_im_U_all_d ? "in_im_U_all_d" : "inconclusive") << " (" << u.reason << ")\n";
  Rendered r;
  r.ok = violations.empty();
  r.text = os.str();
  r.json = {{"valid", violations.empty()},
            {"violations", vj},
            {"u_image", u.in_im_U_all_d ? "in_im_U_all_d" : "inconclusive"},
            {"reason", u.reason}};
  return r;
}

}  // namespace obcalc::render

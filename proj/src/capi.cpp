#include "obcalc/obcalc.h"

#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "obcalc/dthree.hpp"
#include "obcalc/error.hpp"
#include "obcalc/infer.hpp"
#include "obcalc/render.hpp"

struct obc_report {
  std::string text;
  std::string json;
};

struct obc_openbook {
  obcalc::openbook::OpenBookDesc desc;
};

namespace {

thread_local std::string last_error;

obc_status fail(obc_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
obc_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const obcalc::ParseError& e) {
    return fail(OBC_USAGE_ERROR, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(OBC_USAGE_ERROR, std::string("malformed JSON: ") + e.what());
  } catch (const obcalc::DomainError& e) {
    return fail(OBC_DOMAIN_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(OBC_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(OBC_INTERNAL_ERROR, "unknown error");
  }
}

obc_report* make_report(const obcalc::render::Rendered& r) {
  return new obc_report{r.text, r.json.dump(2)};
}

obcalc::domains::C1Channel resolve(obc_channel c) {
  switch (c) {
    case OBC_CHANNEL_PRINTED: return obcalc::domains::C1Channel::Printed;
    case OBC_CHANNEL_FIRST_PRINCIPLES: return obcalc::domains::C1Channel::FirstPrinciples;
    case OBC_CHANNEL_ENV: return obcalc::domains::channel_from_env();
  }
  throw obcalc::ParseError("unknown channel");
}

void need(const void* p, const char* what) {
  if (!p) throw obcalc::ParseError(std::string(what) + " is NULL");
}

}  // namespace

extern "C" {

const char* obc_version(void) { return "0.1.0"; }

const char* obc_last_error(void) { return last_error.c_str(); }

const char* obc_report_text(const obc_report* report) { return report ? report->text.c_str() : ""; }

const char* obc_report_json(const obc_report* report) { return report ? report->json.c_str() : ""; }

void obc_report_free(obc_report* report) { delete report; }

obc_status obc_classify(const char* word, obc_report** out) {
  return guarded([&] {
    need(word, "word");
    need(out, "out");
    *out = make_report(obcalc::render::classify(word));
    return OBC_OK;
  });
}

obc_status obc_d3(int64_t genus, int64_t m, const int64_t* k, size_t r, obc_channel channel, const char* offset,
                  obc_report** out) {
  return guarded([&] {
    need(out, "out");
    if (r > 0) need(k, "k");
    std::vector<std::int64_t> kv(k, k + r);
    obcalc::Rational off = obcalc::dthree::offset_from_env();
    if (offset) {
      off = obcalc::parse_rational(offset);
      if (obcalc::den(off * 2) != 1) throw obcalc::ParseError("offset must be a half-integer");
    }
    *out = make_report(obcalc::render::d3(genus, m, kv, resolve(channel), off));
    return OBC_OK;
  });
}

obc_status obc_det(const char* braid, int with_oracle, obc_report** out) {
  return guarded([&] {
    need(braid, "braid");
    need(out, "out");
    const auto r = obcalc::render::det(braid, with_oracle != 0);
    *out = make_report(r);
    if (!r.ok) return fail(OBC_INTERNAL_ERROR, "determinant disagrees with the bracket oracle");
    return OBC_OK;
  });
}

obc_status obc_support_genus(const int64_t* n, size_t len, int64_t d, obc_report** out) {
  return guarded([&] {
    need(out, "out");
    if (len > 0) need(n, "n");
    *out = make_report(obcalc::render::support_genus(std::vector<std::int64_t>(n, n + len), d));
    return OBC_OK;
  });
}

obc_status obc_openbook_from_json(const char* json, obc_openbook** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new obc_openbook{obcalc::openbook::from_json(nlohmann::json::parse(json))};
    return OBC_OK;
  });
}

void obc_openbook_free(obc_openbook* ob) { delete ob; }

obc_status obc_openbook_cap(const obc_openbook* ob, const char* label, int allow_closed, obc_openbook** out) {
  return guarded([&] {
    need(ob, "open book");
    need(label, "label");
    need(out, "out");
    *out = new obc_openbook{obcalc::openbook::cap_off(ob->desc, label, allow_closed != 0)};
    return OBC_OK;
  });
}

obc_status obc_openbook_glue(const obc_openbook* ob1, const obc_openbook* ob2, const char* const* left,
                             const char* const* right, size_t pairs, int allow_closed, obc_openbook** out) {
  return guarded([&] {
    need(ob1, "first open book");
    need(ob2, "second open book");
    need(out, "out");
    if (pairs > 0) {
      need(left, "left labels");
      need(right, "right labels");
    }
    std::vector<std::pair<std::string, std::string>> p;
    for (size_t i = 0; i < pairs; ++i) {
      need(left[i], "label");
      need(right[i], "label");
      p.emplace_back(left[i], right[i]);
    }
    *out = new obc_openbook{obcalc::openbook::glue(ob1->desc, ob2->desc, p, allow_closed != 0)};
    return OBC_OK;
  });
}

obc_status obc_openbook_self_glue(const obc_openbook* ob, const char* left, const char* right, int allow_closed,
                                  obc_openbook** out) {
  return guarded([&] {
    need(ob, "open book");
    need(left, "label");
    need(right, "label");
    need(out, "out");
    *out = new obc_openbook{obcalc::openbook::self_glue(ob->desc, {left, right}, allow_closed != 0)};
    return OBC_OK;
  });
}

obc_status obc_openbook_report(const obc_openbook* ob, obc_report** out) {
  return guarded([&] {
    need(ob, "open book");
    need(out, "out");
    *out = make_report(obcalc::render::openbook(ob->desc));
    return OBC_OK;
  });
}

obc_status obc_infer(const char* script_json, obc_channel channel, obc_report** out) {
  return guarded([&] {
    need(script_json, "script");
    need(out, "out");
    const auto script = obcalc::infer::parse_script(nlohmann::json::parse(script_json));
    obcalc::infer::RunOptions opts;
    opts.channel = resolve(channel);
    opts.d3_offset = obcalc::dthree::offset_from_env();
    const auto closure = obcalc::infer::run(script, opts);
    *out = new obc_report{obcalc::infer::closure_text(closure), obcalc::infer::closure_json(closure).dump(2)};
    if (!closure.ok()) return fail(OBC_DOMAIN_ERROR, closure.conflicts.front().reason);
    return OBC_OK;
  });
}

obc_status obc_validate_pa(const char* foliation_json, obc_report** out) {
  return guarded([&] {
    need(foliation_json, "foliation");
    need(out, "out");
    const auto fd = obcalc::foliations::from_json(nlohmann::json::parse(foliation_json));
    const auto r = obcalc::render::validate_pa(fd);
    *out = make_report(r);
    if (!r.ok) return fail(OBC_DOMAIN_ERROR, "singularity data violate the prong balance");
    return OBC_OK;
  });
}

}  // extern "C"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "obcalc/obcalc.h"

namespace {

bool json_mode = false;

struct ReportDeleter {
  void operator()(obc_report* r) const { obc_report_free(r); }
};
struct BookDeleter {
  void operator()(obc_openbook* b) const { obc_openbook_free(b); }
};
using Report = std::unique_ptr<obc_report, ReportDeleter>;
using Book = std::unique_ptr<obc_openbook, BookDeleter>;

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

int exit_code(obc_status s) {
  switch (s) {
    case OBC_OK: return 0;
    case OBC_DOMAIN_ERROR: return 1;
    case OBC_USAGE_ERROR: return 2;
    default: return 1;
  }
}

void print_error(obc_status s) {
  const std::string msg = obc_last_error();
  std::cerr << "error: " << msg << "\n";
  if (json_mode) std::cout << "{\"error\": \"" << json_escape(msg) << "\", \"status\": " << static_cast<int>(s) << "}\n";
}

// Runs one C API call producing a report, prints it (if any) and maps the
// status to an exit code.
template <class F>
int finish(F&& call) {
  obc_report* raw = nullptr;
  const obc_status s = call(&raw);
  Report r(raw);
  if (r) std::cout << (json_mode ? std::string(obc_report_json(r.get())) + "\n" : obc_report_text(r.get()));
  if (s != OBC_OK) {
    if (r) std::cerr << "error: " << obc_last_error() << "\n";
    else print_error(s);
    if (s == OBC_USAGE_ERROR) throw UsageError{};
  }
  return exit_code(s);
}

Book load_book(const std::string& path) {
  const auto text = read_file(path);
  obc_openbook* raw = nullptr;
  const auto s = obc_openbook_from_json(text.c_str(), &raw);
  if (s != OBC_OK) {
    print_error(s);
    if (s == OBC_USAGE_ERROR) throw UsageError{};
    std::exit(exit_code(s));
  }
  return Book(raw);
}

template <class F>
int show_book(F&& call) {
  obc_openbook* raw = nullptr;
  const obc_status s = call(&raw);
  Book b(raw);
  if (s != OBC_OK) return finish([&](obc_report**) { return s; });
  return finish([&](obc_report** r) { return obc_openbook_report(b.get(), r); });
}

obc_channel channel_option(const std::string& name) {
  if (name.empty()) return OBC_CHANNEL_ENV;
  if (name == "printed") return OBC_CHANNEL_PRINTED;
  if (name == "first_principles") return OBC_CHANNEL_FIRST_PRINCIPLES;
  throw UsageError{"unknown channel " + name};
}

std::pair<std::string, std::string> split_pair(const std::string& p) {
  const auto colon = p.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == p.size())
    throw UsageError{"--pair expects LEFT:RIGHT, got " + p};
  return {p.substr(0, colon), p.substr(colon + 1)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for open books, contact invariants and 3-braids", "obcalc"};
  app.require_subcommand(1);
  app.add_flag("--json", json_mode, "Emit one JSON document");
  app.set_version_flag("--version", obc_version());

  std::string word;
  auto* classify = app.add_subcommand("classify", "Nielsen-Thurston type of a word over {a, b}");
  classify->add_option("--word", word, "Twist word, e.g. \"a b^-1\"")->required();

  std::int64_t genus = 1, m = 1;
  std::vector<std::int64_t> k;
  std::string channel, offset;
  auto* d3 = app.add_subcommand("d3", "d3 of a genus-one periodic open book");
  d3->add_option("--genus", genus, "Page genus")->required();
  d3->add_option("-m", m, "Period")->required();
  d3->add_option("-k", k, "Boundary twist exponents k1,...,kr")->required()->delimiter(',');
  d3->add_option("--channel", channel, "c1^2 channel (printed | first_principles)");
  d3->add_option("--offset", offset, "Half-integer calibration offset");

  std::string ob_path, label;
  bool allow_closed = false;
  auto* cap = app.add_subcommand("cap", "Cap off one boundary component");
  cap->add_option("--ob", ob_path, "Open book descriptor (JSON)")->required()->check(CLI::ExistingFile);
  cap->add_option("--label", label, "Boundary label")->required();
  cap->add_flag("--allow-closed", allow_closed, "Permit a closed page");

  std::string ob1, ob2;
  std::vector<std::string> pairs;
  auto* glue = app.add_subcommand("glue", "Glue two open books (or one to itself) along boundary pairs");
  glue->add_option("--ob1", ob1, "First descriptor")->required()->check(CLI::ExistingFile);
  glue->add_option("--ob2", ob2, "Second descriptor; omit to self-glue")->check(CLI::ExistingFile);
  glue->add_option("--pair", pairs, "LEFT:RIGHT boundary labels (repeatable)")->required();
  glue->add_flag("--allow-closed", allow_closed, "Permit a closed page");

  std::string braid;
  bool oracle = false;
  auto* det = app.add_subcommand("det", "Determinant of a closed 3-braid");
  det->add_option("--braid", braid, "Braid word, e.g. \"s2 s1^-1\"")->required();
  det->add_flag("--oracle", oracle, "Cross-check with the bracket evaluation");

  std::vector<std::int64_t> n;
  std::int64_t d = 0;
  auto* sg = app.add_subcommand("sg", "Support genus of the family xi_{n,d}");
  sg->add_option("--n", n, "Block exponents n1,...,nk")->required()->delimiter(',');
  sg->add_option("--d", d, "Half-twist power")->required();

  std::string script;
  auto* infer = app.add_subcommand("infer", "Close a fact script under the implication rules");
  infer->add_option("--script", script, "Script (JSON)")->required()->check(CLI::ExistingFile);
  infer->add_option("--channel", channel, "c1^2 channel (printed | first_principles)");

  std::string foliation;
  auto* vpa = app.add_subcommand("validate-pa", "Check pseudo-Anosov singularity data");
  vpa->add_option("--foliation", foliation, "Foliation descriptor (JSON)")->required()->check(CLI::ExistingFile);

  const auto synopsis = [&] {
    for (auto* sub : app.get_subcommands()) return sub->help();
    return app.help();
  };
  try {
    app.parse(argc, argv);

    if (*classify) return finish([&](obc_report** r) { return obc_classify(word.c_str(), r); });
    if (*d3) {
      const auto ch = channel_option(channel);
      const char* off = offset.empty() ? nullptr : offset.c_str();
      return finish([&](obc_report** r) { return obc_d3(genus, m, k.data(), k.size(), ch, off, r); });
    }
    if (*cap) {
      const auto book = load_book(ob_path);
      return show_book([&](obc_openbook** out) { return obc_openbook_cap(book.get(), label.c_str(), allow_closed, out); });
    }
    if (*glue) {
      std::vector<std::string> left, right;
      for (const auto& p : pairs) {
        auto [l, rt] = split_pair(p);
        left.push_back(l);
        right.push_back(rt);
      }
      const auto first = load_book(ob1);
      if (ob2.empty()) {
        if (pairs.size() != 1) throw UsageError{"self-gluing takes exactly one --pair"};
        return show_book([&](obc_openbook** out) {
          return obc_openbook_self_glue(first.get(), left[0].c_str(), right[0].c_str(), allow_closed, out);
        });
      }
      const auto second = load_book(ob2);
      std::vector<const char*> lc, rc;
      for (std::size_t i = 0; i < left.size(); ++i) {
        lc.push_back(left[i].c_str());
        rc.push_back(right[i].c_str());
      }
      return show_book([&](obc_openbook** out) {
        return obc_openbook_glue(first.get(), second.get(), lc.data(), rc.data(), lc.size(), allow_closed, out);
      });
    }
    if (*det) return finish([&](obc_report** r) { return obc_det(braid.c_str(), oracle, r); });
    if (*sg) return finish([&](obc_report** r) { return obc_support_genus(n.data(), n.size(), d, r); });
    if (*infer) {
      const auto text = read_file(script);
      const auto ch = channel_option(channel);
      return finish([&](obc_report** r) { return obc_infer(text.c_str(), ch, r); });
    }
    if (*vpa) {
      const auto text = read_file(foliation);
      return finish([&](obc_report** r) { return obc_validate_pa(text.c_str(), r); });
    }
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << synopsis();
    return 2;
  } catch (const UsageError& e) {
    if (!e.message.empty()) std::cerr << "error: " << e.message << "\n";
    std::cerr << "\n" << synopsis();
    return 2;
  }
  return 2;
}

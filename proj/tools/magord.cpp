#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "magord/parse.hpp"
#include "magord/presets.hpp"
#include "magord/proptest.hpp"
#include "magord/series.hpp"
#include "magord/squarefree.hpp"
#include "magord/tower.hpp"
#include "magord/tower_io.hpp"

using namespace magord;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

int env_max_degree() {
  if (const char* env = std::getenv("MAGORD_DMAX")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 64;
}

struct GlobalOpts {
  std::string format = "text";
  bool records() const { return format == "records"; }
};

struct Context {
  TowerSpec spec;
  bool plain = false;  // single factor entered via --rank
  std::string recheck_flags;
};

/// Shared context flags for compare/sort/normalize/proptest.
struct ContextFlags {
  int rank = 0;
  bool reduced = false;
  std::string spec_path;
  std::string preset_ref;

  void attach(CLI::App* cmd, bool allow_plain = true) {
    if (allow_plain) {
      cmd->add_option("--rank", rank, "free (or reduced) group rank");
      cmd->add_flag("--reduced", reduced, "use the reduced free group");
    }
    cmd->add_option("--spec", spec_path, "tower spec file");
    cmd->add_option("--preset", preset_ref,
                    "preset reference, e.g. pure_braid:3 or pure_monomial:2,2");
  }

  Context build() const {
    int sources = (rank > 0) + !spec_path.empty() + !preset_ref.empty();
    if (sources != 1)
      throw CLI::ValidationError(
          "context", "give exactly one of --rank, --spec, --preset");
    if (rank > 0) {
      FactorKind kind = reduced ? FactorKind::Reduced : FactorKind::Free;
      std::string flags = (reduced ? std::string("--reduced ") : std::string()) +
                          "--rank " + std::to_string(rank);
      return {TowerSpec({{rank, kind}}, {}), true, flags};
    }
    if (!spec_path.empty()) {
      TowerFile f = load_tower_file(spec_path);
      SpecReport rep = validate_spec(f.spec);
      if (!rep.ok())
        throw std::runtime_error("invalid tower spec " + spec_path + ":\n" +
                                 rep.str());
      return {std::move(f.spec), false, "--spec " + spec_path};
    }
    PresetBundle b = load_preset(preset_ref);
    return {std::move(b.tower), false, "--preset " + preset_ref};
  }
};

TowerElement parse_element(const Context& ctx, const std::string& text) {
  if (ctx.plain || ctx.spec.factor_count() == 1)
    return TowerElement({parse_word(text, ctx.spec.factor(1).rank)});
  auto letters = parse_tower_word(text);
  return normalize(letters, ctx.spec);
}

std::string element_text(const Context& ctx, const TowerElement& e) {
  if (ctx.spec.factor_count() == 1) return to_string(e.component(1));
  return to_string(e);
}

std::string verdict_line(const TowerVerdict& v, bool tower) {
  if (v.ord == Ordering::Equal) return "EQUAL";
  std::string out = to_string(v.ord);
  out += " (decided at ";
  if (tower) out += "component " + std::to_string(v.component) + ", ";
  out += "degree " + std::to_string(v.inner.degree);
  out += ", monomial " + v.inner.monomial.str();
  out += ")";
  return out;
}

json verdict_record(const TowerVerdict& v, bool tower) {
  json j{{"verdict", to_string(v.ord)}};
  if (v.ord != Ordering::Equal) {
    j["degree"] = v.inner.degree;
    j["monomial"] = v.inner.monomial.str();
    if (tower) j["component"] = v.component;
  }
  return j;
}

int cmd_expand(const GlobalOpts& g, int rank, int degree, bool reduced,
               const std::string& text) {
  Word w = parse_word(text, rank);
  std::string series = reduced ? to_string(reduced_expand(w))
                               : to_string(magnus_expand(w, degree));
  if (g.records()) {
    json j{{"command", "expand"},
           {"word", to_string(w)},
           {"reduced", reduced},
           {"series", series}};
    if (!reduced) j["degree"] = degree;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << series << "\n";
  }
  return kExitOk;
}

int cmd_compare(const GlobalOpts& g, const Context& ctx, int max_degree,
                const std::string& left, const std::string& right) {
  TowerElement a = parse_element(ctx, left);
  TowerElement b = parse_element(ctx, right);
  CompareOptions opts;
  opts.max_degree = max_degree;
  TowerVerdict v = tower_compare(a, b, ctx.spec, opts);
  bool tower = ctx.spec.factor_count() > 1;
  if (g.records()) {
    json j = verdict_record(v, tower);
    j["command"] = "compare";
    j["left"] = element_text(ctx, a);
    j["right"] = element_text(ctx, b);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << verdict_line(v, tower) << "\n";
  }
  return kExitOk;
}

int cmd_sort(const GlobalOpts& g, const Context& ctx, int max_degree,
             const std::vector<std::string>& texts) {
  CompareOptions opts;
  opts.max_degree = max_degree;
  std::vector<TowerElement> elems;
  elems.reserve(texts.size());
  for (const auto& t : texts) elems.push_back(parse_element(ctx, t));
  std::stable_sort(elems.begin(), elems.end(),
                   [&](const TowerElement& x, const TowerElement& y) {
                     return tower_compare(x, y, ctx.spec, opts).ord ==
                            Ordering::Less;
                   });
  for (const auto& e : elems) {
    if (g.records())
      std::cout << json{{"command", "sort"}, {"element", element_text(ctx, e)}}
                       .dump()
                << "\n";
    else
      std::cout << element_text(ctx, e) << "\n";
  }
  return kExitOk;
}

int cmd_normalize(const GlobalOpts& g, const Context& ctx,
                  const std::string& text) {
  TowerElement e = parse_element(ctx, text);
  if (g.records()) {
    json comps = json::array();
    for (int i = 1; i <= e.size(); ++i) comps.push_back(to_string(e.component(i)));
    std::cout << json{{"command", "normalize"},
                      {"normal_form", element_text(ctx, e)},
                      {"components", comps}}
                     .dump()
              << "\n";
  } else {
    std::cout << element_text(ctx, e) << "\n";
  }
  return kExitOk;
}

int cmd_check_spec(const GlobalOpts& g, const std::string& path) {
  TowerFile f = load_tower_file(path);
  SpecReport rep = validate_spec(f.spec);
  PresetBundle as_bundle{f.name.empty() ? path : f.name, f.provenance, f.spec,
                         f.witness};
  PresetReport full = validate_preset(as_bundle);
  bool ok = rep.ok() && full.ok();
  if (g.records()) {
    json j{{"command", "check-spec"}, {"file", path}, {"valid", ok}};
    json viol = json::array();
    for (const auto& v : full.spec_report.violations) viol.push_back(v.what);
    for (const auto& fmsg : full.failures) viol.push_back(fmsg);
    j["violations"] = viol;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << full.str();
  }
  return ok ? kExitOk : kExitFindings;
}

int cmd_preset(const GlobalOpts& g, const std::string& ref,
               const std::string& emit) {
  PresetBundle b = load_preset(ref);
  PresetReport rep = validate_preset(b);
  if (!emit.empty()) {
    std::string text = write_tower_file(to_tower_file(b));
    if (emit == "-") {
      std::cout << text;
    } else {
      std::ofstream out(emit);
      if (!out) throw std::runtime_error("cannot write " + emit);
      out << text;
    }
    return rep.ok() ? kExitOk : kExitFindings;
  }
  if (g.records()) {
    json ranks = json::array();
    for (const auto& f : b.tower.factors()) ranks.push_back(f.rank);
    std::cout << json{{"command", "preset"},
                      {"name", b.name},
                      {"factor_ranks", ranks},
                      {"witness", b.witness.has_value()},
                      {"valid", rep.ok()},
                      {"checks", rep.checks_run}}
                     .dump()
              << "\n";
  } else {
    std::cout << b.name << "\n";
    std::cout << "provenance: " << b.provenance << "\n";
    std::cout << "factor ranks:";
    for (const auto& f : b.tower.factors())
      std::cout << " " << f.rank
                << (f.kind == FactorKind::Reduced ? "(reduced)" : "");
    std::cout << "\n" << rep.str();
  }
  return rep.ok() ? kExitOk : kExitFindings;
}

int cmd_proptest(const GlobalOpts& g, const std::string& suite,
                 const ContextFlags& cf, uint64_t seed, int iters, int max_len,
                 int max_degree) {
  Context ctx = cf.build();
  PropContext pctx = PropContext::tower(ctx.spec, ctx.recheck_flags,
                                        ctx.recheck_flags);
  PropOptions opts;
  opts.seed = seed;
  opts.iterations = iters;
  opts.max_len = max_len;
  opts.compare.max_degree = max_degree;
  PropResult res = run_suite(suite, pctx, opts);
  if (g.records()) {
    for (const auto& f : res.failures)
      std::cout << json{{"command", "proptest"},
                        {"suite", res.suite},
                        {"failure", f.description},
                        {"recheck", f.recheck}}
                       .dump()
                << "\n";
    std::cout << json{{"command", "proptest"},
                      {"suite", res.suite},
                      {"context", res.context},
                      {"seed", seed},
                      {"cases", res.cases},
                      {"failures", res.failures.size()},
                      {"pass", res.pass()}}
                     .dump()
              << "\n";
  } else {
    for (const auto& f : res.failures) {
      std::cout << "COUNTEREXAMPLE: " << f.description << "\n";
      std::cout << "  recheck: " << f.recheck << "\n";
    }
    if (res.pass())
      std::cout << "PASS " << res.cases << "/" << res.cases << "\n";
    else
      std::cout << "FAIL " << res.failures.size() << " of " << res.cases
                << " cases\n";
  }
  return res.pass() ? kExitOk : kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-ordering of almost-direct products of (reduced) free "
               "groups via the Magnus expansion"};
  app.require_subcommand(1);
  GlobalOpts global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "records"}));

  int max_degree = env_max_degree();

  // expand
  auto* expand = app.add_subcommand("expand", "print the (reduced) Magnus expansion");
  int ex_rank = 0, ex_degree = 8;
  bool ex_reduced = false;
  std::string ex_word;
  expand->add_option("--rank", ex_rank, "free group rank")->required();
  expand->add_option("--degree", ex_degree, "truncation degree (free mode)");
  expand->add_flag("--reduced", ex_reduced, "reduced expansion (exact)");
  expand->add_option("word", ex_word, "word to expand")->required();

  // compare
  auto* compare = app.add_subcommand("compare", "compare two elements");
  ContextFlags cmp_ctx;
  cmp_ctx.attach(compare);
  compare->add_option("--max-degree", max_degree, "deepening ceiling");
  std::string cmp_left, cmp_right;
  compare->add_option("left", cmp_left)->required();
  compare->add_option("right", cmp_right)->required();

  // sort
  auto* sort = app.add_subcommand("sort", "sort elements ascending");
  ContextFlags sort_ctx;
  sort_ctx.attach(sort);
  sort->add_option("--max-degree", max_degree, "deepening ceiling");
  std::vector<std::string> sort_words;
  sort->add_option("words", sort_words)->required()->expected(-1);

  // normalize
  auto* norm = app.add_subcommand("normalize", "normal form of a tower word");
  ContextFlags norm_ctx;
  norm_ctx.attach(norm, /*allow_plain=*/false);
  std::string norm_word;
  norm->add_option("word", norm_word)->required();

  // check-spec
  auto* check = app.add_subcommand("check-spec", "validate a tower spec file");
  std::string check_path;
  check->add_option("file", check_path)->required();

  // preset
  auto* preset = app.add_subcommand("preset", "build and certify a preset");
  std::string preset_ref, preset_emit;
  preset->add_option("ref", preset_ref, "e.g. pure_braid:3")->required();
  preset->add_option("--emit", preset_emit, "write the tower-spec file ('-' = stdout)");

  // proptest
  auto* prop = app.add_subcommand("proptest", "run a property suite");
  std::string prop_suite;
  prop->add_option("suite", prop_suite, "order-axioms | bi-invariance | "
                   "ia-invariance | positive-cone | gen-torsion | "
                   "ab-respecting | diagram")
      ->required();
  ContextFlags prop_ctx_flags;
  int prop_free_rank = 0, prop_reduced_rank = 0;
  prop->add_option("--free-rank", prop_free_rank, "free group context");
  prop->add_option("--reduced-rank", prop_reduced_rank, "reduced group context");
  prop->add_option("--spec", prop_ctx_flags.spec_path, "tower spec file");
  prop->add_option("--preset", prop_ctx_flags.preset_ref, "preset reference");
  uint64_t prop_seed = 0;
  int prop_iters = 1000, prop_max_len = 4;
  prop->add_option("--seed", prop_seed, "RNG seed");
  prop->add_option("--iters", prop_iters, "iterations");
  prop->add_option("--max-len", prop_max_len, "max word length per factor");
  prop->add_option("--max-degree", max_degree, "deepening ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(global, ex_rank, ex_degree, ex_reduced, ex_word);
    if (*compare)
      return cmd_compare(global, cmp_ctx.build(), max_degree, cmp_left, cmp_right);
    if (*sort) return cmd_sort(global, sort_ctx.build(), max_degree, sort_words);
    if (*norm) return cmd_normalize(global, norm_ctx.build(), norm_word);
    if (*check) return cmd_check_spec(global, check_path);
    if (*preset) return cmd_preset(global, preset_ref, preset_emit);
    if (*prop) {
      if (prop_free_rank > 0) prop_ctx_flags.rank = prop_free_rank;
      if (prop_reduced_rank > 0) {
        prop_ctx_flags.rank = prop_reduced_rank;
        prop_ctx_flags.reduced = true;
      }
      return cmd_proptest(global, prop_suite, prop_ctx_flags, prop_seed,
                          prop_iters, prop_max_len, max_degree);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFindings;
  }
  return kExitUsage;
}

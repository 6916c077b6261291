// topomodal: batch interface over the library.  Subcommands mirror the
// library operations; every run prints a human report or, with --json, a
// single deterministic JSON object.  Exit codes: 0 completed, 2 assertion
// or --expect mismatch, 1 usage/input error.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <topomodal/algebra.hpp>
#include <topomodal/bisim.hpp>
#include <topomodal/catalog.hpp>
#include <topomodal/json_io.hpp>
#include <topomodal/props.hpp>
#include <topomodal/selftest.hpp>
#include <topomodal/semantics.hpp>
#include <topomodal/translate.hpp>

using namespace topomodal;
using nlohmann::ordered_json;

namespace {

struct Output {
  bool json = false;
  std::optional<std::string> expect;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Exit status: --expect compares against the verdict; commands that assert
// something (definability, chi-n, selftest) fail on their own otherwise.
int finish(const Output& out, ordered_json report, bool verdict,
           bool asserts) {
  report["verdict"] = verdict ? "pass" : "fail";
  if (out.json) std::printf("%s\n", report.dump().c_str());
  if (out.expect) return (*out.expect == (verdict ? "pass" : "fail")) ? 0 : 2;
  if (asserts) return verdict ? 0 : 2;
  return 0;
}

void human(const Output& out, const std::string& line) {
  if (!out.json) std::printf("%s\n", line.c_str());
}

std::string render_valuation(const std::map<int, PointSet>& props,
                             const std::map<int, PointSet>& nominals) {
  std::string s;
  for (const auto& [k, v] : props)
    s += (s.empty() ? "" : " ") + ("p" + std::to_string(k)) + "=" +
         set_to_string(v);
  for (const auto& [k, v] : nominals)
    s += (s.empty() ? "" : " ") + ("i" + std::to_string(k)) + "=" +
         set_to_string(v);
  return s.empty() ? "(empty)" : s;
}

ordered_json valuation_json(const std::map<int, PointSet>& props,
                            const std::map<int, PointSet>& nominals) {
  ordered_json val = ordered_json::object();
  for (const auto& [k, v] : props)
    val["p" + std::to_string(k)] = set_to_points(v);
  for (const auto& [k, v] : nominals)
    val["i" + std::to_string(k)] = set_to_points(v);
  return val;
}

int worker_count() {
  const char* env = std::getenv("TOPOMODAL_WORKERS");
  if (!env) return 1;
  const int n = std::atoi(env);
  if (n < 1 || n > 256)
    throw ValidationError("TOPOMODAL_WORKERS must be between 1 and 256");
  return n;
}

int run_enumerate(const Output& out, int n, bool count_only) {
  const std::vector<Space> spaces = all_spaces(n);
  ordered_json report{{"command", "enumerate"}, {"n", n},
                      {"count", spaces.size()}};
  if (!count_only) {
    report["spaces"] = ordered_json::array();
    for (const Space& s : spaces) {
      report["spaces"].push_back(ordered_json::parse(space_to_json(s)));
      human(out, space_to_json(s));
    }
  }
  human(out, "n=" + std::to_string(n) + ": " + std::to_string(spaces.size()) +
                 " topologies");
  return finish(out, std::move(report), true, false);
}

int run_check(const Output& out, const std::string& model_path,
              const std::string& formula, std::optional<int> point) {
  const Model m = model_from_json(read_file(model_path));
  const ModalPtr f = modal_formula_or_name(formula);
  if (point && (*point < 0 || *point >= m.space().point_count()))
    throw ValidationError("point " + std::to_string(*point) +
                          " is outside the model");
  const PointSet ts = truth_set(m, f);
  ordered_json report{{"command", "check"},
                      {"formula", print_modal(f)},
                      {"truth_set", set_to_points(ts)}};
  human(out, "truth set: " + set_to_string(ts) + " of " +
                 std::to_string(m.space().point_count()) + " points");
  bool verdict;
  if (point) {
    verdict = contains(ts, *point);
    report["point"] = *point;
    report["truth"] = verdict;
    human(out, std::string(verdict ? "true" : "false") + " at point " +
                   std::to_string(*point));
  } else {
    verdict = ts == m.space().points();
    human(out, verdict ? "true at every point" : "not true at every point");
  }
  return finish(out, std::move(report), verdict, false);
}

int run_valid(const Output& out, const std::string& space_path,
              const std::string& formula, int budget) {
  const Space s = space_from_json(read_file(space_path));
  const ModalPtr f = modal_formula_or_name(formula);
  const auto cex = validity_counterexample(s, f, budget);
  ordered_json report{{"command", "valid"},
                      {"formula", print_modal(f)},
                      {"valid", !cex.has_value()}};
  if (cex) {
    report["counterexample"] = {{"val", valuation_json(cex->props, cex->nominals)},
                                {"point", cex->point}};
    human(out, "not valid: " + render_valuation(cex->props, cex->nominals) +
                   " refutes it at point " + std::to_string(cex->point));
  } else {
    human(out, "valid on the space");
  }
  return finish(out, std::move(report), !cex.has_value(), false);
}

int run_definability(const Output& out, const std::string& formula,
                     const std::string& tag, int max_n, int budget) {
  const ModalPtr f = modal_formula_or_name(formula);
  check_property(Space(1, {0, 1}), tag);  // reject unknown tags up front

  std::vector<Space> spaces;
  std::vector<int> sizes;
  for (int n = 1; n <= max_n; ++n)
    for (auto& s : all_spaces(n)) {
      spaces.push_back(std::move(s));
      sizes.push_back(n);
    }

  // Workers claim spaces by index; results land in per-index slots so the
  // merged report is identical for any worker count.
  std::vector<char> axiom_ok(spaces.size()), prop_ok(spaces.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    try {
      for (std::size_t i; (i = cursor.fetch_add(1)) < spaces.size();) {
        axiom_ok[i] = valid_on_space(spaces[i], f, budget);
        prop_ok[i] = check_property(spaces[i], tag);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> hold(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  };
  const int workers = worker_count();
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  ordered_json mismatches = ordered_json::array();
  long bad = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (axiom_ok[i] == prop_ok[i]) continue;
    ++bad;
    mismatches.push_back(
        {{"index", i},
         {"n", sizes[i]},
         {"space", ordered_json::parse(space_to_json(spaces[i]))},
         {"formula_valid", bool(axiom_ok[i])},
         {"property_holds", bool(prop_ok[i])}});
    human(out, "mismatch at index " + std::to_string(i) + ": " +
                   space_to_json(spaces[i]) + " formula_valid=" +
                   (axiom_ok[i] ? "true" : "false") + " property=" +
                   (prop_ok[i] ? "true" : "false"));
  }
  human(out, "checked " + std::to_string(spaces.size()) + " spaces up to n=" +
                 std::to_string(max_n) + ": " + std::to_string(bad) +
                 " mismatches");
  ordered_json report{{"command", "definability"}, {"formula", print_modal(f)},
                      {"property", tag},           {"max_n", max_n},
                      {"checked", spaces.size()},  {"mismatches", mismatches}};
  return finish(out, std::move(report), bad == 0, true);
}

int run_bisim(const Output& out, const std::string& path1,
              const std::string& path2, std::optional<std::vector<int>> points,
              bool witness, std::optional<int> depth) {
  const Model m1 = model_from_json(read_file(path1));
  const Model m2 = model_from_json(read_file(path2));
  if (witness && !points)
    throw ValidationError("--witness needs --points to know which pair");

  const PairRelation z = greatest_topo_bisimulation(m1, m2);
  ordered_json report{{"command", "bisim"}};
  ordered_json pair_list = ordered_json::array();
  std::string rendered;
  for (const auto& [x, y] : z.pairs()) {
    pair_list.push_back({x, y});
    rendered += (rendered.empty() ? "" : " ") + ("(" + std::to_string(x) +
                                                 "," + std::to_string(y) + ")");
  }
  report["relation"] = pair_list;
  human(out, "greatest bisimulation: " +
                 (rendered.empty() ? "(empty)" : rendered));

  bool verdict = !z.is_empty();
  if (points) {
    if (points->size() != 2)
      throw ValidationError("--points takes exactly two points w,w'");
    const int w1 = (*points)[0], w2 = (*points)[1];
    if (w1 < 0 || w1 >= m1.space().point_count() || w2 < 0 ||
        w2 >= m2.space().point_count())
      throw ValidationError("points " + std::to_string(w1) + "," +
                            std::to_string(w2) + " are outside the models");
    verdict = z.at(w1, w2);
    report["points"] = {w1, w2};
    report["related"] = verdict;
    human(out, std::string(verdict ? "related" : "not related") + " at (" +
                   std::to_string(w1) + "," + std::to_string(w2) + ")");
    if (witness) {
      const int cap = depth.value_or(
          3 * std::max(m1.space().point_count(), m2.space().point_count()));
      const auto d = distinguishing_formula(m1, w1, m2, w2, cap);
      report["depth"] = cap;
      report["witness"] = d ? ordered_json(print_modal(*d)) : ordered_json();
      human(out, d ? "distinguishing formula: " + print_modal(*d)
                   : "no distinguishing formula up to depth " +
                         std::to_string(cap));
    }
  }
  return finish(out, std::move(report), verdict, false);
}

int run_translate(const Output& out, const std::string& mode,
                  const std::string& formula, std::optional<int> var,
                  bool fresh) {
  ordered_json report{{"command", "translate"}, {"mode", mode}};
  std::string output;
  int x = var.value_or(0);
  if (mode == "st" || mode == "st-ext") {
    const ModalPtr f = modal_formula_or_name(formula);
    report["input"] = print_modal(f);
    if (mode == "st") {
      output = print_fo(st(f, x, fresh));
    } else {
      if (!var) {
        x = 0;  // smallest variable the formula does not mention
        while (modal_symbols(f).vars.count(x)) ++x;
      }
      output = print_fo(st_ext(f, x, fresh));
    }
    report["var"] = x;
    human(out, "evaluation variable: x" + std::to_string(x));
  } else if (mode == "ht") {
    if (fresh) throw ValidationError("--fresh applies to st and st-ext only");
    const FoPtr f = fo_formula_or_name(formula);
    report["input"] = print_fo(f);
    report["var"] = x;
    output = print_modal(ht(f, x));
  } else {
    throw ValidationError("mode must be one of st, st-ext, ht");
  }
  report["output"] = output;
  human(out, output);
  return finish(out, std::move(report), true, false);
}

int run_algebra(const Output& out, std::optional<std::string> space_path,
                std::optional<std::string> algebra_path, bool dual,
                std::optional<std::string> formula, int budget) {
  if (space_path.has_value() == algebra_path.has_value())
    throw ValidationError("give exactly one of --space or --algebra");
  ordered_json report{{"command", "algebra"}};
  bool verdict = true;

  InteriorAlgebra b =
      space_path ? complex_algebra(space_from_json(read_file(*space_path)))
                 : algebra_from_json(read_file(*algebra_path));
  if (space_path) {
    report["algebra"] = ordered_json::parse(algebra_to_json(b));
    human(out, algebra_to_json(b));
  } else {
    const auto bad = check_interior_algebra(b);
    verdict = !bad.has_value();
    if (bad) {
      report["violated"] = {{"axiom", bad->axiom},
                            {"a", set_to_points(bad->a)},
                            {"b", set_to_points(bad->b)}};
      human(out, "axiom " + bad->axiom + " fails at " + set_to_string(bad->a) +
                     (bad->axiom == "i2" ? ", " + set_to_string(bad->b) : ""));
    } else {
      human(out, "interior algebra: axioms i1-i4 hold");
    }
    report["interior_algebra"] = verdict;
  }
  if (dual) {
    const Space d = dual_space(b);
    report["dual_space"] = ordered_json::parse(space_to_json(d));
    human(out, "dual space: " + space_to_json(d));
  }
  if (formula) {
    const ModalPtr f = modal_formula_or_name(*formula);
    const bool eq = equation_valid(b, f, budget);
    report["formula"] = print_modal(f);
    report["equation_valid"] = eq;
    verdict = eq;
    human(out, std::string("equation ") + (eq ? "valid" : "not valid") +
                   " on the algebra");
  }
  return finish(out, std::move(report), verdict, false);
}

int run_chi_n(const Output& out, int max_n, int budget) {
  const FoPtr chi = named_fo_formula("chi-n");
  ordered_json sizes = ordered_json::array();
  bool all_unsat = true;
  for (int n = 1; n <= max_n; ++n) {
    const auto witness = satisfiable_on_size(chi, n, budget);
    sizes.push_back({{"n", n}, {"satisfiable", witness.has_value()}});
    if (witness) {
      all_unsat = false;
      sizes.back()["witness"] =
          ordered_json::parse(space_to_json(witness->space));
      human(out, "size " + std::to_string(n) + ": satisfiable on " +
                     space_to_json(witness->space));
    } else {
      human(out, "size " + std::to_string(n) + ": unsatisfiable");
    }
  }
  ordered_json report{{"command", "chi-n"}, {"max_n", max_n}, {"sizes", sizes}};
  return finish(out, std::move(report), all_unsat, true);
}

int run_selftest(const Output& out) {
  const auto results = run_acceptance_suite();
  ordered_json list = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"number", r.number},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"detail", r.detail}});
    char line[512];
    std::snprintf(line, sizeof line, "criterion %2d: %s  %s  (%s)", r.number,
                  r.passed ? "PASS" : "FAIL", r.title.c_str(),
                  r.detail.c_str());
    human(out, line);
  }
  ordered_json report{{"command", "selftest"}, {"criteria", list}};
  return finish(out, std::move(report), all, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topological semantics workbench"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.json, "machine-readable report on stdout");
  app.add_option("--expect", out.expect,
                 "exit 0 iff the verdict matches (pass|fail)")
      ->check(CLI::IsMember({"pass", "fail"}));

  int enum_n = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand(
      "enumerate", "stream or count all topologies on n points");
  enumerate->add_option("--n", enum_n, "number of points")->required();
  enumerate->add_flag("--count-only", count_only, "print the count only");

  std::string model_path, formula;
  std::optional<int> point;
  auto* check = app.add_subcommand("check", "evaluate a formula in a model");
  check->add_option("--model", model_path, "model JSON file")->required();
  check->add_option("--formula", formula, "formula or catalog name")
      ->required();
  check->add_option("--point", point, "evaluation point");

  std::string space_path;
  int budget = 24;
  auto* valid =
      app.add_subcommand("valid", "validity on a space, all valuations");
  valid->add_option("--space", space_path, "space JSON file")->required();
  valid->add_option("--formula", formula, "formula or catalog name")
      ->required();
  valid->add_option("--budget", budget, "points x letters sweep guard");

  std::string tag;
  int max_n = 4;
  auto* definability = app.add_subcommand(
      "definability", "axiom validity against a property checker, all spaces");
  definability->add_option("--formula", formula, "formula or catalog name")
      ->required();
  definability->add_option("--property", tag, "property tag")->required();
  definability->add_option("--max-n", max_n, "largest point count");
  definability->add_option("--budget", budget, "points x letters sweep guard");

  std::string model2_path;
  std::optional<std::vector<int>> points;
  std::optional<int> depth;
  bool witness = false;
  auto* bisim =
      app.add_subcommand("bisim", "greatest topo-bisimulation of two models");
  bisim->add_option("--model1", model_path, "first model JSON file")
      ->required();
  bisim->add_option("--model2", model2_path, "second model JSON file")
      ->required();
  bisim->add_option("--points", points, "pair w,w' to examine")
      ->delimiter(',');
  bisim->add_flag("--witness", witness, "search for a distinguishing formula");
  bisim->add_option("--depth", depth, "witness search depth cap");

  std::string mode;
  std::optional<int> var;
  bool fresh = false;
  auto* translate =
      app.add_subcommand("translate", "between modal and two-sorted syntax");
  translate->add_option("--mode", mode, "st | st-ext | ht")->required();
  translate->add_option("--formula", formula, "formula or catalog name")
      ->required();
  translate->add_option("--var", var, "evaluation variable index");
  translate->add_flag("--fresh", fresh, "fresh variables per binder");

  std::optional<std::string> alg_space, alg_algebra, alg_formula;
  bool dual = false;
  auto* algebra = app.add_subcommand(
      "algebra", "complex algebras, axiom checks, duals, equations");
  algebra->add_option("--space", alg_space, "space JSON file");
  algebra->add_option("--algebra", alg_algebra, "algebra JSON file");
  algebra->add_flag("--dual", dual, "emit the dual space");
  algebra->add_option("--formula", alg_formula, "equation to check");
  algebra->add_option("--budget", budget, "atoms x letters sweep guard");

  auto* chi = app.add_subcommand(
      "chi-n", "assert the order sentence unsatisfiable up to a size");
  chi->add_option("--max-n", max_n, "largest point count");
  chi->add_option("--budget", budget, "sweep guard");

  app.add_subcommand("selftest", "run the full acceptance suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(enumerate))
      return run_enumerate(out, enum_n, count_only);
    if (app.got_subcommand(check))
      return run_check(out, model_path, formula, point);
    if (app.got_subcommand(valid))
      return run_valid(out, space_path, formula, budget);
    if (app.got_subcommand(definability))
      return run_definability(out, formula, tag, max_n, budget);
    if (app.got_subcommand(bisim))
      return run_bisim(out, model_path, model2_path, points, witness, depth);
    if (app.got_subcommand(translate))
      return run_translate(out, mode, formula, var, fresh);
    if (app.got_subcommand(algebra))
      return run_algebra(out, alg_space, alg_algebra, dual, alg_formula,
                         budget);
    if (app.got_subcommand(chi)) return run_chi_n(out, max_n, budget);
    return run_selftest(out);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

#include "topomodal/selftest.hpp"

#include <array>
#include <utility>

#include "topomodal/algebra.hpp"
#include "topomodal/bisim.hpp"
#include "topomodal/catalog.hpp"
#include "topomodal/errors.hpp"
#include "topomodal/generators.hpp"
#include "topomodal/props.hpp"
#include "topomodal/semantics.hpp"
#include "topomodal/translate.hpp"

namespace topomodal {

namespace {

constexpr int kCorpusMax = 4;
constexpr std::array<int, 4> kCorpusCounts{1, 4, 29, 355};

const std::vector<Space>& corpus() {
  static const std::vector<Space> all = [] {
    std::vector<Space> out;
    for (int n = 1; n <= kCorpusMax; ++n)
      for (auto& s : all_spaces(n)) out.push_back(std::move(s));
    return out;
  }();
  return all;
}

std::string plural(long k, const std::string& noun) {
  if (k == 1) return "1 " + noun;
  const bool es = noun.size() >= 2 && noun.compare(noun.size() - 2, 2, "ch") == 0;
  return std::to_string(k) + " " + noun + (es ? "es" : "s");
}

// Zero-mismatch sweep of one axiom against one property checker.
long definability_mismatches(const std::string& axiom, const std::string& tag) {
  const ModalPtr f = named_modal_formula(axiom);
  long bad = 0;
  for (const Space& s : corpus())
    if (valid_on_space(s, f) != check_property(s, tag)) ++bad;
  return bad;
}

CriterionResult c1_grz_defines_hi() {
  bool counts_ok = true;
  for (int n = 1; n <= kCorpusMax; ++n) {
    const std::size_t expected = std::size_t(kCorpusCounts[n - 1]);
    if (all_spaces(n).size() != expected) counts_ok = false;
    if (n <= 4 && all_spaces_by_family_filter(n).size() != expected)
      counts_ok = false;
  }
  const long bad = definability_mismatches("grz", "hi");
  return {1, "Grz axiom defines hereditary irresolvability",
          counts_ok && bad == 0,
          "corpus 1/4/29/355 twice-counted, " + plural(bad, "mismatch") +
              " over " + plural(long(corpus().size()), "space")};
}

CriterionResult c2_connectedness() {
  const long bad = definability_mismatches("connectedness", "connected");
  return {2, "global-modality axiom defines connectedness", bad == 0,
          plural(bad, "mismatch") + " over " +
              plural(long(corpus().size()), "space")};
}

CriterionResult c3_hybrid_and_difference() {
  const std::pair<const char*, const char*> pairs[] = {
      {"t1-nom", "t1"}, {"t0-at", "t0"}, {"dii-nom", "dense_in_itself"},
      {"t0-d", "t0"},   {"t1-d", "t1"},  {"dii-d", "dense_in_itself"},
  };
  long bad = 0;
  for (const auto& [axiom, tag] : pairs)
    bad += definability_mismatches(axiom, tag);
  return {3, "hybrid and difference-modality definitions", bad == 0,
          plural(bad, "mismatch") + " across 6 axiom/property pairs"};
}

CriterionResult c4_preservation() {
  Rng rng(40001);
  long sum_bad = 0, sub_bad = 0, img_bad = 0;
  long sub_informative = 0, img_informative = 0, img_proper = 0;

  for (int t = 0; t < 1000; ++t) {
    const Space a = random_space(rng, 1 + rng.below(4));
    const Space b = random_space(rng, 1 + rng.below(4));
    const ModalPtr f =
        random_modal_formula(rng, Language::ML, 1 + rng.below(6), 2, 0);
    const bool whole = valid_on_space(sum({a, b}), f);
    const bool parts = valid_on_space(a, f) && valid_on_space(b, f);
    if (whole != parts) ++sum_bad;
  }

  for (int t = 0; t < 1000; ++t) {
    const Space s = random_space(rng, 1 + rng.below(4));
    const auto& opens = s.opens();
    PointSet o = opens[rng.below(int(opens.size()))];
    if (o == 0) o = s.points();
    const bool hybrid = t % 2 == 1;
    const ModalPtr f = random_modal_formula(
        rng, hybrid ? Language::HAt : Language::ML, 1 + rng.below(6), 2,
        hybrid ? 2 : 0);
    if (!valid_on_space(s, f)) continue;
    ++sub_informative;
    if (!valid_on_space(open_subspace(s, o), f)) ++sub_bad;
  }

  for (int t = 0; t < 1000; ++t) {
    const Space s = random_space(rng, 1 + rng.below(4));
    const int n = s.point_count();
    const int m = 1 + rng.below(n);
    // Random surjection with the finest topology making it continuous;
    // keep it only when it is also open, otherwise fall back to the
    // identity, which is always interior.
    std::vector<int> map(n);
    Space target = s;
    bool found = false;
    for (int attempt = 0; attempt < 40 && !found; ++attempt) {
      PointSet hit = 0;
      for (int x = 0; x < n; ++x) {
        map[x] = rng.below(m);
        hit |= PointSet{1} << map[x];
      }
      if (hit != full_set(m)) continue;
      std::vector<PointSet> opens;
      for (PointSet bset = 0; bset <= full_set(m); ++bset) {
        PointSet pre = 0;
        for (int x = 0; x < n; ++x)
          if (contains(bset, map[x])) pre |= PointSet{1} << x;
        if (s.is_open(pre)) opens.push_back(bset);
      }
      const Space candidate(m, std::move(opens));
      if (is_interior_map(PointMap(s, candidate, map))) {
        target = candidate;
        found = true;
      }
    }
    if (!found) {
      for (int x = 0; x < n; ++x) map[x] = x;
      target = s;
    } else if (m < n) {
      ++img_proper;
    }
    const bool global = t % 2 == 1;
    const ModalPtr f = random_modal_formula(
        rng, global ? Language::ME : Language::ML, 1 + rng.below(6), 2, 0);
    if (!valid_on_space(s, f)) continue;
    ++img_informative;
    if (!valid_on_space(target, f)) ++img_bad;
  }

  return {4, "validity survives sums, open subspaces, interior images",
          sum_bad + sub_bad + img_bad == 0,
          "1000 trials each: " + plural(sum_bad, "sum violation") + ", " +
              plural(sub_bad, "subspace violation") + " (" +
              std::to_string(sub_informative) + " informative), " +
              plural(img_bad, "image violation") + " (" +
              std::to_string(img_informative) + " informative, " +
              std::to_string(img_proper) + " proper collapses)"};
}

CriterionResult c5_alexandroff_extension() {
  long hom_bad = 0;
  for (const Space& s : corpus()) {
    const auto [ext, pi] = alexandroff_extension(s);
    if (!is_homeomorphic(ext, s)) ++hom_bad;
    (void)pi;
  }

  Rng rng(50001);
  constexpr Language tiers[] = {Language::ML,  Language::ME, Language::MD,
                                Language::HAt, Language::HE, Language::HED};
  long truth_bad = 0;
  for (int t = 0; t < 100; ++t) {
    const Space s = random_space(rng, 1 + rng.below(4));
    const Model m = random_model_on(rng, s, 2, 1);
    const auto [ext, pi] = alexandroff_extension(s);
    std::map<int, PointSet> props, nominals;
    for (const auto& [k, v] : m.props()) props[k] = pi.image(v);
    for (const auto& [k, v] : m.nominals()) nominals[k] = pi.image(v);
    const Model lifted(ext, props, nominals);
    const ModalPtr f =
        random_modal_formula(rng, tiers[t % 6], 1 + rng.below(7), 2, 1);
    for (int w = 0; w < s.point_count(); ++w)
      if (eval_modal(m, w, f) != eval_modal(lifted, pi.map[w], f)) ++truth_bad;
  }
  return {5, "Alexandroff extension is faithful", hom_bad + truth_bad == 0,
          plural(hom_bad, "non-homeomorphic extension") + ", " +
              plural(truth_bad, "truth-lemma violation") + " in 100 models"};
}

CriterionResult c6_translations() {
  Rng rng(60001);
  long st_bad = 0, ext_bad = 0, ht_bad = 0, fragment_bad = 0;

  for (int t = 0; t < 1000; ++t) {
    const Space s = random_space(rng, 1 + rng.below(4));
    const Model m = random_model_on(rng, s, 2, 0);
    const ModalPtr f =
        random_modal_formula(rng, Language::ML, 1 + rng.below(7), 2, 0);
    const FoPtr g = st(f);
    if (!lt_check(g) || !li_check(g)) ++fragment_bad;
    for (int w = 0; w < s.point_count(); ++w) {
      Assignment asg;
      asg.points[0] = w;
      if (eval_modal(m, w, f) != eval_fo(m, g, asg)) ++st_bad;
    }
  }

  constexpr Language tiers[] = {Language::ML, Language::ME, Language::HAt,
                                Language::HE, Language::HED};
  for (int t = 0; t < 1000; ++t) {
    const Space s = random_space(rng, 1 + rng.below(4));
    const Model m = random_model_on(rng, s, 2, 2);
    const ModalPtr f =
        random_modal_formula(rng, tiers[t % 5], 1 + rng.below(7), 2, 2);
    int x = 0;
    while (modal_symbols(f).vars.count(x)) ++x;
    const FoPtr g = st_ext(f, x);
    if (!lt_check(g) || !li_check(g)) ++fragment_bad;
    for (int w = 0; w < s.point_count(); ++w) {
      Assignment asg = nominal_assignment(m);
      asg.points[x] = w;
      if (eval_modal(m, w, f) != eval_fo(m, g, asg)) ++ext_bad;
    }
  }

  for (int t = 0; t < 1000; ++t) {
    const Space s = random_space(rng, 1 + rng.below(4));
    const Model m = random_model_on(rng, s, 2, 2);
    const FoPtr f = random_li_formula(rng, 1 + rng.below(7), 2, 2);
    const ModalPtr h = ht(f);
    for (int w = 0; w < s.point_count(); ++w) {
      Assignment asg = nominal_assignment(m);
      asg.points[0] = w;
      if (eval_fo(m, f, asg) != eval_modal(m, w, h)) ++ht_bad;
    }
  }

  return {6, "translations preserve truth and land in their fragments",
          st_bad + ext_bad + ht_bad + fragment_bad == 0,
          "1000 trials each: " + plural(st_bad, "standard violation") + ", " +
              plural(ext_bad, "extended violation") + ", " +
              plural(ht_bad, "hybrid violation") + ", " +
              plural(fragment_bad, "fragment failure")};
}

CriterionResult c7_hennessy_milner() {
  std::vector<Model> models;
  for (int n = 1; n <= 3; ++n)
    for (const Space& s : all_spaces(n))
      for (PointSet v = 0; v <= s.points(); ++v)
        models.push_back(Model(s, {{0, v}}));

  long oracle_bad = 0, hm_bad = 0, pairs = 0;
  for (const Model& m1 : models)
    for (const Model& m2 : models) {
      const PairRelation z = greatest_topo_bisimulation(m1, m2);
      if (z != greatest_kripke_bisimulation(m1, m2)) ++oracle_bad;
      for (int w1 = 0; w1 < m1.space().point_count(); ++w1)
        for (int w2 = 0; w2 < m2.space().point_count(); ++w2) {
          ++pairs;
          const bool related = z.at(w1, w2);
          const bool separated =
              distinguishing_formula(m1, w1, m2, w2, 3).has_value();
          if (related == separated) ++hm_bad;
        }
    }
  return {7, "greatest bisimulation matches both oracles",
          oracle_bad + hm_bad == 0,
          std::to_string(models.size()) + " models, " +
              plural(pairs, "pointed pair") + ": " +
              plural(oracle_bad, "preorder-oracle disagreement") + ", " +
              plural(hm_bad, "formula-oracle disagreement")};
}

CriterionResult c8_base_invariance() {
  Rng rng(80001);
  std::vector<FoPtr> images;
  for (int i = 0; i < 200; ++i)
    images.push_back(
        st(random_modal_formula(rng, Language::ML, 1 + rng.below(7), 2, 0)));

  long bad = 0;
  for (const Space& s : corpus()) {
    const Base base = minimal_neighborhood_base(s);
    const PointSet full = s.points();
    for (const FoPtr& g : images) {
      const Model m(s, {{0, PointSet(rng.below(int(full) + 1))},
                        {1, PointSet(rng.below(int(full) + 1))}});
      for (int w = 0; w < s.point_count(); ++w) {
        Assignment topological;
        topological.points[0] = w;
        Assignment based = topological;
        based.basoid = base;
        if (eval_fo(m, g, topological) != eval_fo(m, g, based)) ++bad;
      }
    }
  }

  // The designated sentence outside the invariant fragment must be able
  // to tell a base from the topology it generates.
  const Space discrete2(2, {0b00, 0b01, 0b10, 0b11});
  const FoPtr witness = named_fo_formula("non-lt-witness");
  const Model m(discrete2, {});
  Assignment topological;
  topological.points[0] = 0;
  Assignment based = topological;
  based.basoid = minimal_neighborhood_base(discrete2);
  const bool separated =
      eval_fo(m, witness, topological) != eval_fo(m, witness, based);

  return {8, "translated formulas cannot see the choice of base",
          bad == 0 && separated,
          plural(bad, "scope mismatch") + " over 200 images x " +
              plural(long(corpus().size()), "space") + "; witness " +
              std::string(separated ? "separates" : "fails to separate") +
              " the scopes"};
}

CriterionResult c9_order_sentence() {
  const FoPtr chi = named_fo_formula("chi-n");
  long sat = 0;
  for (int n = 1; n <= 4; ++n)
    if (satisfiable_on_size(chi, n).has_value()) ++sat;

  const FoPtr order = named_fo_formula("spec-order");
  long order_bad = 0;
  for (const Space& s : corpus()) {
    const Model m(s, {});
    for (int x = 0; x < s.point_count(); ++x)
      for (int y = 0; y < s.point_count(); ++y) {
        Assignment asg;
        asg.points = {{0, x}, {1, y}};
        if (eval_fo(m, order, asg) !=
            contains(s.closure(PointSet{1} << y), x))
          ++order_bad;
      }
  }
  return {9, "order sentence has no finite models; specialization matches",
          sat == 0 && order_bad == 0,
          plural(sat, "satisfiable size") + " up to 4, " +
              plural(order_bad, "order mismatch") + " on the corpus"};
}

CriterionResult c10_duality() {
  long round_bad = 0, axiom_bad = 0;
  for (const Space& s : corpus()) {
    const InteriorAlgebra b = complex_algebra(s);
    if (check_interior_algebra(b).has_value()) ++axiom_bad;
    if (!is_homeomorphic(dual_space(b), s)) ++round_bad;
  }

  Rng rng(100001);
  long transfer_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const Space s = random_space(rng, 1 + rng.below(4));
    const ModalPtr f =
        random_modal_formula(rng, Language::ML, 1 + rng.below(7), 2, 0);
    if (equation_valid(complex_algebra(s), f) != valid_on_space(s, f))
      ++transfer_bad;
  }
  return {10, "finite duality and validity transfer",
          round_bad + axiom_bad + transfer_bad == 0,
          plural(round_bad, "round-trip failure") + ", " +
              plural(axiom_bad, "axiom failure") + ", " +
              plural(transfer_bad, "transfer mismatch") + " in 1000 trials"};
}

}  // namespace

CriterionResult run_criterion(int number) {
  CriterionResult (*runners[])() = {
      c1_grz_defines_hi, c2_connectedness,         c3_hybrid_and_difference,
      c4_preservation,   c5_alexandroff_extension, c6_translations,
      c7_hennessy_milner, c8_base_invariance,      c9_order_sentence,
      c10_duality};
  if (number < 1 || number > 10)
    throw ValidationError("criterion number must be in 1..10, got " +
                          std::to_string(number));
  try {
    return runners[number - 1]();
  } catch (const std::exception& e) {
    return {number, "criterion aborted", false, e.what()};
  }
}

std::vector<CriterionResult> run_acceptance_suite() {
  std::vector<CriterionResult> out;
  for (int k = 1; k <= 10; ++k) out.push_back(run_criterion(k));
  return out;
}

}  // namespace topomodal

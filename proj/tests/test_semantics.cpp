#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "topomodal/generators.hpp"
#include "topomodal/semantics.hpp"
#include "topomodal/translate.hpp"

using namespace topomodal;

namespace {

Space sierpinski() { return Space(2, {0b00, 0b01, 0b11}); }
Space trivial2() { return Space(2, {0b00, 0b11}); }
Space discrete2() { return Space(2, {0b00, 0b01, 0b10, 0b11}); }

}  // namespace

TEST_CASE("model construction checks its valuation") {
  CHECK_THROWS_WITH_AS(Model(sierpinski(), {}, {{0, 0b11}}),
                       doctest::Contains("exactly one point"), ValidationError);
  CHECK_THROWS_WITH_AS(Model(sierpinski(), {}, {{0, 0b00}}),
                       doctest::Contains("exactly one point"), ValidationError);
  CHECK_THROWS_AS(Model(sierpinski(), {{0, 0b100}}, {}), ValidationError);
  CHECK_THROWS_AS(Model(sierpinski(), {{-1, 0b01}}, {}), ValidationError);

  Model m(sierpinski(), {{0, 0b01}}, {{0, 0b10}});
  CHECK(m.prop_value(0) == 0b01);
  CHECK(m.nominal_point(0) == 1);
  CHECK_THROWS_WITH_AS(m.prop_value(1), doctest::Contains("p1"), EvalError);
  CHECK_THROWS_WITH_AS(m.nominal_point(3), doctest::Contains("i3"), EvalError);
}

TEST_CASE("box is interior and diamond is closure") {
  Model m(sierpinski(), {{0, 0b01}, {1, 0b10}});
  CHECK(truth_set(m, parse_modal("p0")) == 0b01);
  CHECK(truth_set(m, parse_modal("[]p0")) == 0b01);   // {0} is open
  CHECK(truth_set(m, parse_modal("<>p0")) == 0b11);   // but dense: cl{0} = X
  CHECK(truth_set(m, parse_modal("[]p1")) == 0b00);   // int{1} is empty
  CHECK(truth_set(m, parse_modal("<>p1")) == 0b10);   // {1} is closed
  CHECK(truth_set(m, parse_modal("~[]~p1")) == 0b10);
  CHECK(truth_set(m, parse_modal("p0 | p1")) == 0b11);
  CHECK(truth_set(m, parse_modal("p0 -> p1")) == 0b10);
  CHECK(truth_set(m, parse_modal("p0 <-> p1")) == 0b00);
  CHECK(truth_set(m, parse_modal("T")) == 0b11);
  CHECK(truth_set(m, parse_modal("F")) == 0b00);
  CHECK(eval_modal(m, 1, parse_modal("<>p0")));
  CHECK_FALSE(eval_modal(m, 1, parse_modal("[]p0")));
}

TEST_CASE("global and difference modalities") {
  Model m(trivial2(), {{0, 0b10}});
  CHECK(truth_set(m, parse_modal("E p0")) == 0b11);
  CHECK(truth_set(m, parse_modal("A p0")) == 0b00);
  CHECK(truth_set(m, parse_modal("E F")) == 0b00);
  CHECK(truth_set(m, parse_modal("A T")) == 0b11);
  // D: true where the letter holds somewhere else
  CHECK(truth_set(m, parse_modal("D p0")) == 0b01);
  CHECK(truth_set(m, parse_modal("D T")) == 0b11);
  CHECK(truth_set(m, parse_modal("D F")) == 0b00);
  Model two(trivial2(), {{0, 0b11}});
  CHECK(truth_set(two, parse_modal("D p0")) == 0b11);

  // E decomposes though D: E phi == phi | D phi on truth sets
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Model r = random_model(rng, 1 + rng.below(4), 2, 0);
    ModalPtr f = random_modal_formula(rng, Language::ML, 5, 2, 0);
    CHECK(truth_set(r, mf::e(f)) == truth_set(r, mf::disj(f, mf::d(f))));
    CHECK(truth_set(r, mf::a(f)) ==
          truth_set(r, mf::negate(mf::e(mf::negate(f)))));
    CHECK(truth_set(r, mf::diamond(f)) ==
          truth_set(r, mf::negate(mf::box(mf::negate(f)))));
  }
}

TEST_CASE("hybrid machinery: nominals, at, down") {
  Model m(sierpinski(), {{0, 0b10}}, {{0, 0b01}, {1, 0b10}});
  CHECK(truth_set(m, parse_modal("i0")) == 0b01);
  CHECK(truth_set(m, parse_modal("@i1 p0")) == 0b11);
  CHECK(truth_set(m, parse_modal("@i0 p0")) == 0b00);
  CHECK(truth_set(m, parse_modal("@i0 <>i1")) == 0b00);  // 0 is outside cl{1} = {1}
  CHECK(truth_set(m, parse_modal("@i1 <>i0")) == 0b11);  // 1 is inside cl{0} = X

  // down binds the evaluation point: !x0.[]x0 holds where {w} is open
  Model bare(sierpinski(), {});
  CHECK(truth_set(bare, parse_modal("!x0.[]x0")) == 0b01);
  CHECK(eval_modal(bare, 0, parse_modal("!x0.[]x0")));
  CHECK_FALSE(eval_modal(bare, 1, parse_modal("!x0.[]x0")));
  CHECK(truth_set(bare, parse_modal("!x0.@x0 x0")) == 0b11);
  CHECK(truth_set(bare, parse_modal("!x0.<>~x0")) == 0b10);  // dense in itself at 1

  // free variables need a binding from the assignment
  CHECK_THROWS_AS(truth_set(bare, parse_modal("x0")), EvalError);
  Assignment g;
  g.points[0] = 1;
  CHECK(truth_set(bare, parse_modal("x0"), g) == 0b10);
  CHECK(truth_set(bare, parse_modal("@x0 T"), g) == 0b11);
}

TEST_CASE("truth respects the topology laws") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    Model m = random_model(rng, 1 + rng.below(4), 2, 1);
    const Space& s = m.space();
    ModalPtr f = random_modal_formula(rng, Language::HE, 5, 2, 1);
    PointSet a = truth_set(m, f);
    CHECK(truth_set(m, mf::box(f)) == s.interior(a));
    CHECK(truth_set(m, mf::diamond(f)) == s.closure(a));
    CHECK(s.is_open(truth_set(m, mf::box(f))));
    CHECK(s.is_closed(truth_set(m, mf::diamond(f))));
    // 4 and T together: box is idempotent and deflationary on truth sets
    CHECK(truth_set(m, mf::box(mf::box(f))) == truth_set(m, mf::box(f)));
    CHECK((truth_set(m, mf::box(f)) & a) == truth_set(m, mf::box(f)));
  }
}

TEST_CASE("validity sweep order and first counterexamples") {
  // reflexivity is valid everywhere
  CHECK(valid_on_space(sierpinski(), parse_modal("[]p0 -> p0")));
  CHECK(valid_on_space(discrete2(), parse_modal("[]p0 -> p0")));

  // the grzegorczyk sentence fails on the trivial 2-point space; the sweep
  // finds nu(p0) = {0}, w = 0 first
  ModalPtr grz = parse_modal("[]([](p0 -> []p0) -> p0) -> []p0");
  CHECK(valid_on_space(sierpinski(), grz));
  auto cex = validity_counterexample(trivial2(), grz);
  REQUIRE(cex.has_value());
  CHECK(cex->props == std::map<int, PointSet>{{0, 0b01}});
  CHECK(cex->nominals.empty());
  CHECK(cex->point == 0);

  // the connectedness sentence fails exactly on disconnected spaces
  ModalPtr conn = parse_modal("A([]p0 | []~p0) -> A p0 | A ~p0");
  CHECK(valid_on_space(trivial2(), conn));
  CHECK(valid_on_space(sierpinski(), conn));
  auto dex = validity_counterexample(discrete2(), conn);
  REQUIRE(dex.has_value());
  CHECK(dex->props == std::map<int, PointSet>{{0, 0b01}});
  CHECK(dex->point == 0);

  // nominal letters sweep over singletons only
  ModalPtr t1 = parse_modal("<>i0 -> i0");
  CHECK(valid_on_space(discrete2(), t1));
  auto nex = validity_counterexample(trivial2(), t1);
  REQUIRE(nex.has_value());
  CHECK(nex->nominals == std::map<int, PointSet>{{0, 0b01}});
  CHECK(nex->point == 1);  // 1 is in cl{0} but is not 0

  CHECK_THROWS_AS(validity_counterexample(trivial2(), parse_modal("x0")),
                  ValidationError);  // open formulas have no validity sweep
}

TEST_CASE("validity guard") {
  Rng rng(1);
  Space s = random_space(rng, 5);
  ModalPtr five = parse_modal("p0 & p1 & p2 & p3 & p4");
  CHECK_THROWS_WITH_AS(validity_counterexample(s, five),
                       doctest::Contains("budget"), GuardError);
  CHECK_NOTHROW(validity_counterexample(s, five, 25));
  Space tiny = random_space(rng, 4);
  CHECK_NOTHROW(validity_counterexample(tiny, five));  // 4 * 5 <= 24
}

TEST_CASE("first-order evaluation") {
  Model m(sierpinski(), {{0, 0b01}});
  Assignment g;
  g.points[0] = 0;
  CHECK(eval_fo(m, parse_fo("(P p0 x0)"), g));
  CHECK(eval_fo(m, parse_fo("(= x0 x0)"), g));
  CHECK(eval_fo(m, parse_fo("(ex-pt x1 (not (= x1 x0)))"), g));
  CHECK_FALSE(eval_fo(m, parse_fo("(all-pt x1 (= x1 x0))"), g));
  CHECK(eval_fo(m, parse_fo("(ex-op U0 (and (in x0 U0) (all-pt x1 (implies (in x1 U0) (P p0 x1)))))"), g));
  g.points[0] = 1;
  CHECK_FALSE(eval_fo(m, parse_fo("(ex-op U0 (and (in x0 U0) (all-pt x1 (implies (in x1 U0) (P p0 x1)))))"), g));
  // every open containing 1 also contains 0
  CHECK(eval_fo(m, parse_fo("(all-op U0 (implies (in x1 U0) (in x0 U0)))"),
                Assignment{{{0, 0}, {1, 1}}, {}, {}}));
  CHECK_FALSE(eval_fo(m, parse_fo("(all-op U0 (implies (in x1 U0) (in x0 U0)))"),
                      Assignment{{{0, 1}, {1, 0}}, {}, {}}));
  // open-sort equality and explicit open bindings
  Assignment h;
  h.opens[0] = 0b01;
  h.opens[1] = 0b01;
  CHECK(eval_fo(m, parse_fo("(=o U0 U1)"), h));
  h.opens[1] = 0b11;
  CHECK_FALSE(eval_fo(m, parse_fo("(=o U0 U1)"), h));

  CHECK_THROWS_AS(eval_fo(m, parse_fo("(P p0 x0)")), EvalError);
  CHECK_THROWS_AS(eval_fo(m, parse_fo("(in x0 U0)"), g), EvalError);
  CHECK_THROWS_AS(eval_fo(m, parse_fo("(P p7 x0)"), g), EvalError);
}

TEST_CASE("open quantifiers respect the basoid scope") {
  // a base family always carries the empty set, so the minimal-neighborhood
  // base of the sierpinski space is {{}, {0}, {0,1}}
  Base b = minimal_neighborhood_base(sierpinski());
  CHECK(b.sets == std::vector<PointSet>{0b00, 0b01, 0b11});

  // the two-point discrimination sentence: some open around x0 holds another
  // point.  True over the full discrete topology (take X itself), false over
  // the base of singletons.
  Model m(discrete2(), {});
  FoPtr witness = parse_fo(
      "(ex-op U0 (and (in x0 U0) (ex-pt x1 (and (not (= x1 x0)) (in x1 U0)))))");
  Assignment g;
  g.points[0] = 0;
  CHECK(eval_fo(m, witness, g) == true);
  g.basoid = Base{2, {0b00, 0b01, 0b10}};
  CHECK(eval_fo(m, witness, g) == false);

  // a pre-assigned open must lie in the active scope
  Model s(sierpinski(), {});
  Assignment h;
  h.opens[0] = 0b10;  // {1} is not open
  CHECK_THROWS_WITH_AS(eval_fo(s, parse_fo("(in x0 U0)"), h),
                       doctest::Contains("outside the active scope"), ValidationError);
  h.basoid = minimal_neighborhood_base(s.space());
  CHECK_THROWS_AS(eval_fo(s, parse_fo("(in x0 U0)"), h), ValidationError);

  // mismatched or malformed basoids are rejected
  Assignment bad;
  bad.basoid = Base{3, {0b000, 0b111}};
  CHECK_THROWS_AS(eval_fo(s, parse_fo("top"), bad), ValidationError);
  bad.basoid = Base{2, {0b01, 0b11}};  // base families carry the empty set
  CHECK_THROWS_AS(eval_fo(s, parse_fo("top"), bad), ValidationError);
}

TEST_CASE("modal validity is preserved by sums, open subspaces and images") {
  Rng rng(37);
  int sums = 0, subs = 0, imgs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Space a = random_space(rng, 1 + rng.below(3));
    Space b = random_space(rng, 1 + rng.below(3));
    ModalPtr f = random_modal_formula(rng, Language::ML, 4, 2, 0);
    bool va = valid_on_space(a, f);
    bool vb = valid_on_space(b, f);
    CHECK(valid_on_space(sum({a, b}), f) == (va && vb));
    if (va && vb) ++sums;

    if (va) {
      // every open subspace inherits validity; hybrid sentences do too
      for (PointSet o : a.opens()) {
        if (o == 0) continue;
        CHECK(valid_on_space(open_subspace(a, o), f));
        ++subs;
      }
    }
  }
  // surjective interior images preserve basic and E/A validity
  for (int trial = 0; trial < 200; ++trial) {
    Space a = random_space(rng, 1 + rng.below(3));
    Space b = random_space(rng, 1 + rng.below(3));
    int n = a.point_count(), k = b.point_count();
    std::vector<int> map(n, 0);
    for (bool carried = true; carried;) {
      PointMap pm(a, b, map);
      if (pm.is_surjective() && is_interior_map(pm)) {
        ModalPtr f = random_modal_formula(rng, Language::ME, 4, 2, 0);
        if (valid_on_space(a, f)) {
          CHECK(valid_on_space(b, f));
          ++imgs;
        }
      }
      carried = false;
      for (int i = 0; i < n && !carried; ++i) {
        if (++map[i] < k) carried = true;
        else map[i] = 0;
      }
    }
  }
  CHECK(sums > 20);
  CHECK(subs > 50);
  CHECK(imgs > 20);
}

TEST_CASE("satisfiability search over all spaces of a size") {
  auto w = satisfiable_on_size(parse_modal("<>p0 & ~p0"), 2);
  REQUIRE(w.has_value());
  CHECK(w->space.point_count() == 2);
  CHECK(w->point.has_value());
  Model m(w->space, w->props, w->nominals);
  CHECK(eval_modal(m, *w->point, parse_modal("<>p0 & ~p0")));
  CHECK_FALSE(satisfiable_on_size(parse_modal("<>p0 & ~p0"), 1).has_value());
  CHECK_FALSE(satisfiable_on_size(parse_modal("p0 & ~p0"), 3).has_value());

  // first-order version binds free variables in the witness
  auto v = satisfiable_on_size(parse_fo("(and (P p0 x0) (not (P p0 x1)))"), 2);
  REQUIRE(v.has_value());
  Model vm(v->space, v->props, v->nominals);
  Assignment g{v->point_vars, v->open_vars, {}};
  CHECK(eval_fo(vm, parse_fo("(and (P p0 x0) (not (P p0 x1)))"), g));
  CHECK_FALSE(satisfiable_on_size(parse_fo("(not (= x0 x0))"), 3).has_value());

  // an open-variable witness
  auto u = satisfiable_on_size(parse_fo("(and (in x0 U0) (not (in x1 U0)))"), 2);
  REQUIRE(u.has_value());
  CHECK(u->open_vars.count(0));

  CHECK_THROWS_AS(satisfiable_on_size(parse_modal("p0"), 30), GuardError);
}

TEST_CASE("the standard translation agrees with the modal evaluator") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    Model m = random_model(rng, 1 + rng.below(4), 2, 0);
    ModalPtr f = random_modal_formula(rng, Language::ML, 5, 2, 0);
    FoPtr tf = st(f);
    int w = rng.below(m.space().point_count());
    Assignment g;
    g.points[0] = w;
    CHECK(eval_modal(m, w, f) == eval_fo(m, tf, g));
  }
}

TEST_CASE("alexandroff extension satisfies the truth lemma") {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    Model m = random_model(rng, 1 + rng.below(3), 2, 1);
    auto [ext, pi] = alexandroff_extension(m.space());
    std::map<int, PointSet> props, noms;
    for (const auto& [k, v] : m.props()) props[k] = pi.image(v);
    for (const auto& [k, v] : m.nominals()) noms[k] = pi.image(v);
    Model em(ext, props, noms);
    ModalPtr f = random_modal_formula(rng, Language::HE, 5, 2, 1);
    for (int w = 0; w < m.space().point_count(); ++w)
      CHECK(eval_modal(m, w, f) == eval_modal(em, pi.map[w], f));
  }
}

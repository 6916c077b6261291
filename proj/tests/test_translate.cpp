#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "topomodal/generators.hpp"
#include "topomodal/semantics.hpp"
#include "topomodal/translate.hpp"

using namespace topomodal;

TEST_CASE("standard translation, frozen shapes") {
  auto tr = [](const char* s) { return print_fo(st(parse_modal(s))); };
  CHECK(tr("[]p0") ==
        "(ex-op U0 (and (in x0 U0) (all-pt x1 (implies (in x1 U0) (P p0 x1)))))");
  CHECK(tr("<>p0") ==
        "(all-op U0 (implies (in x0 U0) (ex-pt x1 (and (in x1 U0) (P p0 x1)))))");
  CHECK(tr("p0") == "(P p0 x0)");
  CHECK(tr("T") == "top");
  CHECK(tr("~p0") == "(not (P p0 x0))");
  CHECK(tr("p0 -> p1") == "(implies (P p0 x0) (P p1 x0))");
  CHECK(tr("p0 <-> p1") == "(iff (P p0 x0) (P p1 x0))");
  // economy: two point variables alternate and the open variable is reused
  CHECK(tr("[][]p0") ==
        "(ex-op U0 (and (in x0 U0) (all-pt x1 (implies (in x1 U0) "
        "(ex-op U0 (and (in x1 U0) (all-pt x0 (implies (in x0 U0) (P p0 x0)))))))))");
  // a different designated variable picks the smallest partner
  CHECK(print_fo(st(parse_modal("[]p0"), 5)) ==
        "(ex-op U0 (and (in x5 U0) (all-pt x0 (implies (in x0 U0) (P p0 x0)))))");
  // fresh mode numbers every binder separately
  CHECK(print_fo(st(parse_modal("[][]p0"), 0, true)) ==
        "(ex-op U0 (and (in x0 U0) (all-pt x2 (implies (in x2 U0) "
        "(ex-op U1 (and (in x2 U1) (all-pt x3 (implies (in x3 U1) (P p0 x3)))))))))");

  CHECK_THROWS_AS(st(parse_modal("E p0")), ValidationError);
  CHECK_THROWS_AS(st(parse_modal("i0")), ValidationError);
  CHECK_THROWS_AS(st(parse_modal("D p0")), ValidationError);
  CHECK_THROWS_AS(st(parse_modal("p0"), kNominalVarBase), ValidationError);
}

TEST_CASE("extended translation, frozen shapes") {
  auto tr = [](const char* s) { return print_fo(st_ext(parse_modal(s))); };
  // nominals compile to reserved constants
  CHECK(tr("i0") == "(= x0 x1000)");
  CHECK(tr("@i2 p0") == "(ex-pt x0 (and (= x0 x1002) (P p0 x0)))");
  CHECK(tr("E p0") == "(ex-pt x0 (P p0 x0))");
  CHECK(tr("A p0") == "(all-pt x0 (P p0 x0))");
  CHECK(tr("@i0 <>i1") ==
        "(ex-pt x0 (and (= x0 x1000) (all-op U0 (implies (in x0 U0) "
        "(ex-pt x1 (and (in x1 U0) (= x1 x1001)))))))");
  // down binds its own variable to the current one
  CHECK(print_fo(st_ext(parse_modal("E !x0.[]x0"), 1)) ==
        "(ex-pt x1 (ex-pt x0 (and (= x0 x1) (ex-op U0 (and (in x1 U0) "
        "(all-pt x2 (implies (in x2 U0) (= x2 x0))))))))");
  CHECK(print_fo(st_ext(parse_modal("!x3.@x3 p0"), 0)) ==
        "(ex-pt x3 (and (= x3 x0) (ex-pt x0 (and (= x0 x3) (P p0 x0)))))");

  CHECK_THROWS_AS(st_ext(parse_modal("D p0")), ValidationError);
  CHECK_THROWS_AS(st_ext(parse_modal("x0")), ValidationError);       // free variable
  CHECK_THROWS_AS(st_ext(parse_modal("E !x0.[]x0")), ValidationError);  // x collides
  CHECK_THROWS_AS(st_ext(parse_modal("p0"), -1), ValidationError);
}

TEST_CASE("hybrid translation, frozen shapes") {
  CHECK(print_modal(ht(parse_fo("(= x0 x0)"), 0)) == "!x0.@x0 x0");
  CHECK(print_modal(ht(parse_fo("(P p0 x0)"), 0)) == "!x0.@x0 p0");
  CHECK(print_modal(ht(parse_fo("(= x0 x1000)"), 0)) == "!x0.@x0 i0");
  CHECK(print_modal(ht(parse_fo("(= x1000 x0)"), 0)) == "!x0.@i0 x0");
  CHECK(print_modal(ht(parse_fo(
            "(ex-op U0 (and (in x0 U0) (all-pt x1 (implies (in x1 U0) (P p0 x1)))))"),
            0)) == "!x0.@x0 []!x1.@x1 p0");
  CHECK(print_modal(ht(parse_fo(
            "(all-op U0 (implies (in x0 U0) (ex-pt x1 (and (in x1 U0) (P p0 x1)))))"),
            0)) == "!x0.@x0 <>!x1.@x1 p0");
  CHECK(print_modal(ht(parse_fo("(ex-pt x1 (not (= x1 x0)))"), 0)) ==
        "!x0.E !x1.~@x1 x0");
  CHECK(print_modal(ht(parse_fo("(all-pt x1 (P p0 x1))"), 0)) ==
        "!x0.~E !x1.~@x1 p0");

  CHECK_THROWS_AS(ht(parse_fo("(in x0 U0)"), 0), ValidationError);
  CHECK_THROWS_AS(ht(parse_fo("(ex-op U0 (all-pt x1 (in x1 U0)))"), 0),
                  ValidationError);
  CHECK_THROWS_AS(ht(parse_fo("(= x0 x1)"), 0), ValidationError);  // x1 free
  CHECK_THROWS_AS(ht(parse_fo("(= x0 x0)"), kNominalVarBase), ValidationError);
  CHECK_THROWS_AS(ht(parse_fo("(ex-pt x1000 (= x1000 x1000))"), 0), ValidationError);
}

TEST_CASE("standard translation preserves truth and lands in the fragment") {
  Rng rng(101);
  for (int trial = 0; trial < 1500; ++trial) {
    Model m = random_model(rng, 1 + rng.below(4), 2, 0);
    ModalPtr f = random_modal_formula(rng, Language::ML, 1 + trial % 8, 2, 0);
    FoPtr eco = st(f);
    FoPtr lux = st(f, 0, true);
    CHECK(lt_check(eco));
    CHECK(lt_check(lux));
    CHECK(li_check(eco));
    int w = rng.below(m.space().point_count());
    Assignment g;
    g.points[0] = w;
    const bool direct = eval_modal(m, w, f);
    CHECK(direct == eval_fo(m, eco, g));
    CHECK(direct == eval_fo(m, lux, g));
  }
}

TEST_CASE("extended translation preserves truth and lands in the fragment") {
  Rng rng(103);
  const Language tiers[] = {Language::HAt, Language::HE, Language::HED,
                            Language::ME};
  for (int trial = 0; trial < 1500; ++trial) {
    Model m = random_model(rng, 1 + rng.below(4), 2, 2);
    ModalPtr f =
        random_modal_formula(rng, tiers[trial % 4], 1 + trial % 8, 2, 2);
    int x = 0;
    while (modal_symbols(f).vars.count(x)) ++x;
    FoPtr t = st_ext(f, x);
    CHECK(li_check(t));
    int w = rng.below(m.space().point_count());
    Assignment g = nominal_assignment(m);
    g.points[x] = w;
    CHECK(eval_modal(m, w, f) == eval_fo(m, t, g));
  }
}

TEST_CASE("hybrid translation inverts the picture") {
  Rng rng(107);
  for (int trial = 0; trial < 1500; ++trial) {
    Model m = random_model(rng, 1 + rng.below(4), 2, 2);
    FoPtr a = random_li_formula(rng, 1 + trial % 8, 2, 2);
    ModalPtr h = ht(a, 0);
    CHECK(is_modal_sentence(h));
    Language l = language_of(h);
    CHECK((l == Language::ML || l == Language::HAt || l == Language::HE ||
           l == Language::HED));
    int w = rng.below(m.space().point_count());
    Assignment g = nominal_assignment(m);
    g.points[0] = w;
    CHECK(eval_fo(m, a, g) == eval_modal(m, w, h));
  }
}

TEST_CASE("round-trip through both translations keeps truth") {
  Rng rng(109);
  for (int trial = 0; trial < 800; ++trial) {
    Model m = random_model(rng, 1 + rng.below(4), 2, 2);
    ModalPtr f = random_modal_formula(rng, Language::HED, 1 + trial % 6, 2, 2);
    int x = 0;
    while (modal_symbols(f).vars.count(x)) ++x;
    ModalPtr back = ht(st_ext(f, x), x);
    int w = rng.below(m.space().point_count());
    Assignment g = nominal_assignment(m);
    CHECK(eval_modal(m, w, f, g) == eval_modal(m, w, back, g));
  }
}

TEST_CASE("constant bookkeeping") {
  CHECK(nominal_constant_var(0) == 1000);
  CHECK(nominal_constant_var(7) == 1007);
  CHECK(nominal_of_var(1007) == 7);
  CHECK_FALSE(nominal_of_var(999).has_value());
  Model m(Space(2, {0b00, 0b01, 0b11}), {}, {{0, 0b10}, {3, 0b01}});
  Assignment g = nominal_assignment(m);
  CHECK(g.points == std::map<int, int>{{1000, 1}, {1003, 0}});
  CHECK(g.opens.empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <topomodal/catalog.hpp>
#include <topomodal/props.hpp>
#include <topomodal/semantics.hpp>

using namespace topomodal;

namespace {

const Space kSierpinski(2, {0b00, 0b01, 0b11});
const Space kTrivial2(2, {0b00, 0b11});
const Space kDiscrete2(2, {0b00, 0b01, 0b10, 0b11});

}  // namespace

TEST_CASE("property tags are fixed") {
  CHECK(property_tags() ==
        std::vector<std::string>{"alexandroff", "compact", "connected",
                                 "dense_in_itself", "disconnected", "discrete",
                                 "hi", "irresolvable", "regular", "resolvable",
                                 "t0", "t1", "t2"});
  CHECK_THROWS_AS(check_property(kSierpinski, "t3"), ValidationError);
  CHECK_THROWS_AS(check_property(kSierpinski, "T0"), ValidationError);
}

TEST_CASE("separation axioms on the two-point spaces") {
  CHECK(check_property(kSierpinski, "t0"));
  CHECK_FALSE(check_property(kSierpinski, "t1"));
  CHECK_FALSE(check_property(kSierpinski, "t2"));
  CHECK_FALSE(check_property(kSierpinski, "regular"));

  CHECK_FALSE(check_property(kTrivial2, "t0"));
  // Trivially regular: the only neighborhood is X, whose closure is X.
  CHECK(check_property(kTrivial2, "regular"));

  CHECK(check_property(kDiscrete2, "t0"));
  CHECK(check_property(kDiscrete2, "t1"));
  CHECK(check_property(kDiscrete2, "t2"));
  CHECK(check_property(kDiscrete2, "discrete"));
}

TEST_CASE("connectedness and clopens") {
  CHECK(check_property(kTrivial2, "connected"));
  CHECK(check_property(kSierpinski, "connected"));
  CHECK_FALSE(check_property(kDiscrete2, "connected"));
  CHECK(check_property(kDiscrete2, "disconnected"));
  CHECK_FALSE(check_property(kTrivial2, "disconnected"));
}

TEST_CASE("density and resolvability") {
  CHECK(is_dense(kTrivial2, 0b01));
  CHECK(is_dense(kSierpinski, 0b01));       // closure of {0} is everything
  CHECK_FALSE(is_dense(kSierpinski, 0b10));  // {1} is closed
  CHECK_FALSE(is_dense(kSierpinski, 0));
  CHECK_THROWS_AS(is_dense(kSierpinski, 0b100), ValidationError);

  CHECK(check_property(kTrivial2, "resolvable"));
  CHECK_FALSE(check_property(kSierpinski, "resolvable"));
  CHECK(check_property(kSierpinski, "irresolvable"));

  CHECK_FALSE(check_property(kSierpinski, "dense_in_itself"));
  CHECK(check_property(kTrivial2, "dense_in_itself"));
  CHECK_FALSE(check_property(kDiscrete2, "dense_in_itself"));
}

TEST_CASE("hereditary irresolvability") {
  CHECK(check_property(kSierpinski, "hi"));
  CHECK_FALSE(check_property(kTrivial2, "hi"));
  CHECK(check_property(kDiscrete2, "hi"));

  // Chain space: opens are the up-sets of 0 < 1 < 2.
  const Space chain(3, {0b000, 0b100, 0b110, 0b111});
  CHECK(check_property(chain, "hi"));

  // A trivial subspace on {0,1} spoils an otherwise fine space.
  const Space halftrivial(3, {0b000, 0b100, 0b111});
  CHECK_FALSE(check_property(halftrivial, "hi"));
  CHECK(check_property(Space(3, {0b000, 0b111}), "resolvable"));
}

TEST_CASE("singleton space") {
  const Space pt(1, {0b0, 0b1});
  for (const char* tag : {"t0", "t1", "t2", "regular", "discrete",
                          "alexandroff", "compact", "connected", "hi",
                          "irresolvable"})
    CHECK_MESSAGE(check_property(pt, tag), tag);
  for (const char* tag : {"disconnected", "dense_in_itself", "resolvable"})
    CHECK_MESSAGE(!check_property(pt, tag), tag);
}

TEST_CASE("implications across the corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_spaces(n)) {
      CHECK(check_property(s, "alexandroff"));
      CHECK(check_property(s, "compact"));
      CHECK(check_property(s, "t1") == check_property(s, "discrete"));
      // Two indistinguishable points form a trivial subspace, so finite
      // hereditary irresolvability collapses to T0.
      CHECK(check_property(s, "hi") == check_property(s, "t0"));
      if (check_property(s, "hi")) CHECK(check_property(s, "irresolvable"));
      if (check_property(s, "discrete")) CHECK(check_property(s, "hi"));
      if (check_property(s, "t2")) CHECK(check_property(s, "t1"));
      CHECK(check_property(s, "disconnected") !=
            check_property(s, "connected"));
      CHECK(check_property(s, "irresolvable") !=
            check_property(s, "resolvable"));
    }
}

TEST_CASE("first-order property sentences agree with the checkers") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_spaces(n))
      for (const char* tag : {"t0", "t1", "t2", "regular", "discrete",
                              "alexandroff", "dense_in_itself"})
        CHECK_MESSAGE(lt_property_agreement(s, tag), tag);
  CHECK_THROWS_AS(lt_property_agreement(kSierpinski, "connected"),
                  ValidationError);
  CHECK_THROWS_AS(lt_property_agreement(kSierpinski, "nope"), ValidationError);
}

TEST_CASE("catalog listings") {
  CHECK(modal_catalog_names() ==
        std::vector<std::string>{"connectedness", "dii-d", "dii-nom", "grz",
                                 "t0-at", "t0-d", "t1-d", "t1-nom"});
  CHECK(fo_catalog_names() ==
        std::vector<std::string>{"chi-n", "lt-alexandroff", "lt-dii",
                                 "lt-discrete", "lt-regular", "lt-t0", "lt-t1",
                                 "lt-t2", "non-lt-witness", "spec-order"});
  CHECK_THROWS_AS(named_modal_formula("nope"), ValidationError);
  CHECK_THROWS_AS(named_fo_formula("grz"), ValidationError);
  CHECK_THROWS_AS(catalog_description("nope"), ValidationError);
  CHECK(catalog_description("grz").find("irresolvable") != std::string::npos);
  CHECK(catalog_description("lt-t1").find("T1") != std::string::npos);
}

TEST_CASE("modal catalog entries") {
  auto text = [](const char* name) {
    return print_modal(named_modal_formula(name));
  };
  CHECK(text("grz") == "[]([](p0 -> []p0) -> p0) -> []p0");
  CHECK(text("connectedness") == "A ([]p0 | []~p0) -> A p0 | A ~p0");
  CHECK(text("t0-at") == "@i0 <>i1 & @i1 <>i0 -> @i0 i1");
  CHECK(text("t1-nom") == "<>i0 -> i0");
  CHECK(text("dii-nom") == "<>~i0");
  CHECK(text("t0-d") == "p0 & ~D p0 & D (p1 & ~D p1) -> []~p1 | D (p1 & []~p0)");
  CHECK(text("t1-d") == "p0 & ~D p0 -> (p0 <-> <>p0) & ~D ~(p0 <-> <>p0)");
  CHECK(text("dii-d") == "p0 -> <>D p0");

  CHECK(language_of(named_modal_formula("grz")) == Language::ML);
  CHECK(language_of(named_modal_formula("connectedness")) == Language::ME);
  CHECK(language_of(named_modal_formula("t0-at")) == Language::HAt);
  CHECK(language_of(named_modal_formula("t1-nom")) == Language::HAt);
  CHECK(language_of(named_modal_formula("t0-d")) == Language::MD);
  CHECK(language_of(named_modal_formula("t1-d")) == Language::MD);
  CHECK(language_of(named_modal_formula("dii-d")) == Language::MD);

  // Lookup is case-insensitive so the conventional capitalizations work.
  CHECK(print_modal(named_modal_formula("Grz")) == text("grz"));
  CHECK(print_modal(modal_formula_or_name("GRZ")) == text("grz"));
  CHECK(print_modal(modal_formula_or_name("<>p0")) == "<>p0");
  CHECK_THROWS_AS(modal_formula_or_name("grzz"), ParseError);
}

TEST_CASE("first-order catalog entries") {
  for (const auto& name : fo_catalog_names()) {
    auto f = named_fo_formula(name);
    CHECK(structurally_equal(f, parse_fo(print_fo(f))));
    const bool in_lt = name != "chi-n" && name != "non-lt-witness";
    CHECK(lt_check(f) == in_lt);
    const bool sentence = name != "spec-order" && name != "non-lt-witness";
    CHECK(is_fo_sentence(f) == sentence);
    CHECK(fo_symbols(f).preds.empty());
  }
  CHECK(print_fo(named_fo_formula("lt-t1")) ==
        "(all-pt x0 (all-pt x1 (implies (not (= x0 x1)) "
        "(ex-op U0 (and (in x0 U0) (not (in x1 U0)))))))");
  CHECK(structurally_equal(fo_formula_or_name("spec-order"),
                           named_fo_formula("spec-order")));
  CHECK(fo_formula_or_name("(= x0 x0)")->kind == FKind::EqPt);
}

TEST_CASE("specialization order sentence matches the closure order") {
  auto order = named_fo_formula("spec-order");
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : all_spaces(n)) {
      const Model m(s, {});
      const Relation r = specialization_preorder(s);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Assignment g;
          g.points = {{0, x}, {1, y}};
          CHECK(eval_fo(m, order, g) == r.contains(x, y));
          CHECK(eval_fo(m, order, g) == contains(s.closure(PointSet{1} << y), x));
        }
    }
}

TEST_CASE("order sentence without finite models") {
  auto chi = named_fo_formula("chi-n");
  for (int n = 1; n <= 4; ++n)
    CHECK_FALSE(satisfiable_on_size(chi, n).has_value());
}

TEST_CASE("axioms define their properties on small spaces") {
  // The full sweep lives in the acceptance suite; this pins each pairing
  // on the n <= 3 corpus.
  const std::pair<const char*, const char*> pairs[] = {
      {"grz", "hi"},           {"connectedness", "connected"},
      {"t0-at", "t0"},         {"t1-nom", "t1"},
      {"dii-nom", "dense_in_itself"}, {"t0-d", "t0"},
      {"t1-d", "t1"},          {"dii-d", "dense_in_itself"},
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : all_spaces(n))
      for (const auto& [axiom, tag] : pairs)
        CHECK_MESSAGE(valid_on_space(s, named_modal_formula(axiom)) ==
                          check_property(s, tag),
                      axiom << " vs " << tag << " at n=" << n);
}

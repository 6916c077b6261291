#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <topomodal/algebra.hpp>
#include <topomodal/catalog.hpp>
#include <topomodal/generators.hpp>
#include <topomodal/semantics.hpp>

using namespace topomodal;

namespace {

const Space kSierpinski(2, {0b00, 0b01, 0b11});
const Space kTrivial2(2, {0b00, 0b11});

InteriorAlgebra identity_algebra(int atoms) {
  std::vector<PointSet> box(std::size_t{1} << atoms);
  for (std::size_t a = 0; a < box.size(); ++a) box[a] = PointSet(a);
  return InteriorAlgebra(atoms, std::move(box));
}

}  // namespace

TEST_CASE("algebra construction is validated") {
  CHECK_THROWS_AS(InteriorAlgebra(0, {0}), ValidationError);
  CHECK_THROWS_AS(InteriorAlgebra(1, {0, 1, 0}), ValidationError);
  CHECK_THROWS_AS(InteriorAlgebra(1, {0, 0b10}), ValidationError);
  CHECK_THROWS_AS(InteriorAlgebra(21, {}), ValidationError);
  const InteriorAlgebra b = identity_algebra(2);
  CHECK(b.atom_count() == 2);
  CHECK(b.carrier_size() == 4);
  CHECK(b.top() == 0b11);
  CHECK(b.box(0b10) == 0b10);
  CHECK(b.diamond(0b10) == 0b10);
  CHECK_THROWS_AS(b.box(0b100), ValidationError);
}

TEST_CASE("complex algebra of the two-point spaces") {
  const InteriorAlgebra sier = complex_algebra(kSierpinski);
  CHECK(sier.atom_count() == 2);
  CHECK(sier.box_table() == std::vector<PointSet>{0b00, 0b01, 0b00, 0b11});
  CHECK(sier.diamond(0b01) == 0b11);  // closure of the dense point
  CHECK(sier.diamond(0b10) == 0b10);

  CHECK(complex_algebra(Space(1, {0b0, 0b1})) == identity_algebra(1));
  CHECK(complex_algebra(Space(2, {0b00, 0b01, 0b10, 0b11})) ==
        identity_algebra(2));
  CHECK(complex_algebra(kTrivial2).box_table() ==
        std::vector<PointSet>{0b00, 0b00, 0b00, 0b11});
}

TEST_CASE("axiom checker reports the first violation") {
  CHECK_FALSE(check_interior_algebra(identity_algebra(3)).has_value());

  const auto i1 = check_interior_algebra(InteriorAlgebra(1, {0, 0}));
  REQUIRE(i1.has_value());
  CHECK(i1->axiom == "i1");
  CHECK(i1->a == 0b1);

  // box(empty) = {0} breaks meets before deflation is ever examined.
  const auto i2 =
      check_interior_algebra(InteriorAlgebra(2, {0b01, 0b01, 0b10, 0b11}));
  REQUIRE(i2.has_value());
  CHECK(i2->axiom == "i2");
  CHECK(i2->a == 0b00);
  CHECK(i2->b == 0b10);

  const auto i3 =
      check_interior_algebra(InteriorAlgebra(2, {0b00, 0b10, 0b00, 0b11}));
  REQUIRE(i3.has_value());
  CHECK(i3->axiom == "i3");
  CHECK(i3->a == 0b01);

  // Meet-preserving and deflationary but not idempotent.
  const auto i4 = check_interior_algebra(
      InteriorAlgebra(3, {0, 0, 0, 0b001, 0, 0, 0, 0b111}));
  REQUIRE(i4.has_value());
  CHECK(i4->axiom == "i4");
  CHECK(i4->a == 0b011);
}

TEST_CASE("complex algebras satisfy the interior axioms") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_spaces(n))
      CHECK_FALSE(check_interior_algebra(complex_algebra(s)).has_value());
}

TEST_CASE("dual space") {
  CHECK(dual_space(complex_algebra(kSierpinski)) == kSierpinski);
  CHECK(dual_space(identity_algebra(3)) ==
        Space(3, {0b000, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111}));
  CHECK(dual_space(InteriorAlgebra(2, {0b00, 0b00, 0b00, 0b11})) == kTrivial2);
  CHECK_THROWS_WITH_AS(dual_space(InteriorAlgebra(1, {0, 0})),
                       "not an interior algebra: axiom i1 fails at [0]",
                       ValidationError);
}

TEST_CASE("finite duality round-trips the whole corpus") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_spaces(n)) {
      const Space back = dual_space(complex_algebra(s));
      CHECK(back == s);  // box-fixed sets are exactly the opens
      CHECK(is_homeomorphic(back, s));
    }
}

TEST_CASE("equational validity") {
  const InteriorAlgebra sier = complex_algebra(kSierpinski);
  CHECK(equation_valid(sier, parse_modal("[]p0 -> p0")));
  CHECK(equation_valid(sier, parse_modal("[]p0 -> [][]p0")));
  CHECK(equation_valid(sier, parse_modal("T")));
  CHECK_FALSE(equation_valid(sier, parse_modal("F")));
  CHECK_FALSE(equation_valid(sier, parse_modal("p0 -> []p0")));
  CHECK(equation_valid(sier, named_modal_formula("grz")));
  CHECK_FALSE(
      equation_valid(complex_algebra(kTrivial2), named_modal_formula("grz")));
  for (int atoms : {1, 2, 3})
    CHECK(equation_valid(identity_algebra(atoms), parse_modal("p0 <-> []p0")));

  CHECK_THROWS_AS(equation_valid(sier, parse_modal("E p0")), ValidationError);
  CHECK_THROWS_AS(equation_valid(sier, parse_modal("<>i0")), ValidationError);
  CHECK_THROWS_AS(
      equation_valid(complex_algebra(Space(5, {0b00000, 0b11111})),
                     parse_modal("p0 & p1 & p2 & p3 & p4")),
      GuardError);
}

TEST_CASE("algebraic validity matches frame validity") {
  Rng rng(20260823);
  for (int trial = 0; trial < 300; ++trial) {
    const Space s = random_space(rng, 1 + int(rng.below(4)));
    const ModalPtr f =
        random_modal_formula(rng, Language::ML, 1 + int(rng.below(7)), 2, 0);
    CHECK(equation_valid(complex_algebra(s), f) == valid_on_space(s, f));
  }
}

TEST_CASE("dual maps of interior maps are algebra homomorphisms") {
  const PointMap collapse(kSierpinski, Space(1, {0b0, 0b1}), {0, 0});
  REQUIRE(is_interior_map(collapse));
  const AlgebraHom h = hom_dual(collapse);
  CHECK(h.domain == complex_algebra(Space(1, {0b0, 0b1})));
  CHECK(h.codomain == complex_algebra(kSierpinski));
  CHECK(h.map == std::vector<PointSet>{0b00, 0b11});
  CHECK(h.boolean_hom);
  CHECK(h.commutes_with_box);

  CHECK_THROWS_AS(hom_dual(PointMap(kTrivial2, kSierpinski, {1, 1})),
                  ValidationError);
}

TEST_CASE("dual maps across all small interior maps") {
  // Every map between spaces of the n <= 2 corpus plus a 3-point sample,
  // filtered down to the interior ones.
  std::vector<Space> spaces = all_spaces(1);
  for (const auto& s : all_spaces(2)) spaces.push_back(s);
  spaces.push_back(Space(3, {0b000, 0b001, 0b011, 0b111}));
  spaces.push_back(Space(3, {0b000, 0b001, 0b110, 0b111}));
  int seen = 0;
  for (const auto& a : spaces)
    for (const auto& b : spaces) {
      const int na = a.point_count(), nb = b.point_count();
      std::vector<int> map(na, 0);
      for (;;) {
        const PointMap f(a, b, map);
        if (is_interior_map(f)) {
          ++seen;
          const AlgebraHom h = hom_dual(f);
          CHECK(h.boolean_hom);
          CHECK(h.commutes_with_box);
        }
        int i = na - 1;
        for (; i >= 0; --i) {
          if (++map[i] < nb) break;
          map[i] = 0;
        }
        if (i < 0) break;
      }
    }
  CHECK(seen == 72);
}

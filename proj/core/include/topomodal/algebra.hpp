#ifndef TOPOMODAL_ALGEBRA_HPP
#define TOPOMODAL_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topomodal/modal.hpp"
#include "topomodal/space.hpp"

namespace topomodal {

// The powerset Boolean algebra on {0..atoms-1} equipped with a unary box
// table over the 2^atoms carrier elements.  Every finite Boolean algebra
// is the powerset of its atoms, so restricting to this shape loses no
// generality.  The table is arbitrary; whether it obeys the interior
// axioms is a separate check.
class InteriorAlgebra {
 public:
  InteriorAlgebra(int atoms, std::vector<PointSet> box);

  int atom_count() const { return atoms_; }
  std::size_t carrier_size() const { return box_.size(); }
  PointSet top() const { return full_set(atoms_); }
  PointSet box(PointSet a) const;
  PointSet diamond(PointSet a) const;  // complement of box of complement
  const std::vector<PointSet>& box_table() const { return box_; }

  bool operator==(const InteriorAlgebra&) const = default;

 private:
  int atoms_;
  std::vector<PointSet> box_;
};

// First axiom the box table breaks, searched in the fixed order
//   i1: box T = T
//   i2: box(a & b) = box a & box b
//   i3: box a <= a
//   i4: box box a = box a
// with witness elements in ascending order.  Empty result = genuine
// interior algebra.
struct AxiomViolation {
  std::string axiom;  // "i1".."i4"
  PointSet a = 0;
  PointSet b = 0;  // second witness, i2 only
};
std::optional<AxiomViolation> check_interior_algebra(const InteriorAlgebra& b);

// The powerset of the space with box = interior.  Always passes
// check_interior_algebra.
InteriorAlgebra complex_algebra(const Space& s);

// Points are the ultrafilters of the carrier, one principal ultrafilter
// per atom; opens are the extents of open filters, which at finite scale
// are the principal filters of box-fixed elements, so the open family is
// exactly { a : box a = a }.  Throws ValidationError (naming the violated
// axiom) unless the argument is a genuine interior algebra.
Space dual_space(const InteriorAlgebra& b);

// Whether the formula evaluates to T under every assignment of its
// proposition letters to carrier elements.  Basic modal language only;
// guarded by atoms * letters <= budget.
bool equation_valid(const InteriorAlgebra& b, const ModalPtr& f,
                    int budget = 24);

// The dual of an interior map f: S -> T between spaces: the preimage map
// f+ between the complex algebras of T and S, with homomorphism checks.
struct AlgebraHom {
  InteriorAlgebra domain;     // complex algebra of the target space
  InteriorAlgebra codomain;   // complex algebra of the source space
  std::vector<PointSet> map;  // image of each domain element under f+
  bool boolean_hom = false;       // preserves T, F, complement, meet, join
  bool commutes_with_box = false;
};
AlgebraHom hom_dual(const PointMap& f);

}  // namespace topomodal

#endif

#ifndef TOPOMODAL_BISIM_HPP
#define TOPOMODAL_BISIM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "topomodal/semantics.hpp"

namespace topomodal {

// Relation between the points of two models; rows[x] holds the points of
// the second model related to x.
struct PairRelation {
  int n1 = 0;
  int n2 = 0;
  std::vector<PointSet> rows;

  static PairRelation empty(int n1, int n2);
  static PairRelation total(int n1, int n2);
  static PairRelation identity(int n);

  bool at(int x, int y) const { return contains(rows[x], y); }
  void add(int x, int y) { rows[x] |= PointSet{1} << y; }
  void remove(int x, int y) { rows[x] &= ~(PointSet{1} << y); }
  bool is_empty() const;
  int pair_count() const;
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const PairRelation&) const = default;
};

// Image-form check: the relation is non-empty, every related pair agrees on
// every valued proposition letter (a letter absent from one model reads as
// empty there), images of opens are open and preimages of opens are open.
bool is_topo_bisimulation(const Model& a, const Model& b, const PairRelation& z);

// The same property checked through the pointwise form: around every
// related pair, each open on one side is answered by an open on the other
// whose points are all covered.  Quadratic in the topologies; kept as an
// independent route so the two characterizations stay cross-checked.
bool is_topo_bisimulation_pointwise(const Model& a, const Model& b,
                                    const PairRelation& z);

// Greatest fixpoint: start from all atom-consistent pairs and delete pairs
// whose zig or zag fails against the current relation.  May come out empty,
// meaning no topo-bisimulation relates anything.
PairRelation greatest_topo_bisimulation(const Model& a, const Model& b);

// The classical relational fixpoint computed on the specialization
// preorders.  A finite topology is determined by its preorder, so this must
// agree with greatest_topo_bisimulation on every input; it is implemented
// separately, on successor sets, to keep that an actual cross-check.
PairRelation greatest_kripke_bisimulation(const Model& a, const Model& b);

bool modally_equivalent(const Model& a, int w, const Model& b, int w2);

// Search for a basic modal formula over the letters valued in both models
// that is true at w and false at w2 (or the mirror image, returned
// negated).  Works over pairs of truth sets, so each semantically distinct
// formula class is visited once; `depth` bounds nesting of boxes.  Guarded
// by a.points + b.points <= 10.
std::optional<ModalPtr> distinguishing_formula(const Model& a, int w,
                                               const Model& b, int w2,
                                               int depth);

// Partial bijection between point sets; to[x] is the partner of x or -1.
struct PartialBijection {
  std::vector<int> to;

  bool defined(int x) const { return to[x] >= 0; }
  bool extends(const PartialBijection& f) const;
  std::vector<std::pair<int, int>> graph() const;

  bool operator==(const PartialBijection&) const = default;
};

// Largest family of partial bijections closed under the three conditions:
// every pair agrees on proposition letters and nominals in both directions;
// every point of either model enters some extension; and neighborhoods
// transfer (for each related pair, each point in the partner's minimal
// neighborhood is reached from the own minimal neighborhood by some
// extension, both ways).  Empty when no such family exists.
std::vector<PartialBijection> potential_homeomorphism_family(
    const Model& a, const Model& b, int guard_points = 4);
bool potential_homeomorphism_exists(const Model& a, const Model& b,
                                    int guard_points = 4);

}  // namespace topomodal

#endif

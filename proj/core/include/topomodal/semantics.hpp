#ifndef TOPOMODAL_SEMANTICS_HPP
#define TOPOMODAL_SEMANTICS_HPP

#include <map>
#include <optional>

#include "topomodal/fo.hpp"
#include "topomodal/modal.hpp"
#include "topomodal/space.hpp"

namespace topomodal {

// A space with a valuation.  Proposition letters map to arbitrary subsets,
// nominals to singletons; both are partial, and evaluating a symbol the
// model does not value is an EvalError, not an implicit empty set.
class Model {
 public:
  Model(Space space, std::map<int, PointSet> props,
        std::map<int, PointSet> nominals = {});

  const Space& space() const { return space_; }
  const std::map<int, PointSet>& props() const { return props_; }
  const std::map<int, PointSet>& nominals() const { return nominals_; }

  PointSet prop_value(int k) const;    // EvalError when unvalued
  int nominal_point(int k) const;      // EvalError when unvalued

 private:
  Space space_;
  std::map<int, PointSet> props_;
  std::map<int, PointSet> nominals_;
};

// Variable bindings for evaluation.  When `basoid` is set, open
// quantifiers range over the base instead of the full topology; values
// already assigned to open variables must belong to the active scope.
struct Assignment {
  std::map<int, int> points;
  std::map<int, PointSet> opens;
  std::optional<Base> basoid;
};

// Truth set of a modal formula, computed bottom-up; box is interior,
// diamond is closure, binders loop over points.
PointSet truth_set(const Model& m, const ModalPtr& f, const Assignment& g = {});
bool eval_modal(const Model& m, int point, const ModalPtr& f,
                const Assignment& g = {});

// Classical satisfaction for the two-sorted language.
bool eval_fo(const Model& m, const FoPtr& f, const Assignment& g = {});

struct Counterexample {
  std::map<int, PointSet> props;
  std::map<int, PointSet> nominals;
  int point = -1;
};

// Validity on a space: sweeps every valuation of the letters occurring in
// the sentence (nominals ranging over singletons) and every point, in
// ascending order with earlier letters most significant.  Guarded by
// n * letters <= budget.
std::optional<Counterexample> validity_counterexample(const Space& s,
                                                      const ModalPtr& f,
                                                      int budget = 24);
bool valid_on_space(const Space& s, const ModalPtr& f, int budget = 24);

struct SatWitness {
  Space space;
  std::map<int, PointSet> props;
  std::map<int, PointSet> nominals;
  std::optional<int> point;           // modal witness point
  std::map<int, int> point_vars;      // witness bindings for free variables
  std::map<int, PointSet> open_vars;
};

// Exhaustive satisfiability over all spaces with exactly n points, in
// enumeration order; first witness wins.  The first-order variant sweeps
// assignments for free variables as well.
std::optional<SatWitness> satisfiable_on_size(const ModalPtr& f, int n,
                                              int budget = 24);
std::optional<SatWitness> satisfiable_on_size(const FoPtr& f, int n,
                                              int budget = 24);

}  // namespace topomodal

#endif

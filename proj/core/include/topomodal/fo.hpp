#ifndef TOPOMODAL_FO_HPP
#define TOPOMODAL_FO_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "topomodal/errors.hpp"

namespace topomodal {

// Two-sorted first-order syntax over topological models: point variables
// x<k>, open variables U<k>, unary predicates p<k>, membership, equality
// at both sorts, and quantifiers for both sorts.
enum class FKind {
  Top, Bot,
  EqPt,   // a, b point vars
  EqOp,   // a, b open vars
  Pred,   // a = predicate index, b = point var
  In,     // a = point var, b = open var
  Not, And, Or, Implies, Iff,
  ExistsPt, ForallPt,  // a = point var, lhs = body
  ExistsOp, ForallOp,  // a = open var, lhs = body
};

struct FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

struct FoFormula {
  FKind kind;
  int a = -1;
  int b = -1;
  FoPtr lhs, rhs;
};

namespace ff {
FoPtr top();
FoPtr bot();
FoPtr eq_pt(int x, int y);
FoPtr eq_op(int u, int v);
FoPtr pred(int p, int x);
FoPtr in(int x, int u);
FoPtr negate(const FoPtr& f);
FoPtr conj(const FoPtr& f, const FoPtr& g);
FoPtr disj(const FoPtr& f, const FoPtr& g);
FoPtr implies(const FoPtr& f, const FoPtr& g);
FoPtr iff(const FoPtr& f, const FoPtr& g);
FoPtr exists_pt(int x, const FoPtr& f);
FoPtr forall_pt(int x, const FoPtr& f);
FoPtr exists_op(int u, const FoPtr& f);
FoPtr forall_op(int u, const FoPtr& f);
}  // namespace ff

bool structurally_equal(const FoPtr& a, const FoPtr& b);

struct FoSymbols {
  std::set<int> preds;
  std::set<int> point_vars;
  std::set<int> open_vars;
  std::set<int> free_point_vars;
  std::set<int> free_open_vars;
};
FoSymbols fo_symbols(const FoPtr& f);
bool is_fo_sentence(const FoPtr& f);

// S-expression syntax: (= x0 x1), (=o U0 U1), (P p0 x0), (in x0 U0),
// (not f), (and f g), (or f g), (implies f g), (iff f g),
// (ex-pt x0 f), (all-pt x0 f), (ex-op U0 f), (all-op U0 f), top, bot.
FoPtr parse_fo(std::string_view text);
std::string print_fo(const FoPtr& f);

// Whether every free occurrence of open variable u in f sits under an even
// (positive) resp. odd (negative) number of negations, an implication
// antecedent counting as one negation.  A variable that does not occur is
// both.  Occurrences inside either side of <-> count with both signs.
bool positive_in(const FoPtr& f, int u);
bool negative_in(const FoPtr& f, int u);
bool occurs_open(const FoPtr& f, int u);  // free occurrences only

// The guarded open-quantifier shapes.  Interior pattern:
//   (ex-op U (and (in t U) (all-pt y (implies (in y U) body))))
// closure pattern:
//   (all-op U (implies (in t U) (ex-pt y (and (in y U) body)))).
// Desugared implications ~(a & ~b) are recognized as well.
struct OpenQuantPattern {
  bool is_interior = false;
  int open_var = -1;
  int subject = -1;   // the point variable t in the guard
  int bound_pt = -1;  // the point variable y quantified inside
  FoPtr body;
};
std::optional<OpenQuantPattern> match_open_pattern(const FoPtr& f);

// Base-invariant fragment: every open quantifier is a guarded universal
// with a body positive in the quantified variable, or a guarded
// existential with a body negative in it.
bool lt_check(const FoPtr& f);

// Interior/closure fragment: no free open variables, and every open
// quantifier matches one of the two patterns above with the quantified
// variable absent from the pattern body.
bool li_check(const FoPtr& f);

}  // namespace topomodal

#endif

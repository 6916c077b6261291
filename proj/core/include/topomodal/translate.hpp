#ifndef TOPOMODAL_TRANSLATE_HPP
#define TOPOMODAL_TRANSLATE_HPP

#include "topomodal/fo.hpp"
#include "topomodal/modal.hpp"
#include "topomodal/semantics.hpp"

namespace topomodal {

// Nominals are rendered on the first-order side as reserved point
// variables that an assignment pins to the denoted points; indices from
// this base upward are reserved for that purpose.
inline constexpr int kNominalVarBase = 1000;

inline int nominal_constant_var(int nominal) { return kNominalVarBase + nominal; }
std::optional<int> nominal_of_var(int var);

// Bindings for every reserved constant the model's nominals cover.
Assignment nominal_assignment(const Model& m);

// Standard translation of the basic modal language; box becomes a guarded
// open existential, diamond its dual closure shape.  The default mode
// reuses two point variables x, x+1 and the single open variable U0;
// fresh_vars switches to a counter per binder for debugging.
// `x` is the free evaluation variable of the result.
FoPtr st(const ModalPtr& f, int x = 0, bool fresh_vars = false);

// Extension to sentences with nominals, @, E/A and binders.  Nominals
// compile to reserved constant variables, @ and E rebind the evaluation
// variable, binders quantify the user's own variable.  Rejects D.
FoPtr st_ext(const ModalPtr& f, int x = 0, bool fresh_vars = false);

// Inverse direction: formulas passing li_check, with free point variables
// among {x} and the reserved constants, become sentences with E and
// binders; the designated free variable is bound by a leading binder.
ModalPtr ht(const FoPtr& f, int x = 0);

}  // namespace topomodal

#endif

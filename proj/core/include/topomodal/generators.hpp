#pragma once

#include <cstdint>
#include <random>

#include "topomodal/fo.hpp"
#include "topomodal/modal.hpp"
#include "topomodal/semantics.hpp"

namespace topomodal {

// Seeded source for randomized tests and instance generation.  All draws go
// through this wrapper so a fixed seed reproduces the exact same stream on
// every platform (mt19937_64 is specified bit-for-bit by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int below(int n);             // uniform over [0, n); n must be positive
  bool coin(double p = 0.5);    // true with probability p
  std::uint64_t raw();

 private:
  std::mt19937_64 engine_;
};

// Space generated from a random preorder on n points (edge density drawn per
// call, then transitively closed).  Every finite space arises this way.
Space random_space(Rng& rng, int n);

// Random valuation over s: each letter below `props` gets an arbitrary
// subset, each nominal below `nominals` a random singleton.
Model random_model_on(Rng& rng, const Space& s, int props, int nominals);
Model random_model(Rng& rng, int n, int props, int nominals);

// Random sentence of the given language with roughly `size` connectives.
// State variables only ever appear under their binder, so the result is
// always closed; nominals/At only appear for the hybrid languages, E/A and
// D only where the language admits them.
ModalPtr random_modal_formula(Rng& rng, Language lang, int size, int props,
                              int nominals);

// Unconstrained two-sorted formula (parser round-trip fodder; makes no
// attempt to stay inside any fragment).
FoPtr random_fo_formula(Rng& rng, int size, int preds, int point_vars,
                        int open_vars);

// Random member of the interior/closure fragment with x0 as its only free
// variable and constants drawn from the reserved range below `nominals`.
// Suitable input for the hybrid translation.
FoPtr random_li_formula(Rng& rng, int size, int props, int nominals);

}  // namespace topomodal

#ifndef TOPOMODAL_SELFTEST_HPP
#define TOPOMODAL_SELFTEST_HPP

#include <string>
#include <vector>

namespace topomodal {

// The acceptance suite: ten self-contained checks covering definability,
// preservation, extensions, translations, bisimulation, base invariance,
// the order sentence and duality, each exhaustive over the n <= 4 corpus
// or seeded-random at a fixed trial count.  Runs are deterministic.
struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // counts: corpus size, trials, mismatches
};

// One criterion (1..10; anything else is a ValidationError).  An escaped
// exception is converted into a failed result carrying the message.
CriterionResult run_criterion(int number);

std::vector<CriterionResult> run_acceptance_suite();

}  // namespace topomodal

#endif

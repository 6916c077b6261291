#ifndef TOPOMODAL_PROPS_HPP
#define TOPOMODAL_PROPS_HPP

#include <string>
#include <vector>

#include "topomodal/space.hpp"

namespace topomodal {

// Tags accepted by check_property, sorted.
std::vector<std::string> property_tags();

// Decides a named topological property by its definition.  Everything here
// is brute force over points, opens and subsets; correctness over speed.
// Unknown tags are a ValidationError.
bool check_property(const Space& s, const std::string& tag);

// closure(a) is the whole space.
bool is_dense(const Space& s, PointSet a);

// Evaluates the open-guarded first-order sentence for the tag (catalog
// entry "lt-<tag>") and compares with check_property.  Defined for t0, t1,
// t2, regular, discrete, alexandroff and dense_in_itself.
bool lt_property_agreement(const Space& s, const std::string& tag);

}  // namespace topomodal

#endif

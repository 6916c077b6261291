#ifndef TOPOMODAL_CATALOG_HPP
#define TOPOMODAL_CATALOG_HPP

#include <string>
#include <vector>

#include "topomodal/fo.hpp"
#include "topomodal/modal.hpp"

namespace topomodal {

// Named formulas usable wherever the CLI accepts a formula string.  Each
// modal entry is a class-defining axiom; the first-order entries carry the
// property sentences, the specialization order and the finitely
// unsatisfiable order sentence.

std::vector<std::string> modal_catalog_names();
std::vector<std::string> fo_catalog_names();

// Throws ValidationError for unknown names.
ModalPtr named_modal_formula(const std::string& name);
FoPtr named_fo_formula(const std::string& name);

// One-line summary of what the named formula expresses.
std::string catalog_description(const std::string& name);

// Parses text as a formula, first consulting the catalog by name.
ModalPtr modal_formula_or_name(const std::string& text);
FoPtr fo_formula_or_name(const std::string& text);

}  // namespace topomodal

#endif

#ifndef TOPOMODAL_JSON_IO_HPP
#define TOPOMODAL_JSON_IO_HPP

#include <string>

#include "topomodal/algebra.hpp"
#include "topomodal/semantics.hpp"
#include "topomodal/space.hpp"

namespace topomodal {

// JSON shapes:
//   space   {"n": 2, "opens": [[], [0], [0,1]]}
//   model   {"space": {...}, "val": {"p0": [0,2], "i0": [1]}}
//   algebra {"atoms": 2, "box": {"[]": [], "[0]": [0], "[1]": [], "[0,1]": [0,1]}}
// Serialization is deterministic: compact, fixed key order, opens sorted
// by mask, valuation letters sorted by kind then index, box keyed by
// ascending element.  Loaders reject unknown keys and funnel structural
// problems through the constructors, so the reported violation is always
// the first one in their fixed scan orders.  Malformed JSON raises
// ParseError carrying the byte offset.

std::string space_to_json(const Space& s);
Space space_from_json(const std::string& text);

std::string model_to_json(const Model& m);
Model model_from_json(const std::string& text);

std::string algebra_to_json(const InteriorAlgebra& b);
InteriorAlgebra algebra_from_json(const std::string& text);

}  // namespace topomodal

#endif

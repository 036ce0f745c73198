#pragma once

#include <json.hpp>

#include "heispoly/current.hpp"
#include "heispoly/group.hpp"
#include "heispoly/numeric.hpp"
#include "heispoly/poly.hpp"
#include "heispoly/step_function.hpp"
#include "heispoly/tri_matrix.hpp"

namespace heispoly {

/// Key order is preserved on output; rationals travel as canonical "p/q"
/// strings, complex values as [re, im] pairs.
using json = nlohmann::ordered_json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// {"bound": N, "coeffs": ["p/q", ...]}
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

/// {"bound": N, "rows": [["p/q", ...], ...]} row-major.
json matrix_to_json(const TriMatrix& m);
TriMatrix matrix_from_json(const json& j);

/// {"bound": N, "u": "p/q", "coeffs": ["p/q", ...]}. Readers accept a missing
/// "bound" and infer it from the coefficient count, which is the compact form
/// the CLI emits.
json group_element_to_json(const GroupElement& g, bool with_bound = true);
GroupElement group_element_from_json(const json& j);

/// {"breaks": ["p/q", ...], "values": ["p/q", ...]}
json step_function_to_json(const StepFunction& f);
StepFunction step_function_from_json(const json& j);

/// {"bound": N, "central": "p/q", "g": {...}, "fs": [{...}, ...]}
json current_element_to_json(const CurrentElement& e);
CurrentElement current_element_from_json(const json& j);

json complex_to_json(CF64 z);
CF64 complex_from_json(const json& j);

}  // namespace heispoly

#pragma once

#include <string>

#include "arrgr/arrangement.hpp"
#include "arrgr/cordovil.hpp"
#include "arrgr/oriented_matroid.hpp"
#include "arrgr/symmetry.hpp"
#include "json.hpp"

namespace arrgr::io {

using Json = nlohmann::ordered_json;

/// Reads a JSON document; parse errors become InputError with line and column.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// {"dim": d, "forms": [{"linear": ["1","-1"], "constant": "0", "label": "12"}, ...]}
/// Numbers may be JSON integers or rational strings.
Arrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& a);

/// {"ground": ["a", ...], "circuits": [{"plus": ["a"], "minus": ["b"]}, ...]}
/// plus an optional "validate" flag (default true) that enables the axiom check.
CircuitSet circuits_from_json(const Json& j);
Json circuits_to_json(const CircuitSet& c, bool validate);

/// {"group": "S3", "action": [{"perm": {"12": "12", ...}, "flips": {"12": -1}}, ...]}
/// Entries may instead give "matrix" and "translation" of an affine map, and
/// may name their "cycle_type". {"group": "Sn-coordinates"} derives the
/// coordinate action.
GroupSpec group_from_json(const Json& j, const Arrangement& a);

/// {"basis": [["12", "23"], ...], "coeffs": ["1", "-1", ...]}
Json element_to_json(const AlgebraElement& x, const std::vector<std::string>& labels);
AlgebraElement element_from_json(const Json& j, const std::vector<std::string>& labels);

}  // namespace arrgr::io

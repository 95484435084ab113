#pragma once

#include "json.hpp"

#include "commvar/cohomtab.hpp"
#include "commvar/commodel.hpp"
#include "commvar/gammaconf.hpp"
#include "commvar/isodecomp.hpp"
#include "commvar/rankstrata.hpp"

namespace commvar {

using nlohmann::json;

// Malformed input throws Error(InvalidArgument); shape problems throw ShapeMismatch.

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

/// {rows, cols, data} with data row-major [re, im] pairs. Plain numbers are accepted as real entries.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {n, s, kind, mats}, plus "universe": {n, D} when the tuple has an ambient universe
/// and "field": "real" for real symmetric tuples.
json tuple_to_json(const CommutingTuple& t);
CommutingTuple tuple_from_json(const json& j);

json universe_to_json(const UniverseBasis& u);
UniverseBasis universe_from_json(const json& j);

/// {"coords": [[re, im], ...]} or the string "basepoint".
json point_to_json(const SpherePoint& p);
SpherePoint point_from_json(const json& j);

/// {universe: {n, D}, labels: [{frame, point}]}. Frames must be orthonormal to eps_struct.
json config_to_json(const Configuration& c);
Configuration config_from_json(const json& j, const Tolerances& tol = {});

/// {"3": 1, "4": 2, ...}
json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const json& j);

json type_to_json(const DecompType& d);

}  // namespace commvar

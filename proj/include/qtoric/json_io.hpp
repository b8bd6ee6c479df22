#pragma once

// JSON interchange. CharPair uses {"n": int, "m": int, "a": [int], "b": [int]}.
// Integers beyond the int64 range are written as decimal strings.

#include "json.hpp"

#include "qtoric/classify.hpp"
#include "qtoric/lattice.hpp"
#include "qtoric/oracle.hpp"
#include "qtoric/quasitoric.hpp"

namespace qtoric {

using Json = nlohmann::json;

Json integer_to_json(const Integer& x);
Json vector_to_json(const IntVector& v);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json char_pair_to_json(const CharPair& cp);
/// Throws InvalidInput on a missing field or wrong type.
CharPair char_pair_from_json(const Json& j);

Json class_to_json(const HomeoClass& c);
Json verdict_to_json(const IsoVerdict& v);
Json presentation_to_json(const Presentation& p);
Json lattice_to_json(const LatticeBasis& l);

const char* orientation_name(Orientation o);

}  // namespace qtoric

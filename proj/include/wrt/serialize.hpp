#pragma once

// JSON encodings.  A cyclotomic number is {"order": N, "coords": [[num, den], ...]}
// with decimal strings, one pair per power-basis coordinate.

#include <json.hpp>

#include "wrt/cyclotomic.hpp"
#include "wrt/rep_matrix.hpp"
#include "wrt/sl2z.hpp"

namespace wrt {

nlohmann::json to_json(const CycNum& x);
/// [re, im] under the standard embedding, for human readers.
nlohmann::json preview(const CycNum& x);
/// Adds a floating preview "approx": [re, im] next to the exact coordinates.
nlohmann::json to_json_with_preview(const CycNum& x);
/// Throws std::invalid_argument on malformed input.
CycNum cycnum_from_json(const nlohmann::json& j);

/// {"p", "basis", "order", "dim", "entries": [[CycNum, ...], ...]}
nlohmann::json to_json(const RepMatrix& m, bool preview = false);
RepMatrix repmatrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GenWord& w);

}  // namespace wrt

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "leavitt/simplicity.hpp"

namespace leavitt {

using Json = nlohmann::ordered_json;

/// Array of rows of canonical element strings.
Json matrix_to_json(const LeavittMatrix &m);
/// Reads a square array of arrays of element strings into M_d(L_K(n)).
LeavittMatrix matrix_from_json(const Json &j, FieldSpec spec, std::uint32_t n);

/// {"field", "characteristic", "n", "d", "case", "pairs": [{"left", "right"}]}
Json witness_to_json(const BracketWitness &w);
/// Throws DomainError on a malformed document.
BracketWitness witness_from_json(const Json &j);

} // namespace leavitt

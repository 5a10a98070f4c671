#ifndef ADM_JSON_IO_HPP
#define ADM_JSON_IO_HPP

#include <json.hpp>

#include "adm/adomian.hpp"
#include "adm/reduced.hpp"

namespace adm {

// Wire schema, consumed by the CLI:
//   Z:   { "m": int, "k": int, "terms": [ { "coeff": "p/q", "exps": { "i": n_i } } ] }
//   A:   { "m": int, "parts": [ { "k": int, "z": <Z schema> } ] }
// Coefficients are exact fraction strings, never decimals. ordered_json keeps
// the emission order stable so output is byte-deterministic.

using Json = nlohmann::ordered_json;

Json to_json(const ReducedPolynomial& z);
Json to_json(const AdomianPolynomial& a);

/// Inverse of to_json; throws std::invalid_argument on schema violations.
ReducedPolynomial reduced_from_json(const Json& j);
AdomianPolynomial adomian_from_json(const Json& j);

}  // namespace adm

#endif  // ADM_JSON_IO_HPP

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "multiform/extensor.hpp"

namespace multiform {

// {"dim": n, "coeffs": {"e13": v, ...}} with exact round-trip.
nlohmann::json to_json(const Multiform& x);
Multiform multiform_from_json(const nlohmann::json& j);

// {"dim": n, "domain": [p...], "codomain": [q...], "matrix": row-major}
nlohmann::json to_json(const Extensor& t);
Extensor extensor_from_json(const nlohmann::json& j);

// Parses an n x n symmetric matrix given either inline JSON text or rows.
std::vector<double> matrix_from_json(const nlohmann::json& j, int& dim_out);

}  // namespace multiform

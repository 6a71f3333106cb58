#pragma once

#include <string>

#include <json.hpp>

#include "frqaoa/gate.hpp"

namespace frqaoa {

nlohmann::json circuit_to_json(const Circuit& c);

/// Validates against the type invariants; throws std::invalid_argument with a
/// path to the offending field.
Circuit circuit_from_json(const nlohmann::json& j);

void save_circuit(const Circuit& c, const std::string& path);
Circuit load_circuit(const std::string& path);

}  // namespace frqaoa

#pragma once

#include <json.hpp>

#include "vffc/qsim/circuit.hpp"

namespace vffc {

/// {num_qubits, ops:[{kind, targets, controls, polarities, angle, inner?}]}
nlohmann::json circuit_to_json(const Circuit& circuit);

/// @throws ArgumentError on missing fields, wrong types or invalid ops.
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace vffc

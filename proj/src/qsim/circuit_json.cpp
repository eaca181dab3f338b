#include "vffc/qsim/circuit_json.hpp"

#include "vffc/errors.hpp"

namespace vffc {

nlohmann::json circuit_to_json(const Circuit& circuit) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& op : circuit.ops) {
        nlohmann::json j;
        j["kind"] = std::string(to_string(op.kind));
        j["targets"] = op.targets;
        j["controls"] = op.controls;
        j["polarities"] = op.polarities;
        j["angle"] = op.angle;
        if (op.kind == GateKind::MultiControlled) j["inner"] = std::string(to_string(op.inner));
        ops.push_back(std::move(j));
    }
    return nlohmann::json{{"num_qubits", circuit.num_qubits}, {"ops", std::move(ops)}};
}

namespace {

std::vector<int> int_list(const nlohmann::json& j, const char* key, std::size_t index) {
    if (!j.contains(key)) return {};
    const auto& v = j.at(key);
    if (!v.is_array()) {
        throw ArgumentError("ops[" + std::to_string(index) + "]." + key + ": expected an array of integers");
    }
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) {
            throw ArgumentError("ops[" + std::to_string(index) + "]." + key + ": expected integers");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

}  // namespace

Circuit circuit_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num_qubits") || !j.at("num_qubits").is_number_integer()) {
        throw ArgumentError("circuit: missing integer field 'num_qubits'");
    }
    if (!j.contains("ops") || !j.at("ops").is_array()) {
        throw ArgumentError("circuit: missing array field 'ops'");
    }
    Circuit c(j.at("num_qubits").get<int>());
    std::size_t index = 0;
    for (const auto& e : j.at("ops")) {
        if (!e.is_object() || !e.contains("kind") || !e.at("kind").is_string()) {
            throw ArgumentError("ops[" + std::to_string(index) + "]: missing string field 'kind'");
        }
        GateOp op;
        op.kind = gate_kind_from_string(e.at("kind").get<std::string>());
        op.targets = int_list(e, "targets", index);
        op.controls = int_list(e, "controls", index);
        op.polarities = int_list(e, "polarities", index);
        if (e.contains("angle")) {
            if (!e.at("angle").is_number()) {
                throw ArgumentError("ops[" + std::to_string(index) + "].angle: expected a number");
            }
            op.angle = e.at("angle").get<double>();
        }
        if (op.kind == GateKind::MultiControlled) {
            if (!e.contains("inner") || !e.at("inner").is_string()) {
                throw ArgumentError("ops[" + std::to_string(index) + "]: MultiControlled needs 'inner'");
            }
            op.inner = gate_kind_from_string(e.at("inner").get<std::string>());
        }
        c.add(std::move(op));
        ++index;
    }
    validate(c);
    return c;
}

}  // namespace vffc

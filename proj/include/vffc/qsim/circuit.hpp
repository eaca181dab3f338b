#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vffc/types.hpp"

namespace vffc {

/**
 * @brief Gate vocabulary of the emulator.
 *
 * Angles follow these conventions (qubit 0 is the least significant bit):
 *  - Rz(a) = diag(1, e^{ia})
 *  - Rx(a) = exp(-i a X / 2), Ry(a) = exp(-i a Y / 2)
 *  - ZZ(a) = CNOT (1 x Rz(a)) CNOT, i.e. phase e^{ia} on odd parity
 *  - GlobalPhase(a) multiplies the state by e^{ia}
 */
enum class GateKind {
    X,
    Rz,
    Rx,
    Ry,
    CNOT,
    Toffoli,
    ZZ,
    ControlledRz,
    ControlledRx,
    GlobalPhase,
    MultiControlled,
};

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/**
 * @brief One gate application.
 *
 * Qubit roles by kind:
 *  - X, Rz, Rx, Ry: targets[0]
 *  - CNOT, ControlledRz, ControlledRx: controls[0] -> targets[0]
 *  - Toffoli: controls[0], controls[1] -> targets[0]
 *  - ZZ: targets[0], targets[1]
 *  - GlobalPhase: no qubits
 *  - MultiControlled: `inner` acts on `targets` when every control i reads
 *    polarities[i]; inner is one of X, Rz, Rx, Ry, ZZ, GlobalPhase.
 */
struct GateOp {
    GateKind kind = GateKind::X;
    std::vector<int> targets;
    std::vector<int> controls;
    std::vector<int> polarities;
    double angle = 0.0;
    GateKind inner = GateKind::X;

    bool operator==(const GateOp&) const = default;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    Circuit() = default;
    explicit Circuit(int qubits) : num_qubits(qubits) {}

    Circuit& add(GateOp op);
    Circuit& append(const Circuit& other);
    std::size_t size() const noexcept { return ops.size(); }

    bool operator==(const Circuit&) const = default;
};

namespace gates {
GateOp x(int q);
GateOp rz(int q, double angle);
GateOp rx(int q, double angle);
GateOp ry(int q, double angle);
GateOp cnot(int control, int target);
GateOp toffoli(int c0, int c1, int target);
GateOp zz(int a, int b, double angle);
GateOp crz(int control, int target, double angle);
GateOp crx(int control, int target, double angle);
GateOp global_phase(double angle);
GateOp multi_controlled(GateOp inner, std::vector<int> controls, std::vector<int> polarities);
}  // namespace gates

/// Qubits touched by the op, controls first.
std::vector<int> op_qubits(const GateOp& op);

/// True when the op is diagonal in the computational basis.
bool is_diagonal(const GateOp& op);

/// True when the op permutes basis states (X, CNOT, Toffoli and their controlled forms).
bool is_classical(const GateOp& op);

/// Throws ArgumentError for out-of-range or repeated qubits and malformed operand lists.
void validate(const GateOp& op, int num_qubits);
void validate(const Circuit& circuit);

GateOp inverse(const GateOp& op);
Circuit inverse(const Circuit& circuit);

/// Adds one control (with polarity) to every op of the circuit.
Circuit controlled(const Circuit& circuit, int control, int polarity);

/// Re-indexes qubits: qubit q becomes map[q]; the result has `num_qubits` wires.
Circuit remap(const Circuit& circuit, const std::vector<int>& map, int num_qubits);

/// Applies a permutation-only circuit to a single basis state.
std::uint64_t classical_apply(const Circuit& circuit, std::uint64_t basis);

}  // namespace vffc

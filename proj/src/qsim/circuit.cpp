#include "vffc/qsim/circuit.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "vffc/errors.hpp"

namespace vffc {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 11> kNames{{
    {GateKind::X, "X"},
    {GateKind::Rz, "Rz"},
    {GateKind::Rx, "Rx"},
    {GateKind::Ry, "Ry"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::Toffoli, "Toffoli"},
    {GateKind::ZZ, "ZZ"},
    {GateKind::ControlledRz, "ControlledRz"},
    {GateKind::ControlledRx, "ControlledRx"},
    {GateKind::GlobalPhase, "GlobalPhase"},
    {GateKind::MultiControlled, "MultiControlled"},
}};

bool is_rotation(GateKind k) {
    return k == GateKind::Rz || k == GateKind::Rx || k == GateKind::Ry || k == GateKind::ZZ ||
           k == GateKind::ControlledRz || k == GateKind::ControlledRx || k == GateKind::GlobalPhase;
}

std::size_t expected_targets(GateKind k) {
    switch (k) {
        case GateKind::ZZ:
            return 2;
        case GateKind::GlobalPhase:
            return 0;
        default:
            return 1;
    }
}

std::size_t expected_controls(GateKind k) {
    switch (k) {
        case GateKind::CNOT:
        case GateKind::ControlledRz:
        case GateKind::ControlledRx:
            return 1;
        case GateKind::Toffoli:
            return 2;
        default:
            return 0;
    }
}

}  // namespace

std::string_view to_string(GateKind kind) {
    for (const auto& [k, name] : kNames) {
        if (k == kind) return name;
    }
    return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
    for (const auto& [k, n] : kNames) {
        if (n == name) return k;
    }
    throw ArgumentError("unknown gate kind '" + std::string(name) + "'");
}

Circuit& Circuit::add(GateOp op) {
    ops.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits > num_qubits) {
        throw ArgumentError("cannot append a circuit on more wires than the destination");
    }
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    return *this;
}

namespace gates {

GateOp x(int q) { return GateOp{GateKind::X, {q}, {}, {}, 0.0}; }
GateOp rz(int q, double angle) { return GateOp{GateKind::Rz, {q}, {}, {}, angle}; }
GateOp rx(int q, double angle) { return GateOp{GateKind::Rx, {q}, {}, {}, angle}; }
GateOp ry(int q, double angle) { return GateOp{GateKind::Ry, {q}, {}, {}, angle}; }
GateOp cnot(int control, int target) { return GateOp{GateKind::CNOT, {target}, {control}, {}, 0.0}; }
GateOp toffoli(int c0, int c1, int target) { return GateOp{GateKind::Toffoli, {target}, {c0, c1}, {}, 0.0}; }
GateOp zz(int a, int b, double angle) { return GateOp{GateKind::ZZ, {a, b}, {}, {}, angle}; }
GateOp crz(int control, int target, double angle) {
    return GateOp{GateKind::ControlledRz, {target}, {control}, {}, angle};
}
GateOp crx(int control, int target, double angle) {
    return GateOp{GateKind::ControlledRx, {target}, {control}, {}, angle};
}
GateOp global_phase(double angle) { return GateOp{GateKind::GlobalPhase, {}, {}, {}, angle}; }

GateOp multi_controlled(GateOp inner, std::vector<int> controls, std::vector<int> polarities) {
    switch (inner.kind) {
        case GateKind::X:
        case GateKind::Rz:
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::ZZ:
        case GateKind::GlobalPhase:
            break;
        default:
            throw ArgumentError("multi_controlled: inner gate must be X, Rz, Rx, Ry, ZZ or GlobalPhase");
    }
    GateOp op;
    op.kind = GateKind::MultiControlled;
    op.inner = inner.kind;
    op.targets = std::move(inner.targets);
    op.controls = std::move(controls);
    op.polarities = std::move(polarities);
    op.angle = inner.angle;
    return op;
}

}  // namespace gates

std::vector<int> op_qubits(const GateOp& op) {
    std::vector<int> qs = op.controls;
    qs.insert(qs.end(), op.targets.begin(), op.targets.end());
    return qs;
}

bool is_diagonal(const GateOp& op) {
    const GateKind k = op.kind == GateKind::MultiControlled ? op.inner : op.kind;
    return k == GateKind::Rz || k == GateKind::ZZ || k == GateKind::ControlledRz || k == GateKind::GlobalPhase;
}

bool is_classical(const GateOp& op) {
    const GateKind k = op.kind == GateKind::MultiControlled ? op.inner : op.kind;
    return k == GateKind::X || k == GateKind::CNOT || k == GateKind::Toffoli;
}

void validate(const GateOp& op, int num_qubits) {
    const std::string name(to_string(op.kind));
    if (op.kind == GateKind::MultiControlled) {
        if (op.inner == GateKind::MultiControlled || expected_controls(op.inner) != 0) {
            throw ArgumentError("MultiControlled: unsupported inner gate " + std::string(to_string(op.inner)));
        }
        if (op.targets.size() != expected_targets(op.inner)) {
            throw ArgumentError("MultiControlled: wrong number of targets for inner gate");
        }
        if (op.polarities.size() != op.controls.size()) {
            throw ArgumentError("MultiControlled: polarities and controls differ in length");
        }
        for (int p : op.polarities) {
            if (p != 0 && p != 1) throw ArgumentError("MultiControlled: polarity must be 0 or 1");
        }
    } else {
        if (op.targets.size() != expected_targets(op.kind) || op.controls.size() != expected_controls(op.kind)) {
            throw ArgumentError(name + ": wrong number of operands");
        }
    }
    std::vector<int> qs = op_qubits(op);
    for (int q : qs) {
        if (q < 0 || q >= num_qubits) {
            throw ArgumentError(name + ": qubit index " + std::to_string(q) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
        }
    }
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw ArgumentError(name + ": repeated qubit operand");
    }
}

void validate(const Circuit& circuit) {
    if (circuit.num_qubits < 0 || circuit.num_qubits > 62) {
        throw ArgumentError("circuit width out of range");
    }
    for (const auto& op : circuit.ops) validate(op, circuit.num_qubits);
}

GateOp inverse(const GateOp& op) {
    GateOp inv = op;
    const GateKind k = op.kind == GateKind::MultiControlled ? op.inner : op.kind;
    if (is_rotation(k)) inv.angle = -op.angle;
    return inv;
}

Circuit inverse(const Circuit& circuit) {
    Circuit out(circuit.num_qubits);
    out.ops.reserve(circuit.ops.size());
    for (auto it = circuit.ops.rbegin(); it != circuit.ops.rend(); ++it) out.ops.push_back(inverse(*it));
    return out;
}

Circuit controlled(const Circuit& circuit, int control, int polarity) {
    Circuit out(circuit.num_qubits);
    for (const auto& op : circuit.ops) {
        GateOp inner;
        std::vector<int> ctrls{control};
        std::vector<int> pols{polarity};
        switch (op.kind) {
            case GateKind::X:
            case GateKind::Rz:
            case GateKind::Rx:
            case GateKind::Ry:
            case GateKind::ZZ:
            case GateKind::GlobalPhase:
                inner = op;
                break;
            case GateKind::CNOT:
                inner = gates::x(op.targets[0]);
                ctrls.push_back(op.controls[0]);
                pols.push_back(1);
                break;
            case GateKind::Toffoli:
                inner = gates::x(op.targets[0]);
                ctrls.insert(ctrls.end(), op.controls.begin(), op.controls.end());
                pols.insert(pols.end(), 2, 1);
                break;
            case GateKind::ControlledRz:
                inner = gates::rz(op.targets[0], op.angle);
                ctrls.push_back(op.controls[0]);
                pols.push_back(1);
                break;
            case GateKind::ControlledRx:
                inner = gates::rx(op.targets[0], op.angle);
                ctrls.push_back(op.controls[0]);
                pols.push_back(1);
                break;
            case GateKind::MultiControlled:
                inner = GateOp{op.inner, op.targets, {}, {}, op.angle};
                ctrls.insert(ctrls.end(), op.controls.begin(), op.controls.end());
                pols.insert(pols.end(), op.polarities.begin(), op.polarities.end());
                break;
        }
        out.add(gates::multi_controlled(std::move(inner), std::move(ctrls), std::move(pols)));
    }
    return out;
}

Circuit remap(const Circuit& circuit, const std::vector<int>& map, int num_qubits) {
    if (static_cast<int>(map.size()) < circuit.num_qubits) {
        throw ArgumentError("remap: map shorter than circuit width");
    }
    Circuit out(num_qubits);
    out.ops.reserve(circuit.ops.size());
    for (GateOp op : circuit.ops) {
        for (int& q : op.targets) q = map.at(static_cast<std::size_t>(q));
        for (int& q : op.controls) q = map.at(static_cast<std::size_t>(q));
        out.ops.push_back(std::move(op));
    }
    validate(out);
    return out;
}

std::uint64_t classical_apply(const Circuit& circuit, std::uint64_t basis) {
    auto bit = [&](int q) { return (basis >> q) & 1U; };
    for (const auto& op : circuit.ops) {
        if (!is_classical(op)) {
            throw ArgumentError("classical_apply: gate " + std::string(to_string(op.kind)) +
                                " is not a basis permutation");
        }
        bool fire = true;
        if (op.kind == GateKind::MultiControlled) {
            for (std::size_t i = 0; i < op.controls.size(); ++i) {
                fire = fire && static_cast<int>(bit(op.controls[i])) == op.polarities[i];
            }
        } else {
            for (int c : op.controls) fire = fire && bit(c) == 1U;
        }
        if (fire) basis ^= std::uint64_t{1} << op.targets[0];
    }
    return basis;
}

}  // namespace vffc

#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "vffc/errors.hpp"
#include "vffc/qsim/circuit.hpp"
#include "vffc/types.hpp"

namespace vffc {

inline constexpr int kMaxDenseQubits = 12;

namespace detail {

template <typename Real>
using Mat2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

template <typename Real>
Mat2<Real> single_qubit_matrix(GateKind kind, Real angle) {
    using C = std::complex<Real>;
    const C i(0, 1);
    Mat2<Real> m;
    switch (kind) {
        case GateKind::X:
            m << C(0), C(1), C(1), C(0);
            break;
        case GateKind::Rz:
        case GateKind::ControlledRz:
            m << C(1), C(0), C(0), std::exp(i * angle);
            break;
        case GateKind::Rx:
        case GateKind::ControlledRx: {
            const Real c = std::cos(angle / 2), s = std::sin(angle / 2);
            m << C(c), -i * s, -i * s, C(c);
            break;
        }
        case GateKind::Ry: {
            const Real c = std::cos(angle / 2), s = std::sin(angle / 2);
            m << C(c), C(-s), C(s), C(c);
            break;
        }
        default:
            throw ArgumentError("gate kind has no single-qubit matrix");
    }
    return m;
}

// Applies m to `target` on every basis pair whose control bits equal `cval` under `cmask`.
template <typename Derived, typename Real>
void apply_1q(Eigen::MatrixBase<Derived>& psi, int target, const Mat2<Real>& m, std::uint64_t cmask,
              std::uint64_t cval) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t dim = static_cast<std::uint64_t>(psi.rows());
    const bool x_like = m(0, 0) == std::complex<Real>(0) && m(1, 1) == std::complex<Real>(0) &&
                        m(0, 1) == std::complex<Real>(1) && m(1, 0) == std::complex<Real>(1);
    const bool diag = m(0, 1) == std::complex<Real>(0) && m(1, 0) == std::complex<Real>(0);
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        if (idx & tbit) continue;
        if ((idx & cmask) != cval) continue;
        const std::uint64_t j = idx | tbit;
        for (Eigen::Index col = 0; col < psi.cols(); ++col) {
            auto& a = psi(static_cast<Eigen::Index>(idx), col);
            auto& b = psi(static_cast<Eigen::Index>(j), col);
            if (x_like) {
                std::swap(a, b);
            } else if (diag) {
                a *= m(0, 0);
                b *= m(1, 1);
            } else {
                const auto a0 = a, b0 = b;
                a = m(0, 0) * a0 + m(0, 1) * b0;
                b = m(1, 0) * a0 + m(1, 1) * b0;
            }
        }
    }
}

template <typename Derived, typename Real>
void apply_parity_phase(Eigen::MatrixBase<Derived>& psi, int a, int b, Real angle, std::uint64_t cmask,
                        std::uint64_t cval) {
    const std::complex<Real> ph = std::exp(std::complex<Real>(0, angle));
    const std::uint64_t dim = static_cast<std::uint64_t>(psi.rows());
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        if ((idx & cmask) != cval) continue;
        if ((((idx >> a) ^ (idx >> b)) & 1U) == 0) continue;
        psi.row(static_cast<Eigen::Index>(idx)) *= ph;
    }
}

template <typename Derived, typename Real>
void apply_phase(Eigen::MatrixBase<Derived>& psi, Real angle, std::uint64_t cmask, std::uint64_t cval) {
    const std::complex<Real> ph = std::exp(std::complex<Real>(0, angle));
    if (cmask == 0) {
        psi *= ph;
        return;
    }
    const std::uint64_t dim = static_cast<std::uint64_t>(psi.rows());
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        if ((idx & cmask) == cval) psi.row(static_cast<Eigen::Index>(idx)) *= ph;
    }
}

// Runs one already-validated op on every column of psi.
template <typename Derived>
void apply_op(Eigen::MatrixBase<Derived>& psi, const GateOp& op) {
    using Real = typename Derived::Scalar::value_type;
    const Real angle = static_cast<Real>(op.angle);
    auto bit = [](int q) { return std::uint64_t{1} << q; };
    switch (op.kind) {
        case GateKind::X:
        case GateKind::Rz:
        case GateKind::Rx:
        case GateKind::Ry:
            apply_1q(psi, op.targets[0], single_qubit_matrix<Real>(op.kind, angle), 0, 0);
            return;
        case GateKind::CNOT:
            apply_1q(psi, op.targets[0], single_qubit_matrix<Real>(GateKind::X, Real(0)), bit(op.controls[0]),
                     bit(op.controls[0]));
            return;
        case GateKind::Toffoli: {
            const std::uint64_t cm = bit(op.controls[0]) | bit(op.controls[1]);
            apply_1q(psi, op.targets[0], single_qubit_matrix<Real>(GateKind::X, Real(0)), cm, cm);
            return;
        }
        case GateKind::ControlledRz:
        case GateKind::ControlledRx:
            apply_1q(psi, op.targets[0], single_qubit_matrix<Real>(op.kind, angle), bit(op.controls[0]),
                     bit(op.controls[0]));
            return;
        case GateKind::ZZ:
            apply_parity_phase(psi, op.targets[0], op.targets[1], angle, 0, 0);
            return;
        case GateKind::GlobalPhase:
            apply_phase(psi, angle, 0, 0);
            return;
        case GateKind::MultiControlled: {
            std::uint64_t cm = 0, cv = 0;
            for (std::size_t i = 0; i < op.controls.size(); ++i) {
                cm |= bit(op.controls[i]);
                if (op.polarities[i]) cv |= bit(op.controls[i]);
            }
            switch (op.inner) {
                case GateKind::ZZ:
                    apply_parity_phase(psi, op.targets[0], op.targets[1], angle, cm, cv);
                    return;
                case GateKind::GlobalPhase:
                    apply_phase(psi, angle, cm, cv);
                    return;
                default:
                    apply_1q(psi, op.targets[0], single_qubit_matrix<Real>(op.inner, angle), cm, cv);
                    return;
            }
        }
    }
}

template <typename Derived>
void apply_circuit_unchecked(Eigen::MatrixBase<Derived>& psi, const Circuit& circuit) {
    for (const auto& op : circuit.ops) apply_op(psi, op);
}

}  // namespace detail

template <typename Real>
Real state_norm(const StateVector<Real>& psi) {
    return psi.norm();
}

/**
 * @brief Runs `circuit` on a copy of `psi`.
 *
 * @throws ArgumentError when the state dimension is not 2^num_qubits or an op is malformed.
 * @throws ContractViolation when `psi` is not normalized.
 */
template <typename Real>
StateVector<Real> simulate(const Circuit& circuit, const StateVector<Real>& psi) {
    validate(circuit);
    if (psi.size() != (Eigen::Index{1} << circuit.num_qubits)) {
        throw ArgumentError("state dimension " + std::to_string(psi.size()) + " does not match " +
                            std::to_string(circuit.num_qubits) + " qubits");
    }
    if (std::abs(psi.norm() - Real(1)) > Real(1e-8)) {
        throw ContractViolation("input state is not normalized");
    }
    StateVector<Real> out = psi;
    detail::apply_circuit_unchecked(out, circuit);
    return out;
}

/// In-place variant without the normalization contract; used by propagation loops.
template <typename Real>
void apply_circuit(const Circuit& circuit, StateVector<Real>& psi) {
    if (psi.size() != (Eigen::Index{1} << circuit.num_qubits)) {
        throw ArgumentError("state dimension does not match circuit width");
    }
    detail::apply_circuit_unchecked(psi, circuit);
}

/// Dense matrix of the circuit; limited to kMaxDenseQubits wires.
template <typename Real>
DenseUnitary<Real> circuit_unitary(const Circuit& circuit) {
    validate(circuit);
    if (circuit.num_qubits > kMaxDenseQubits) {
        throw ResourceError("dense unitary requested for " + std::to_string(circuit.num_qubits) +
                            " qubits; limit is " + std::to_string(kMaxDenseQubits));
    }
    const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits;
    DenseUnitary<Real> u = DenseUnitary<Real>::Identity(dim, dim);
    detail::apply_circuit_unchecked(u, circuit);
    return u;
}

/// Diagonal of the circuit's unitary when every op is diagonal, otherwise nullopt.
template <typename Real>
std::optional<StateVector<Real>> circuit_diagonal(const Circuit& circuit) {
    for (const auto& op : circuit.ops) {
        if (!is_diagonal(op)) return std::nullopt;
    }
    validate(circuit);
    StateVector<Real> d = StateVector<Real>::Ones(Eigen::Index{1} << circuit.num_qubits);
    detail::apply_circuit_unchecked(d, circuit);
    return d;
}

/// |<a|b>|^2
template <typename Real>
Real state_fidelity(const StateVector<Real>& a, const StateVector<Real>& b) {
    if (a.size() != b.size()) throw ArgumentError("state_fidelity: dimension mismatch");
    return std::norm(a.dot(b));
}

/// <Z_q> = sum_k |psi_k|^2 (-1)^{bit_q(k)}
template <typename Real>
Real expectation_z(const StateVector<Real>& psi, int qubit) {
    const int nq = ceil_log2(static_cast<std::uint64_t>(psi.size()));
    if (qubit < 0 || qubit >= nq) throw ArgumentError("expectation_z: qubit index out of range");
    Real acc = 0;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        const Real p = std::norm(psi(k));
        acc += ((k >> qubit) & 1) ? -p : p;
    }
    return acc;
}

}  // namespace vffc

#pragma once

#include <optional>

#include "vffc/builders/comparator.hpp"
#include "vffc/builders/coupling.hpp"
#include "vffc/builders/quadratic.hpp"
#include "vffc/grid/grid.hpp"
#include "vffc/qsim/circuit.hpp"
#include "vffc/vff/ansatz.hpp"

namespace vffc {

/// Area-preserving step of `span` basis states centered on position `a` (default L/2).
struct CouplingSpec {
    double C0 = 0.01;
    double beta = 5.0;
    std::optional<double> a;
    int span = 3;
};

/**
 * @brief Two diabatic harmonic surfaces coupled through sigma_x on the objective qubit.
 *
 * V0(x) = A1 (x - L/2 - A0)^2 and V1(x) = A1 (x - L/2 + A0)^2 - dG, so dG > 0 is the driving
 * force that lowers surface 1.
 */
struct MarcusParams {
    GridSpec grid{8, 20.0};
    double mu = 1.0;
    double A1 = 0.015;
    double A0 = 1.5;
    double dG = 0.0;
    CouplingSpec coupling;
    double p0 = 0.0;
    double x0_packet = 0.0;

    /// @throws ArgumentError for n < 3, non-positive mu or A1, or a coupling window off the grid.
    void check() const;
};

enum class Mode { Explicit, Compressed };
const char* to_string(Mode m);
Mode mode_from_string(const std::string& s);

double reorganization_energy(const MarcusParams& p);
double well_frequency(const MarcusParams& p);

RealVector potential_v0(const MarcusParams& p);
RealVector potential_v1(const MarcusParams& p);
QuadraticPhases v0_phases(const MarcusParams& p, double tau);
QuadraticPhases v1_phases(const MarcusParams& p, double tau);

StepCoupling step_coupling(const MarcusParams& p);
RealVector coupling_values(const MarcusParams& p);

/// Position qubits, objective, ancillas and the comparators of the coupling window.
ComparatorLayout trotter_layout(const MarcusParams& p);

/// Kinetic, V0 and V1 ansatzes, each optimized for the half step tau / 2.
struct CompressedOperators {
    VffAnsatz kinetic;
    VffAnsatz v0;
    VffAnsatz v1;
};

/**
 * @brief One symmetric Trotter step: T(tau/2), V(tau/2), coupling(tau), V(tau/2), T(tau/2).
 *
 * Potentials are applied as V0 controlled on objective |0> and V1 on |1>. In compressed mode the
 * W layers stay unconditioned and only D is controlled.
 * @throws ArgumentError when compressed operators are missing or sized for another grid.
 */
Circuit build_trotter_step(const MarcusParams& p, Mode mode, double tau, const CompressedOperators* ops = nullptr);

/// Gaussian of width (mu omega)^{-1/2} at L/2 + A0 + x0_packet times e^{i p0 x}, objective |0>.
State initial_state(const MarcusParams& p);

}  // namespace vffc

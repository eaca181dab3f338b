#pragma once

#include "vffc/grid/grid.hpp"
#include "vffc/qsim/circuit.hpp"

namespace vffc {

/**
 * @brief Phase coefficients of exp(-i tau (eta (x - x0)^2 + delta)) on x = dx * k.
 *
 * The diagonal reads exp(i (phi1 - phi2 k + phi3 k^2)) with
 * phi1 = -tau (eta x0^2 + delta), phi2 = -2 tau eta x0 dx, phi3 = -tau eta dx^2.
 */
struct QuadraticPhases {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double phi3 = 0.0;
};

QuadraticPhases make_quadratic_phases(double eta, double x0, double delta, double tau, double dx);

/// exp(i (phi1 - phi2 k + phi3 k^2))
cplx quadratic_phase_factor(const QuadraticPhases& phases, std::uint64_t k);

/**
 * @brief Gate-level realization of the quadratic phase on qubits [offset, offset + n).
 *
 * The constant phase is carried by Rz(phi1) X Rz(phi1) X on the lowest qubit. With `reduced`
 * the linear and k_j^2 terms share one Rz per qubit and each unordered pair gets one controlled
 * Rz (2 + n Rz, n(n-1)/2 CRz); otherwise every ordered pair is kept (2(1 + n) Rz, n(n-1) CRz).
 */
Circuit explicit_quadratic_circuit(const QuadraticPhases& phases, int n, bool reduced, int offset = 0,
                                   int width = -1);

/// Phases of tau p^2 / (2 mu) over the centered momentum index.
QuadraticPhases kinetic_phases(const GridSpec& grid, double mu, double tau);

/// cQFT, quadratic momentum phase, inverse cQFT: exp(-i tau p^2 / 2 mu) in position space.
Circuit kinetic_circuit(const GridSpec& grid, double mu, double tau, bool reduced, int offset = 0,
                        int width = -1);

}  // namespace vffc

#pragma once

#include <cstdint>
#include <functional>

#include "vffc/qsim/circuit.hpp"
#include "vffc/types.hpp"

namespace vffc {

/**
 * @brief Uniform periodic grid of 2^n points on [0, L).
 *
 * Position index k maps to x = k * dx. Momentum index m holds p = (m - 2^{n-1}) * dp.
 */
struct GridSpec {
    int n = 8;
    double L = 20.0;

    std::uint64_t size() const { return std::uint64_t{1} << n; }
    double dx() const { return L / static_cast<double>(size()); }
    double dp() const { return 2.0 * kPi / L; }
    double nyquist() const { return kPi / dx(); }

    /// @throws ArgumentError unless 1 <= n <= 20 and L > 0.
    void check() const;
};

double position_of_index(const GridSpec& grid, std::uint64_t k);
double momentum_of_index(const GridSpec& grid, std::uint64_t m);

/// f(x_k) for every grid point. @throws DomainError when f returns a non-finite value.
RealVector sample_diagonal(const GridSpec& grid, const std::function<double(double)>& f);

/// Circuit for the centered DFT on qubits [offset, offset + n) of a `width`-qubit register.
/// Plane wave e^{i p x} / sqrt(N) is sent to momentum index m + N/2.
Circuit centered_qft_circuit(int n, int offset = 0, int width = -1);

/// Dense centered DFT: C(m, k) = exp(-i p_m x_k) / sqrt(N) in grid units.
Unitary centered_dft_matrix(int n);

/// p_m^2 / (2 mu) on the centered momentum grid.
RealVector kinetic_diagonal(const GridSpec& grid, double mu);

/// Position-space kinetic operator C^dagger diag(p^2 / 2 mu) C.
Unitary kinetic_matrix(const GridSpec& grid, double mu);

struct Eigensystem {
    RealVector energies;
    Unitary vectors;  ///< columns are eigenvectors, ascending energy
};

/// Eigenpairs of K + diag(potential) on the grid.
Eigensystem grid_eigensystem(const GridSpec& grid, const RealVector& potential, double mu);

/// Lowest eigenvector with its phase fixed so the largest component is real and positive.
State ground_state(const GridSpec& grid, const RealVector& potential, double mu);

}  // namespace vffc

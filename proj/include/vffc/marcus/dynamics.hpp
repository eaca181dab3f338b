#pragma once

#include <vector>

#include "vffc/marcus/model.hpp"
#include "vffc/vff/compress.hpp"

namespace vffc {

struct PopulationTrace {
    std::vector<double> times;
    std::vector<double> p0_values;
    std::vector<double> norm_values;
    std::vector<double> ancilla_population;  ///< weight on basis states with a nonzero ancilla or comparator bit
};

/**
 * @brief Applies the Trotter step `steps` times from initial_state, sampling after every step.
 *
 * The first sample is t = 0. @throws NumericError if the norm drifts by more than 1e-6.
 */
PopulationTrace simulate(const MarcusParams& p, Mode mode, double tau, int steps,
                         const CompressedOperators* ops = nullptr);

/// Diagonal compression targets for the half step tau / 2 (kinetic lives in momentum space).
CompressionTarget kinetic_target(const MarcusParams& p, double tau_half);
CompressionTarget v0_target(const MarcusParams& p, double tau_half);
CompressionTarget v1_target(const MarcusParams& p, double tau_half);

struct CompressionSettings {
    int l_kinetic = 4;
    int l_potential = 6;
    Topology topology = Topology::Linear;
    AdamConfig adam;
};

struct CompressedBundle {
    CompressedOperators ops;
    double kinetic_cost = 0.0;
    double v0_cost = 0.0;
    double v1_cost = 0.0;
    bool converged = false;
};

/// Compresses the three half-step operators of `p` for Trotter step tau.
CompressedBundle compress_operators(const MarcusParams& p, double tau, const CompressionSettings& settings);

/// Copy of `ops` with the V1 global phase re-aligned to the driving force in `p`.
CompressedOperators realign_v1(const CompressedOperators& ops, const MarcusParams& p, double tau);

}  // namespace vffc

#pragma once

#include <cstdint>
#include <limits>

#include "vffc/types.hpp"

namespace vffc {

struct AdamConfig {
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    int max_iters = 2000;
    /// Iterations without a new best cost before the learning rate is halved.
    int patience = 50;
    double cost_tolerance = 1e-10;
    std::uint64_t seed = 0;
    double init_scale = 0.1;

    /// @throws ArgumentError on non-positive rates, betas outside [0, 1), or negative budgets.
    void check() const;
};

struct OptimizerState {
    RealVector m;
    RealVector v;
    int t = 0;
    double learning_rate = 0.0;
    double best_cost = std::numeric_limits<double>::infinity();
    RealVector best_params;
    int best_iter = -1;
    int stall = 0;
};

OptimizerState make_optimizer_state(Eigen::Index dim, const AdamConfig& config);

/**
 * @brief One Adam update of `params` given the cost and gradient evaluated at `params`.
 *
 * The best (cost, params) pair is refreshed only on strict improvement, so ties keep the earliest
 * iterate. @throws NumericError for non-finite cost or gradient entries.
 */
void adam_step(OptimizerState& state, RealVector& params, const RealVector& grads, double cost,
               const AdamConfig& config);

/// Uniform draws in [-scale, scale] from a 64-bit Mersenne twister seeded with `seed`.
RealVector uniform_init(Eigen::Index dim, double scale, std::uint64_t seed);

}  // namespace vffc

#pragma once

#include <vector>

#include "vffc/vff/ansatz.hpp"
#include "vffc/vff/cost.hpp"
#include "vffc/vff/optimizer.hpp"
#include "vffc/walsh/walsh.hpp"

namespace vffc {

struct CompressConfig {
    int l = 1;
    Topology topology = Topology::Linear;
    double tau = 1.0;
    int layers_w = 1;
    AdamConfig adam;
    unsigned workers = 0;
};

struct HistoryRow {
    int iter = 0;
    double cost = 0.0;
    double best_cost = 0.0;
};

struct CompressResult {
    VffAnsatz ansatz;  ///< best iterate, with its global phase aligned to the target
    std::vector<HistoryRow> history;
    double best_cost = 0.0;
    bool converged = false;
};

/**
 * @brief Minimizes c_lhst over the ansatz parameters with Adam.
 *
 * Parameters start uniform in [-init_scale, init_scale] from the configured seed. Stops once the
 * cost drops below cost_tolerance; exhausting max_iters yields converged = false.
 */
CompressResult compress(const CompressionTarget& target, const CompressConfig& config);

/// Gate angles 2 tau c_mask of the exact diagonal for every mask kept by the ansatz.
RealVector analytic_thetas(const VffAnsatz& ansatz, const DiagonalSpec& walsh);

struct GlobalMinimumReport {
    std::vector<Mask> masks;
    RealVector fitted;      ///< optimized angles moved to the 2 pi branch nearest the analytic value
    RealVector analytic;
    double max_deviation = 0.0;
    /// Deviation after undoing pi shifts on a mask set with zero XOR, which leave D unchanged.
    double max_deviation_symmetric = 0.0;
    double alpha0 = 0.0;    ///< order-1 angles ~ alpha0 2^j
    double alpha1 = 0.0;    ///< order-2 angles ~ alpha1 2^(i+j)
    double r_squared = 0.0;
};

/// Compares optimized D angles with the Walsh expansion of the target phase function.
GlobalMinimumReport verify_global_minimum(const VffAnsatz& ansatz, const DiagonalSpec& walsh);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

}  // namespace vffc

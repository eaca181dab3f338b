#pragma once

#include <cstdint>
#include <vector>

#include "vffc/builders/comparator.hpp"
#include "vffc/grid/grid.hpp"
#include "vffc/qsim/circuit.hpp"

namespace vffc {

/// alpha * x + beta on one interval of the position grid (x in length units).
struct CouplingPiece {
    double alpha = 0.0;
    double beta = 0.0;
};

/**
 * @brief Coupling made of pieces on [b_{i}, b_{i+1}) with b_0 = 0 and b_P = 2^n.
 *
 * `breakpoints` holds the P - 1 interior grid indices in increasing order.
 */
struct PiecewiseCoupling {
    std::vector<std::uint64_t> breakpoints;
    std::vector<CouplingPiece> pieces;

    double value(const GridSpec& grid, std::uint64_t k) const;
};

/// Comparator computation, controlled X-rotations, and mirrored uncompute.
struct CouplingBlocks {
    std::vector<Circuit> compute;
    Circuit body;
    std::vector<Circuit> uncompute;

    Circuit assemble() const;
};

/**
 * @brief exp(-i tau V(x) sigma_x) on the objective qubit of `layout`.
 *
 * Comparator i holds [k < breakpoints[i]]; each piece fires controlled Rx rotations whose angles
 * add up to 2 tau (alpha x + beta).
 */
CouplingBlocks piecewise_coupling_blocks(const ComparatorLayout& layout, const GridSpec& grid,
                                         const PiecewiseCoupling& coupling, double tau);
Circuit piecewise_coupling_circuit(const ComparatorLayout& layout, const GridSpec& grid,
                                   const PiecewiseCoupling& coupling, double tau);

/// Constant coupling confined to grid indices [lo, hi].
struct StepCoupling {
    std::uint64_t lo = 127;
    std::uint64_t hi = 129;
    double C0 = 0.01;
    double beta = 5.0;
};

/// Height whose area over the window equals that of C0 exp(-beta (x - a)^2).
double step_height(const GridSpec& grid, const StepCoupling& step);

/// Piecewise form of the step; pieces outside the register are dropped.
PiecewiseCoupling step_as_piecewise(const GridSpec& grid, const StepCoupling& step);

/// Comparators needed by `step_as_piecewise`.
int step_comparator_count(const GridSpec& grid, const StepCoupling& step);

Circuit step_coupling_circuit(const ComparatorLayout& layout, const GridSpec& grid, const StepCoupling& step,
                              double tau);

}  // namespace vffc

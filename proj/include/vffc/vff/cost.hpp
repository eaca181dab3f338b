#pragma once

#include <optional>

#include "vffc/types.hpp"
#include "vffc/vff/ansatz.hpp"

namespace vffc {

/// Unitary to be compressed; diagonal targets keep their diagonal for the fast cost path.
struct CompressionTarget {
    int n = 0;
    Unitary matrix;
    std::optional<State> diagonal;

    static CompressionTarget from_matrix(const Unitary& u);
    static CompressionTarget from_diagonal(const State& d);
};

/// exp(-i tau f) as a diagonal target.
CompressionTarget diagonal_target(const RealVector& f, double tau);

struct CostReport {
    double lhst = 0.0;
    double hst = 0.0;
    RealVector pair_fidelity;  ///< probability of Phi+ on Bell pair j
};

/**
 * @brief Local and global Hilbert-Schmidt test costs between target U and ansatz V.
 *
 * Pair fidelities are those of the 2n-qubit Bell-pair protocol with U on register A and V* on
 * register B: F_j = 2^{-(n+1)} sum_{a,b} |sum_s M_{(a,s),(b,s)}|^2 with M = U V^dagger.
 * c_lhst = 1 - mean_j F_j, c_hst = 1 - |Tr(V^dagger U)|^2 / 4^n.
 */
CostReport lhst_cost_dense(const Unitary& u, const Unitary& v);

/// Same quantities for diagonal U and V given by their diagonals.
CostReport lhst_cost_diagonal(const State& u, const State& v);

/// Picks the diagonal path when both target and ansatz are diagonal.
CostReport lhst_cost(const CompressionTarget& target, const VffAnsatz& ansatz);

/**
 * @brief Exact gradient of c_lhst by parameter shifts of +-pi/2.
 *
 * D angles use the two-term rule; each W angle appears in W and W^dagger and uses four terms.
 * Evaluations run on `workers` threads (0 = hardware concurrency).
 */
RealVector parameter_shift_gradient(const CompressionTarget& target, const VffAnsatz& ansatz, unsigned workers = 0);

/// Phase phi minimizing ||U - e^{i phi} A||_F, i.e. arg Tr(A^dagger U).
double optimal_global_phase(const CompressionTarget& target, const VffAnsatz& ansatz);

}  // namespace vffc

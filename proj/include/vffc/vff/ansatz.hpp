#pragma once

#include <vector>

#include <json.hpp>

#include "vffc/qsim/circuit.hpp"
#include "vffc/types.hpp"
#include "vffc/walsh/walsh.hpp"

namespace vffc {

/**
 * @brief Diagonalization ansatz A = W D W^dagger.
 *
 * W has `layers_w` layers of (Rz on each qubit, ZZ on even bonds, ZZ on odd bonds). D applies one
 * rotation per mask: Rz(theta) for single-qubit masks and ZZ(theta) for pairs, so thetas are gate
 * angles. `global_phase` is a fixed phase carried with D; cost functions ignore it.
 */
struct VffAnsatz {
    int n = 0;
    int layers_w = 1;
    double tau = 1.0;
    int l = 1;
    Topology topology = Topology::Linear;
    RealVector gammas;
    std::vector<Mask> masks;
    RealVector thetas;
    double global_phase = 0.0;

    Eigen::Index num_parameters() const { return thetas.size() + gammas.size(); }
};

/// layers_w * (n + floor(n/2) + floor((n-1)/2))
int gamma_count(int n, int layers_w);

/// Zero-initialized ansatz whose D covers every order-1 and order-2 mask of locality <= l.
VffAnsatz make_ansatz(int n, int l, Topology topology, double tau, int layers_w = 1);

Circuit build_w(const VffAnsatz& ansatz);
Circuit build_d(const VffAnsatz& ansatz);

/// Gate order W^dagger, D, W so the matrix equals W D W^dagger.
Circuit ansatz_circuit(const VffAnsatz& ansatz);
Unitary ansatz_unitary(const VffAnsatz& ansatz);

/// Flattened parameters: thetas followed by gammas.
RealVector parameters(const VffAnsatz& ansatz);
void set_parameters(VffAnsatz& ansatz, const RealVector& params);

/// Same W, D angles and global phase multiplied by N: equals A^N.
VffAnsatz fast_forward(const VffAnsatz& ansatz, int N);

/// {n, layers_w, gammas, thetas:{mask: angle}, global_phase, tau, l, topology}
nlohmann::json ansatz_to_json(const VffAnsatz& ansatz);
VffAnsatz ansatz_from_json(const nlohmann::json& j);

}  // namespace vffc

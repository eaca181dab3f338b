#pragma once

#include <vector>

#include "vffc/qsim/circuit.hpp"
#include "vffc/types.hpp"
#include "vffc/vff/optimizer.hpp"

namespace vffc {

/**
 * @brief Real-amplitude loader: X on the top qubit, then `layers` blocks of (Ry layer, CNOT ladder)
 * and a final Ry layer. Takes n * (layers + 1) angles.
 */
Circuit ucc_circuit(int n, int layers, const RealVector& thetas);

struct WavepacketFit {
    int layers = 0;
    RealVector thetas;
    double fidelity = 0.0;
    std::vector<double> history;  ///< fidelity per iteration
};

/**
 * @brief Adam on 1 - |<target|U(theta)|0>|^2 with parameter-shift gradients.
 * @throws ArgumentError when the target is not normalized or its length is not a power of two.
 */
WavepacketFit fit_wavepacket(const State& target, int layers, const AdamConfig& config);

}  // namespace vffc

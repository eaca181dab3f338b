#include "vffc/builders/ucc.hpp"

#include <cmath>
#include <string>

#include "vffc/errors.hpp"
#include "vffc/qsim/simulator.hpp"

namespace vffc {

Circuit ucc_circuit(int n, int layers, const RealVector& thetas) {
    if (n < 1 || layers < 0) throw ArgumentError("ucc_circuit: need n >= 1 and layers >= 0");
    if (thetas.size() != static_cast<Eigen::Index>(n) * (layers + 1)) {
        throw ArgumentError("ucc_circuit: expected " + std::to_string(n * (layers + 1)) + " angles, got " +
                            std::to_string(thetas.size()));
    }
    Circuit c(n);
    c.add(gates::x(n - 1));
    Eigen::Index k = 0;
    for (int layer = 0; layer <= layers; ++layer) {
        for (int q = 0; q < n; ++q) c.add(gates::ry(q, thetas(k++)));
        if (layer == layers) break;
        for (int q = 0; q + 1 < n; ++q) c.add(gates::cnot(q, q + 1));
    }
    return c;
}

namespace {

double load_fidelity(const State& target, int n, int layers, const RealVector& thetas) {
    State zero = State::Zero(target.size());
    zero(0) = 1.0;
    return state_fidelity<double>(target, simulate<double>(ucc_circuit(n, layers, thetas), zero));
}

}  // namespace

WavepacketFit fit_wavepacket(const State& target, int layers, const AdamConfig& config) {
    const auto dim = static_cast<std::uint64_t>(target.size());
    if (dim < 2 || (dim & (dim - 1)) != 0) throw ArgumentError("fit_wavepacket: target length must be 2^n");
    if (std::abs(target.norm() - 1.0) > 1e-8) throw ArgumentError("fit_wavepacket: target is not normalized");
    const int n = ceil_log2(dim);
    RealVector theta = uniform_init(static_cast<Eigen::Index>(n) * (layers + 1), 0.1, config.seed);
    OptimizerState state = make_optimizer_state(theta.size(), config);
    WavepacketFit fit;
    fit.layers = layers;
    RealVector grad(theta.size());
    for (int it = 0; it < config.max_iters; ++it) {
        const double f = load_fidelity(target, n, layers, theta);
        fit.history.push_back(f);
        if (1.0 - f < config.cost_tolerance) {
            adam_step(state, theta, RealVector::Zero(theta.size()), 1.0 - f, config);
            break;
        }
        for (Eigen::Index i = 0; i < theta.size(); ++i) {
            RealVector tp = theta, tm = theta;
            tp(i) += kPi / 2;
            tm(i) -= kPi / 2;
            grad(i) = -0.5 * (load_fidelity(target, n, layers, tp) - load_fidelity(target, n, layers, tm));
        }
        adam_step(state, theta, grad, 1.0 - f, config);
    }
    const double last = load_fidelity(target, n, layers, theta);
    if (1.0 - last < state.best_cost) {
        fit.thetas = theta;
        fit.fidelity = last;
    } else {
        fit.thetas = state.best_params;
        fit.fidelity = 1.0 - state.best_cost;
    }
    return fit;
}

}  // namespace vffc

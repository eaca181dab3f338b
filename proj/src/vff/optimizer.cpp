#include "vffc/vff/optimizer.hpp"

#include <cmath>
#include <random>
#include <string>

#include "vffc/errors.hpp"

namespace vffc {

void AdamConfig::check() const {
    if (!(learning_rate > 0.0)) throw ArgumentError("adam: learning_rate must be positive");
    if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0)) {
        throw ArgumentError("adam: beta1 and beta2 must lie in [0, 1)");
    }
    if (!(epsilon > 0.0)) throw ArgumentError("adam: epsilon must be positive");
    if (max_iters < 0 || patience < 1) throw ArgumentError("adam: max_iters >= 0 and patience >= 1 required");
    if (!(init_scale >= 0.0)) throw ArgumentError("adam: init_scale must be non-negative");
}

OptimizerState make_optimizer_state(Eigen::Index dim, const AdamConfig& config) {
    config.check();
    OptimizerState s;
    s.m = RealVector::Zero(dim);
    s.v = RealVector::Zero(dim);
    s.learning_rate = config.learning_rate;
    return s;
}

void adam_step(OptimizerState& s, RealVector& params, const RealVector& grads, double cost,
               const AdamConfig& config) {
    if (grads.size() != params.size() || s.m.size() != params.size()) {
        throw ArgumentError("adam_step: dimension mismatch");
    }
    if (!std::isfinite(cost)) throw NumericError("adam_step: non-finite cost");
    for (Eigen::Index i = 0; i < grads.size(); ++i) {
        if (!std::isfinite(grads(i))) throw NumericError("adam_step: non-finite gradient component " + std::to_string(i));
    }
    if (cost < s.best_cost) {
        s.best_cost = cost;
        s.best_params = params;
        s.best_iter = s.t;
        s.stall = 0;
    } else if (++s.stall >= config.patience) {
        s.learning_rate *= 0.5;
        s.stall = 0;
    }
    ++s.t;
    s.m = config.beta1 * s.m + (1.0 - config.beta1) * grads;
    s.v = config.beta2 * s.v + (1.0 - config.beta2) * grads.cwiseAbs2();
    const double c1 = 1.0 - std::pow(config.beta1, s.t);
    const double c2 = 1.0 - std::pow(config.beta2, s.t);
    params.array() -= s.learning_rate * (s.m.array() / c1) / ((s.v.array() / c2).sqrt() + config.epsilon);
}

RealVector uniform_init(Eigen::Index dim, double scale, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-scale, scale);
    RealVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = scale > 0.0 ? dist(rng) : 0.0;
    return v;
}

}  // namespace vffc

#include "vffc/vff/compress.hpp"

#include <cmath>
#include <map>

#include "vffc/errors.hpp"

namespace vffc {

CompressResult compress(const CompressionTarget& target, const CompressConfig& config) {
    config.adam.check();
    VffAnsatz ansatz = make_ansatz(target.n, config.l, config.topology, config.tau, config.layers_w);
    RealVector params = uniform_init(ansatz.num_parameters(), config.adam.init_scale, config.adam.seed);
    set_parameters(ansatz, params);
    OptimizerState state = make_optimizer_state(params.size(), config.adam);

    CompressResult result;
    for (int it = 0; it < config.adam.max_iters; ++it) {
        set_parameters(ansatz, params);
        const double cost = lhst_cost(target, ansatz).lhst;
        if (cost < config.adam.cost_tolerance) {
            adam_step(state, params, RealVector::Zero(params.size()), cost, config.adam);
            result.history.push_back({it, cost, state.best_cost});
            break;
        }
        const RealVector grad = parameter_shift_gradient(target, ansatz, config.workers);
        adam_step(state, params, grad, cost, config.adam);
        result.history.push_back({it, cost, state.best_cost});
    }
    if (state.best_iter < 0) {
        set_parameters(ansatz, params);
        state.best_cost = lhst_cost(target, ansatz).lhst;
        state.best_params = params;
    }
    set_parameters(ansatz, state.best_params);
    ansatz.global_phase = optimal_global_phase(target, ansatz);
    result.ansatz = ansatz;
    result.best_cost = state.best_cost;
    result.converged = state.best_cost < config.adam.cost_tolerance;
    return result;
}

double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

RealVector analytic_thetas(const VffAnsatz& ansatz, const DiagonalSpec& walsh) {
    if (walsh.n != ansatz.n) throw ArgumentError("analytic_thetas: register sizes differ");
    std::map<Mask, double> coeff;
    for (const auto& t : walsh.terms) coeff[t.mask] += t.coeff;
    RealVector out(static_cast<Eigen::Index>(ansatz.masks.size()));
    for (std::size_t i = 0; i < ansatz.masks.size(); ++i) {
        auto it = coeff.find(ansatz.masks[i]);
        out(static_cast<Eigen::Index>(i)) = 2.0 * ansatz.tau * (it == coeff.end() ? 0.0 : it->second);
    }
    return out;
}

GlobalMinimumReport verify_global_minimum(const VffAnsatz& ansatz, const DiagonalSpec& walsh) {
    GlobalMinimumReport r;
    r.masks = ansatz.masks;
    r.analytic = analytic_thetas(ansatz, walsh);
    r.fitted.resize(r.analytic.size());
    for (Eigen::Index i = 0; i < r.analytic.size(); ++i) {
        const double dev = wrap_angle(ansatz.thetas(i) - r.analytic(i));
        r.fitted(i) = r.analytic(i) + dev;
        r.max_deviation = std::max(r.max_deviation, std::abs(dev));
    }
    Mask flipped = 0;
    double reduced = 0.0;
    for (Eigen::Index i = 0; i < r.analytic.size(); ++i) {
        double dev = wrap_angle(ansatz.thetas(i) - r.analytic(i));
        if (std::abs(dev) > kPi / 2) {
            flipped ^= ansatz.masks[static_cast<std::size_t>(i)];
            dev = wrap_angle(dev - kPi);
        }
        reduced = std::max(reduced, std::abs(dev));
    }
    r.max_deviation_symmetric = flipped == 0 ? reduced : r.max_deviation;
    // Binary-weight model: theta = alpha0 2^j (order 1), alpha1 2^(i+j) (order 2).
    double s0xy = 0, s0xx = 0, s1xy = 0, s1xx = 0;
    std::vector<double> basis(static_cast<std::size_t>(r.fitted.size()));
    for (std::size_t i = 0; i < ansatz.masks.size(); ++i) {
        const Mask m = ansatz.masks[i];
        const double w = popcount(m) == 1 ? std::ldexp(1.0, __builtin_ctz(m))
                                          : std::ldexp(1.0, __builtin_ctz(m) + (31 - __builtin_clz(m)));
        basis[i] = w;
        const double y = r.fitted(static_cast<Eigen::Index>(i));
        if (popcount(m) == 1) {
            s0xy += w * y;
            s0xx += w * w;
        } else {
            s1xy += w * y;
            s1xx += w * w;
        }
    }
    r.alpha0 = s0xx > 0 ? s0xy / s0xx : 0.0;
    r.alpha1 = s1xx > 0 ? s1xy / s1xx : 0.0;
    const double mean = r.fitted.size() > 0 ? r.fitted.mean() : 0.0;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < ansatz.masks.size(); ++i) {
        const double y = r.fitted(static_cast<Eigen::Index>(i));
        const double model = (popcount(ansatz.masks[i]) == 1 ? r.alpha0 : r.alpha1) * basis[i];
        ss_res += (y - model) * (y - model);
        ss_tot += (y - mean) * (y - mean);
    }
    r.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return r;
}

}  // namespace vffc

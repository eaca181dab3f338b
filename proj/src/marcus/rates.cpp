#include "vffc/marcus/rates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "vffc/errors.hpp"
#include "vffc/util/parallel.hpp"

namespace vffc {

RateResult extract_rate(const std::vector<double>& times, const std::vector<double>& p0, double t_max) {
    if (times.size() != p0.size()) throw ArgumentError("extract_rate: times and populations differ in length");
    std::vector<std::size_t> use;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] <= t_max) use.push_back(i);
    }
    if (use.size() < 3) {
        throw ArgumentError("extract_rate: need at least 3 samples with t <= " + std::to_string(t_max) + ", got " +
                            std::to_string(use.size()));
    }
    double mt = 0, mp = 0;
    for (auto i : use) {
        mt += times[i];
        mp += p0[i];
    }
    const double m = static_cast<double>(use.size());
    mt /= m;
    mp /= m;
    double sxy = 0, sxx = 0;
    for (auto i : use) {
        sxy += (times[i] - mt) * (p0[i] - mp);
        sxx += (times[i] - mt) * (times[i] - mt);
    }
    if (sxx == 0.0) throw ArgumentError("extract_rate: all samples share one time");
    const double slope = sxy / sxx;
    RateResult r;
    r.k = -slope;
    r.intercept = mp - slope * mt;
    double ss = 0;
    for (auto i : use) {
        const double e = p0[i] - (r.intercept + slope * times[i]);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / m);
    r.samples = static_cast<int>(use.size());
    r.t_min = times[use.front()];
    r.t_max = times[use.back()];
    return r;
}

RateResult extract_rate(const PopulationTrace& trace, double t_max) {
    return extract_rate(trace.times, trace.p0_values, t_max);
}

std::vector<ScanRow> rate_scan(const MarcusParams& p, const ScanRequest& req) {
    p.check();
    if (req.dG_values.empty()) throw ArgumentError("rate_scan: empty dG list");
    if (!(req.tau > 0.0)) throw ArgumentError("rate_scan: tau must be positive");
    const int steps = static_cast<int>(std::floor(req.t_max / req.tau + 1e-9));

    std::optional<CompressedOperators> base = req.operators;
    if (!base && std::find(req.modes.begin(), req.modes.end(), Mode::Compressed) != req.modes.end()) {
        base = compress_operators(p, req.tau, req.compression).ops;
    }

    std::vector<ScanRow> rows;
    for (Mode m : req.modes) {
        for (double dG : req.dG_values) rows.push_back(ScanRow{dG, m, req.tau, {}});
    }
    parallel_for(
        rows.size(),
        [&](std::size_t i) {
            MarcusParams q = p;
            q.dG = rows[i].dG;
            PopulationTrace trace;
            if (rows[i].mode == Mode::Compressed) {
                const CompressedOperators ops = realign_v1(*base, q, req.tau);
                trace = simulate(q, Mode::Compressed, req.tau, steps, &ops);
            } else {
                trace = simulate(q, Mode::Explicit, req.tau, steps);
            }
            rows[i].rate = extract_rate(trace, req.t_max);
            rows[i].rate.dG = rows[i].dG;
        },
        req.workers);
    return rows;
}

double marcus_rate_theory(const MarcusRateParams& params, double dG) {
    if (!(params.kT > 0.0)) throw ArgumentError("marcus_rate_theory: kT must be positive");
    if (!(params.lambda > 0.0)) throw ArgumentError("marcus_rate_theory: lambda must be positive");
    const double four_lkt = 4.0 * params.lambda * params.kT;
    return 2.0 * kPi * params.v_coup_sq / std::sqrt(kPi * four_lkt) *
           std::exp(-(dG + params.lambda) * (dG + params.lambda) / four_lkt);
}

namespace {

int count_bound(const RealVector& energies, const RealVector& potential) {
    const double rim = std::min(potential(0), potential(potential.size() - 1));
    return static_cast<int>((energies.array() < rim).count());
}

}  // namespace

FcRate fc_rate_low_temperature(const MarcusParams& p, double v_coup_sq, double window) {
    p.check();
    const RealVector v0 = potential_v0(p);
    const RealVector v1 = potential_v1(p);
    const Eigensystem s0 = grid_eigensystem(p.grid, v0, p.mu);
    const Eigensystem s1 = grid_eigensystem(p.grid, v1, p.mu);
    const int b0 = count_bound(s0.energies, v0);
    const int b1 = count_bound(s1.energies, v1);
    if (b0 < 3 || b1 < 3) {
        throw DomainError("fc_rate_low_temperature: wells hold " + std::to_string(b0) + " and " + std::to_string(b1) +
                          " bound states; at least 3 each are required");
    }
    FcRate r;
    r.e0 = s0.energies(0);
    r.energies = s1.energies;
    r.bound_states = b1;
    r.overlaps = (s1.vectors.adjoint() * s0.vectors.col(0)).cwiseAbs2();

    const Eigen::Index dim = r.energies.size();
    Eigen::Index near = 0;
    (r.energies.array() - r.e0).abs().minCoeff(&near);
    const Eigen::Index lo = std::max<Eigen::Index>(0, near - 1);
    const Eigen::Index hi = std::min<Eigen::Index>(dim - 1, near + 1);
    r.window = window > 0.0 ? window : (r.energies(hi) - r.energies(lo)) / static_cast<double>(hi - lo);

    double density = 0.0;
    for (Eigen::Index v = 0; v < dim; ++v) {
        const double d = (r.energies(v) - r.e0) / r.window;
        density += r.overlaps(v) * std::exp(-0.5 * d * d) / (std::sqrt(2.0 * kPi) * r.window);
    }
    r.rate = 2.0 * kPi * v_coup_sq * density;
    return r;
}

}  // namespace vffc

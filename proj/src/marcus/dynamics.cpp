#include "vffc/marcus/dynamics.hpp"

#include <cmath>
#include <string>

#include "vffc/errors.hpp"
#include "vffc/qsim/simulator.hpp"

namespace vffc {

PopulationTrace simulate(const MarcusParams& p, Mode mode, double tau, int steps, const CompressedOperators* ops) {
    if (steps < 0) throw ArgumentError("simulate: steps must be non-negative");
    const Circuit step = build_trotter_step(p, mode, tau, ops);
    const ComparatorLayout layout = trotter_layout(p);
    const int obj = layout.objective();
    const std::uint64_t logical_mask = (std::uint64_t{1} << (p.grid.n + 1)) - 1;
    State psi = initial_state(p);

    PopulationTrace trace;
    auto record = [&](int s) {
        const double norm = psi.norm();
        if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6) {
            throw NumericError("simulate: norm drifted to " + std::to_string(norm) + " at step " + std::to_string(s));
        }
        double leak = 0.0;
        for (Eigen::Index k = 0; k < psi.size(); ++k) {
            if (static_cast<std::uint64_t>(k) & ~logical_mask) leak += std::norm(psi(k));
        }
        trace.times.push_back(tau * s);
        trace.p0_values.push_back(0.5 * (expectation_z<double>(psi, obj) + 1.0));
        trace.norm_values.push_back(norm);
        trace.ancilla_population.push_back(leak);
    };
    record(0);
    for (int s = 1; s <= steps; ++s) {
        apply_circuit<double>(step, psi);
        record(s);
    }
    return trace;
}

CompressionTarget kinetic_target(const MarcusParams& p, double tau_half) {
    return diagonal_target(kinetic_diagonal(p.grid, p.mu), tau_half);
}

CompressionTarget v0_target(const MarcusParams& p, double tau_half) {
    return diagonal_target(potential_v0(p), tau_half);
}

CompressionTarget v1_target(const MarcusParams& p, double tau_half) {
    return diagonal_target(potential_v1(p), tau_half);
}

CompressedBundle compress_operators(const MarcusParams& p, double tau, const CompressionSettings& s) {
    p.check();
    const double half = tau / 2;
    CompressConfig kc{s.l_kinetic, s.topology, half, 1, s.adam, 0};
    CompressConfig vc{s.l_potential, s.topology, half, 1, s.adam, 0};
    const CompressResult k = compress(kinetic_target(p, half), kc);
    const CompressResult v0 = compress(v0_target(p, half), vc);
    const CompressResult v1 = compress(v1_target(p, half), vc);
    CompressedBundle b;
    b.ops = CompressedOperators{k.ansatz, v0.ansatz, v1.ansatz};
    b.kinetic_cost = k.best_cost;
    b.v0_cost = v0.best_cost;
    b.v1_cost = v1.best_cost;
    b.converged = k.converged && v0.converged && v1.converged;
    return b;
}

CompressedOperators realign_v1(const CompressedOperators& ops, const MarcusParams& p, double tau) {
    CompressedOperators out = ops;
    out.v1.global_phase = optimal_global_phase(v1_target(p, tau / 2), out.v1);
    return out;
}

}  // namespace vffc

#include "vffc/marcus/model.hpp"

#include <cmath>
#include <string>

#include "vffc/errors.hpp"

namespace vffc {

const char* to_string(Mode m) { return m == Mode::Explicit ? "explicit" : "compressed"; }

Mode mode_from_string(const std::string& s) {
    if (s == "explicit" || s == "Explicit") return Mode::Explicit;
    if (s == "compressed" || s == "Compressed") return Mode::Compressed;
    throw ArgumentError("unknown mode '" + s + "' (expected explicit or compressed)");
}

void MarcusParams::check() const {
    grid.check();
    if (grid.n < 3) throw ArgumentError("marcus: grid.n must be at least 3");
    if (!(mu > 0.0)) throw ArgumentError("marcus: mu must be positive");
    if (!(A1 > 0.0)) throw ArgumentError("marcus: A1 must be positive");
    if (!std::isfinite(A0) || !std::isfinite(dG) || !std::isfinite(p0) || !std::isfinite(x0_packet)) {
        throw ArgumentError("marcus: non-finite parameter");
    }
    if (coupling.span < 1) throw ArgumentError("marcus: coupling span must be at least 1");
    if (coupling.C0 < 0.0 || !(coupling.beta > 0.0)) throw ArgumentError("marcus: need C0 >= 0 and beta > 0");
    step_coupling(*this);
}

double reorganization_energy(const MarcusParams& p) { return p.A1 * (2.0 * p.A0) * (2.0 * p.A0); }

double well_frequency(const MarcusParams& p) { return std::sqrt(2.0 * p.A1 / p.mu); }

RealVector potential_v0(const MarcusParams& p) {
    const double c = p.grid.L / 2 + p.A0;
    return sample_diagonal(p.grid, [&](double x) { return p.A1 * (x - c) * (x - c); });
}

RealVector potential_v1(const MarcusParams& p) {
    const double c = p.grid.L / 2 - p.A0;
    return sample_diagonal(p.grid, [&](double x) { return p.A1 * (x - c) * (x - c) - p.dG; });
}

QuadraticPhases v0_phases(const MarcusParams& p, double tau) {
    return make_quadratic_phases(p.A1, p.grid.L / 2 + p.A0, 0.0, tau, p.grid.dx());
}

QuadraticPhases v1_phases(const MarcusParams& p, double tau) {
    return make_quadratic_phases(p.A1, p.grid.L / 2 - p.A0, -p.dG, tau, p.grid.dx());
}

StepCoupling step_coupling(const MarcusParams& p) {
    const double a = p.coupling.a.value_or(p.grid.L / 2);
    const auto center = static_cast<long long>(std::llround(a / p.grid.dx()));
    const long long lo = center - (p.coupling.span - 1) / 2;
    const long long hi = lo + p.coupling.span - 1;
    if (lo < 0 || hi >= static_cast<long long>(p.grid.size())) {
        throw ArgumentError("marcus: coupling window leaves the grid");
    }
    return StepCoupling{static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi), p.coupling.C0,
                        p.coupling.beta};
}

RealVector coupling_values(const MarcusParams& p) {
    const StepCoupling s = step_coupling(p);
    const double h = step_height(p.grid, s);
    RealVector v = RealVector::Zero(static_cast<Eigen::Index>(p.grid.size()));
    for (std::uint64_t k = s.lo; k <= s.hi; ++k) v(static_cast<Eigen::Index>(k)) = h;
    return v;
}

ComparatorLayout trotter_layout(const MarcusParams& p) {
    return ComparatorLayout::make(p.grid.n, step_comparator_count(p.grid, step_coupling(p)), true);
}

namespace {

Circuit embed(const Circuit& c, int width) {
    std::vector<int> map(static_cast<std::size_t>(c.num_qubits));
    for (int q = 0; q < c.num_qubits; ++q) map[static_cast<std::size_t>(q)] = q;
    return remap(c, map, width);
}

void check_ansatz(const VffAnsatz& a, const MarcusParams& p, const char* name) {
    if (a.n != p.grid.n) {
        throw ArgumentError(std::string("build_trotter_step: ") + name + " ansatz has n=" + std::to_string(a.n) +
                            ", grid has n=" + std::to_string(p.grid.n));
    }
}

Circuit compressed_potential(const VffAnsatz& a, int width, int objective, int polarity) {
    const Circuit w = embed(build_w(a), width);
    Circuit c(width);
    c.append(inverse(w));
    c.append(controlled(embed(build_d(a), width), objective, polarity));
    c.append(w);
    return c;
}

}  // namespace

Circuit build_trotter_step(const MarcusParams& p, Mode mode, double tau, const CompressedOperators* ops) {
    p.check();
    const ComparatorLayout layout = trotter_layout(p);
    const int width = layout.total_wires();
    const int n = p.grid.n;
    const int obj = layout.objective();
    const double half = tau / 2;

    Circuit kinetic(width);
    Circuit potentials(width);
    if (mode == Mode::Explicit) {
        kinetic = kinetic_circuit(p.grid, p.mu, half, true, 0, width);
        potentials.append(controlled(explicit_quadratic_circuit(v0_phases(p, half), n, true, 0, width), obj, 0));
        potentials.append(controlled(explicit_quadratic_circuit(v1_phases(p, half), n, true, 0, width), obj, 1));
    } else {
        if (ops == nullptr) throw ArgumentError("build_trotter_step: compressed mode needs compressed operators");
        check_ansatz(ops->kinetic, p, "kinetic");
        check_ansatz(ops->v0, p, "V0");
        check_ansatz(ops->v1, p, "V1");
        const Circuit qft = centered_qft_circuit(n, 0, width);
        kinetic.append(qft);
        kinetic.append(embed(ansatz_circuit(ops->kinetic), width));
        kinetic.append(inverse(qft));
        potentials.append(compressed_potential(ops->v0, width, obj, 0));
        potentials.append(compressed_potential(ops->v1, width, obj, 1));
    }

    Circuit step(width);
    step.append(kinetic);
    step.append(potentials);
    step.append(step_coupling_circuit(layout, p.grid, step_coupling(p), tau));
    step.append(potentials);
    step.append(kinetic);
    return step;
}

State initial_state(const MarcusParams& p) {
    p.check();
    const ComparatorLayout layout = trotter_layout(p);
    const double sigma = 1.0 / std::sqrt(p.mu * well_frequency(p));
    const double center = p.grid.L / 2 + p.A0 + p.x0_packet;
    State psi = State::Zero(Eigen::Index{1} << layout.total_wires());
    for (std::uint64_t k = 0; k < p.grid.size(); ++k) {
        const double x = p.grid.dx() * static_cast<double>(k);
        const double d = (x - center) / sigma;
        psi(static_cast<Eigen::Index>(k)) = std::polar(std::exp(-0.5 * d * d), p.p0 * x);
    }
    const double norm = psi.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw NumericError("initial_state: wavepacket vanishes on the grid");
    return psi / norm;
}

}  // namespace vffc

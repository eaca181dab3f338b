#include "vffc/builders/quadratic.hpp"

#include <cmath>

#include "vffc/errors.hpp"

namespace vffc {

QuadraticPhases make_quadratic_phases(double eta, double x0, double delta, double tau, double dx) {
    return QuadraticPhases{-tau * (eta * x0 * x0 + delta), -2.0 * tau * eta * x0 * dx, -tau * eta * dx * dx};
}

cplx quadratic_phase_factor(const QuadraticPhases& p, std::uint64_t k) {
    const double kk = static_cast<double>(k);
    return std::polar(1.0, p.phi1 - p.phi2 * kk + p.phi3 * kk * kk);
}

Circuit explicit_quadratic_circuit(const QuadraticPhases& p, int n, bool reduced, int offset, int width) {
    if (n < 1) throw ArgumentError("explicit_quadratic_circuit: n must be positive");
    if (width < 0) width = offset + n;
    if (offset < 0 || offset + n > width) throw ArgumentError("explicit_quadratic_circuit: register out of range");
    auto q = [&](int i) { return offset + i; };
    Circuit c(width);
    c.add(gates::rz(q(0), p.phi1)).add(gates::x(q(0))).add(gates::rz(q(0), p.phi1)).add(gates::x(q(0)));
    if (reduced) {
        for (int j = 0; j < n; ++j) {
            c.add(gates::rz(q(j), -p.phi2 * std::ldexp(1.0, j) + p.phi3 * std::ldexp(1.0, 2 * j)));
        }
        for (int j = 0; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) c.add(gates::crz(q(j), q(l), 2.0 * p.phi3 * std::ldexp(1.0, j + l)));
        }
    } else {
        for (int j = 0; j < n; ++j) c.add(gates::rz(q(j), -p.phi2 * std::ldexp(1.0, j)));
        for (int j = 0; j < n; ++j) c.add(gates::rz(q(j), p.phi3 * std::ldexp(1.0, 2 * j)));
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
                if (l != j) c.add(gates::crz(q(j), q(l), p.phi3 * std::ldexp(1.0, j + l)));
            }
        }
    }
    return c;
}

QuadraticPhases kinetic_phases(const GridSpec& grid, double mu, double tau) {
    grid.check();
    if (!(mu > 0.0)) throw ArgumentError("kinetic_phases: mass must be positive");
    const double x0 = grid.dp() * static_cast<double>(grid.size() / 2);
    return make_quadratic_phases(1.0 / (2.0 * mu), x0, 0.0, tau, grid.dp());
}

Circuit kinetic_circuit(const GridSpec& grid, double mu, double tau, bool reduced, int offset, int width) {
    if (width < 0) width = offset + grid.n;
    const Circuit qft = centered_qft_circuit(grid.n, offset, width);
    Circuit c(width);
    c.append(qft);
    c.append(explicit_quadratic_circuit(kinetic_phases(grid, mu, tau), grid.n, reduced, offset, width));
    c.append(inverse(qft));
    return c;
}

}  // namespace vffc

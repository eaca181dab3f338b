#include "vffc/grid/grid.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "vffc/errors.hpp"

namespace vffc {

void GridSpec::check() const {
    if (n < 1 || n > 20) throw ArgumentError("grid: n must lie in [1, 20], got " + std::to_string(n));
    if (!(L > 0.0) || !std::isfinite(L)) throw ArgumentError("grid: L must be positive and finite");
}

double position_of_index(const GridSpec& grid, std::uint64_t k) {
    grid.check();
    if (k >= grid.size()) throw ArgumentError("position index out of range");
    return grid.dx() * static_cast<double>(k);
}

double momentum_of_index(const GridSpec& grid, std::uint64_t m) {
    grid.check();
    if (m >= grid.size()) throw ArgumentError("momentum index out of range");
    return grid.dp() * (static_cast<double>(m) - static_cast<double>(grid.size() / 2));
}

RealVector sample_diagonal(const GridSpec& grid, const std::function<double(double)>& f) {
    grid.check();
    RealVector v(static_cast<Eigen::Index>(grid.size()));
    for (std::uint64_t k = 0; k < grid.size(); ++k) {
        const double y = f(grid.dx() * static_cast<double>(k));
        if (!std::isfinite(y)) {
            throw DomainError("sample_diagonal: non-finite value at index " + std::to_string(k));
        }
        v(static_cast<Eigen::Index>(k)) = y;
    }
    return v;
}

Circuit centered_qft_circuit(int n, int offset, int width) {
    if (n < 1) throw ArgumentError("centered_qft_circuit: n must be positive");
    if (width < 0) width = offset + n;
    if (offset < 0 || offset + n > width) throw ArgumentError("centered_qft_circuit: register out of range");
    Circuit c(width);
    auto q = [&](int i) { return offset + i; };
    for (int t = n - 1; t >= 0; --t) {
        c.add(gates::ry(q(t), kPi / 2)).add(gates::x(q(t)));
        for (int s = t - 1; s >= 0; --s) {
            c.add(gates::crz(q(s), q(t), -2.0 * kPi / std::ldexp(1.0, t - s + 1)));
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        const int a = q(i), b = q(n - 1 - i);
        c.add(gates::cnot(a, b)).add(gates::cnot(b, a)).add(gates::cnot(a, b));
    }
    c.add(gates::x(q(n - 1)));
    return c;
}

Unitary centered_dft_matrix(int n) {
    if (n < 1 || n > 14) throw ArgumentError("centered_dft_matrix: n out of range");
    const Eigen::Index N = Eigen::Index{1} << n;
    Unitary c(N, N);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    for (Eigen::Index m = 0; m < N; ++m) {
        for (Eigen::Index k = 0; k < N; ++k) {
            const auto phase = static_cast<double>(((m - N / 2) * k) % N + N) / static_cast<double>(N);
            c(m, k) = std::polar(scale, -2.0 * kPi * phase);
        }
    }
    return c;
}

RealVector kinetic_diagonal(const GridSpec& grid, double mu) {
    grid.check();
    if (!(mu > 0.0)) throw ArgumentError("kinetic_diagonal: mass must be positive");
    RealVector k(static_cast<Eigen::Index>(grid.size()));
    for (std::uint64_t m = 0; m < grid.size(); ++m) {
        const double p = grid.dp() * (static_cast<double>(m) - static_cast<double>(grid.size() / 2));
        k(static_cast<Eigen::Index>(m)) = p * p / (2.0 * mu);
    }
    return k;
}

Unitary kinetic_matrix(const GridSpec& grid, double mu) {
    const Unitary c = centered_dft_matrix(grid.n);
    const RealVector k = kinetic_diagonal(grid, mu);
    return c.adjoint() * k.cast<cplx>().asDiagonal() * c;
}

Eigensystem grid_eigensystem(const GridSpec& grid, const RealVector& potential, double mu) {
    grid.check();
    if (potential.size() != static_cast<Eigen::Index>(grid.size())) {
        throw ArgumentError("grid_eigensystem: potential length does not match grid");
    }
    Unitary h = kinetic_matrix(grid, mu);
    h.diagonal() += potential.cast<cplx>();
    h = 0.5 * (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Unitary> solver(h);
    if (solver.info() != Eigen::Success) throw NumericError("grid_eigensystem: eigensolver failed");
    return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

State ground_state(const GridSpec& grid, const RealVector& potential, double mu) {
    const Eigensystem es = grid_eigensystem(grid, potential, mu);
    State g = es.vectors.col(0);
    Eigen::Index imax = 0;
    g.cwiseAbs().maxCoeff(&imax);
    g *= std::polar(1.0, -std::arg(g(imax)));
    return g / g.norm();
}

}  // namespace vffc

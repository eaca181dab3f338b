#include "vffc/vff/cost.hpp"

#include <cmath>
#include <vector>

#include "vffc/errors.hpp"
#include "vffc/qsim/simulator.hpp"
#include "vffc/util/parallel.hpp"

namespace vffc {

CompressionTarget CompressionTarget::from_matrix(const Unitary& u) {
    const auto dim = static_cast<std::uint64_t>(u.rows());
    if (u.rows() != u.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
        throw ArgumentError("target: expected a square 2^n x 2^n matrix");
    }
    const double err = (u.adjoint() * u - Unitary::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-8) throw ArgumentError("target: matrix is not unitary");
    CompressionTarget t;
    t.n = ceil_log2(dim);
    t.matrix = u;
    Unitary off = u;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() == 0.0) t.diagonal = State(u.diagonal());
    return t;
}

CompressionTarget CompressionTarget::from_diagonal(const State& d) {
    const auto dim = static_cast<std::uint64_t>(d.size());
    if (dim < 2 || (dim & (dim - 1)) != 0) throw ArgumentError("target: diagonal length must be 2^n");
    if ((d.cwiseAbs().array() - 1.0).abs().maxCoeff() > 1e-10) throw ArgumentError("target: entries must be unimodular");
    CompressionTarget t;
    t.n = ceil_log2(dim);
    t.diagonal = d;
    t.matrix = d.asDiagonal();
    return t;
}

CompressionTarget diagonal_target(const RealVector& f, double tau) {
    State d(f.size());
    for (Eigen::Index k = 0; k < f.size(); ++k) d(k) = std::polar(1.0, -tau * f(k));
    return CompressionTarget::from_diagonal(d);
}

CostReport lhst_cost_dense(const Unitary& u, const Unitary& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
        throw ArgumentError("lhst_cost: dimension mismatch");
    }
    const auto dim = static_cast<std::uint64_t>(u.rows());
    const int n = ceil_log2(dim);
    if (n < 1 || n > 8) throw ResourceError("lhst_cost: supported for 1 <= n <= 8");
    const Unitary m = u * v.adjoint();
    CostReport r;
    r.pair_fidelity.resize(n);
    const double scale = std::ldexp(1.0, -(n + 1));
    for (int j = 0; j < n; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        double acc = 0.0;
        for (std::uint64_t a = 0; a < dim; ++a) {
            if (a & bit) continue;
            for (std::uint64_t b = 0; b < dim; ++b) {
                if (b & bit) continue;
                acc += std::norm(m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +
                                 m(static_cast<Eigen::Index>(a | bit), static_cast<Eigen::Index>(b | bit)));
            }
        }
        r.pair_fidelity(j) = scale * acc;
    }
    r.lhst = 1.0 - r.pair_fidelity.mean();
    r.hst = 1.0 - std::norm(m.trace()) / static_cast<double>(dim * dim);
    return r;
}

CostReport lhst_cost_diagonal(const State& u, const State& v) {
    if (u.size() != v.size()) throw ArgumentError("lhst_cost: dimension mismatch");
    const auto dim = static_cast<std::uint64_t>(u.size());
    const int n = ceil_log2(dim);
    if (n < 1 || n > 24) throw ResourceError("lhst_cost: register size out of range");
    const State m = u.cwiseProduct(v.conjugate());
    CostReport r;
    r.pair_fidelity.resize(n);
    for (int j = 0; j < n; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        double acc = 0.0;
        for (std::uint64_t a = 0; a < dim; ++a) {
            if (a & bit) continue;
            acc += std::real(m(static_cast<Eigen::Index>(a)) * std::conj(m(static_cast<Eigen::Index>(a | bit))));
        }
        r.pair_fidelity(j) = 0.5 + acc / static_cast<double>(dim);
    }
    r.lhst = 1.0 - r.pair_fidelity.mean();
    r.hst = 1.0 - std::norm(m.sum()) / static_cast<double>(dim * dim);
    return r;
}

namespace {

void check_sizes(const CompressionTarget& target, const VffAnsatz& ansatz) {
    if (target.n != ansatz.n) throw ArgumentError("lhst_cost: target and ansatz register sizes differ");
}

}  // namespace

CostReport lhst_cost(const CompressionTarget& target, const VffAnsatz& ansatz) {
    check_sizes(target, ansatz);
    const Circuit circuit = ansatz_circuit(ansatz);
    if (target.diagonal) {
        if (auto d = circuit_diagonal<double>(circuit)) return lhst_cost_diagonal(*target.diagonal, *d);
    }
    return lhst_cost_dense(target.matrix, circuit_unitary<double>(circuit));
}

RealVector parameter_shift_gradient(const CompressionTarget& target, const VffAnsatz& ansatz, unsigned workers) {
    check_sizes(target, ansatz);
    const RealVector p0 = parameters(ansatz);
    const Eigen::Index n_theta = ansatz.thetas.size();
    const double s = kPi / 2;

    // Each evaluation is (parameter index, shift on W side, shift on W^dagger side).
    struct Eval {
        Eigen::Index index;
        double shift_w;
        double shift_wdag;
    };
    std::vector<Eval> evals;
    for (Eigen::Index i = 0; i < p0.size(); ++i) {
        if (i < n_theta) {
            evals.push_back({i, s, s});
            evals.push_back({i, -s, -s});
        } else {
            evals.push_back({i, s, 0.0});
            evals.push_back({i, -s, 0.0});
            evals.push_back({i, 0.0, s});
            evals.push_back({i, 0.0, -s});
        }
    }
    std::vector<double> values(evals.size());
    parallel_for(
        evals.size(),
        [&](std::size_t e) {
            const Eval& ev = evals[e];
            VffAnsatz shifted = ansatz;
            if (ev.index < n_theta) {
                shifted.thetas(ev.index) += ev.shift_w;
                values[e] = lhst_cost(target, shifted).lhst;
                return;
            }
            // W and W^dagger are built separately so that only one side carries the shift.
            VffAnsatz left = ansatz, right = ansatz;
            left.gammas(ev.index - n_theta) += ev.shift_w;
            right.gammas(ev.index - n_theta) += ev.shift_wdag;
            Circuit c(ansatz.n);
            c.append(inverse(build_w(right)));
            c.append(build_d(ansatz));
            c.append(build_w(left));
            if (target.diagonal) {
                if (auto d = circuit_diagonal<double>(c)) {
                    values[e] = lhst_cost_diagonal(*target.diagonal, *d).lhst;
                    return;
                }
            }
            values[e] = lhst_cost_dense(target.matrix, circuit_unitary<double>(c)).lhst;
        },
        workers);

    RealVector g = RealVector::Zero(p0.size());
    std::size_t e = 0;
    for (Eigen::Index i = 0; i < p0.size(); ++i) {
        if (i < n_theta) {
            g(i) = 0.5 * (values[e] - values[e + 1]);
            e += 2;
        } else {
            g(i) = 0.5 * (values[e] - values[e + 1] + values[e + 2] - values[e + 3]);
            e += 4;
        }
    }
    return g;
}

double optimal_global_phase(const CompressionTarget& target, const VffAnsatz& ansatz) {
    check_sizes(target, ansatz);
    VffAnsatz bare = ansatz;
    bare.global_phase = 0.0;
    const Circuit circuit = ansatz_circuit(bare);
    cplx overlap;
    if (target.diagonal) {
        if (auto d = circuit_diagonal<double>(circuit)) {
            overlap = d->conjugate().cwiseProduct(*target.diagonal).sum();
            return std::arg(overlap);
        }
    }
    overlap = (circuit_unitary<double>(circuit).adjoint() * target.matrix).trace();
    return std::arg(overlap);
}

}  // namespace vffc

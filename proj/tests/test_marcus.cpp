#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracle.hpp"
#include "vffc/errors.hpp"
#include "vffc/marcus/dynamics.hpp"
#include "vffc/marcus/rates.hpp"
#include "vffc/qsim/simulator.hpp"

using namespace vffc;

namespace {

MarcusParams small_model(int n) {
    MarcusParams p;
    p.grid = GridSpec{n, 20.0};
    p.dG = 0.1;
    return p;
}

// Logical Hamiltonian on index k + N * obj built from the model definition.
struct DenseModel {
    Unitary kinetic, vdiag, vcoup;
};

DenseModel dense_model(const MarcusParams& p) {
    const int n = p.grid.n;
    const Eigen::Index N = Eigen::Index{1} << n;
    const double dx = p.grid.L / double(N);
    const double dp = 2 * kPi / p.grid.L;
    Eigen::VectorXcd kd(N);
    for (Eigen::Index m = 0; m < N; ++m) {
        const double q = dp * double(m - N / 2);
        kd(m) = q * q / (2 * p.mu);
    }
    const Unitary f = oracle::centered_dft(n);
    const Unitary k1 = f.adjoint() * kd.asDiagonal() * f;

    DenseModel d;
    d.kinetic = Unitary::Zero(2 * N, 2 * N);
    d.kinetic.topLeftCorner(N, N) = k1;
    d.kinetic.bottomRightCorner(N, N) = k1;
    d.vdiag = Unitary::Zero(2 * N, 2 * N);
    d.vcoup = Unitary::Zero(2 * N, 2 * N);
    const double c0 = p.grid.L / 2 + p.A0, c1 = p.grid.L / 2 - p.A0;
    const double area = p.coupling.C0 * std::sqrt(kPi / p.coupling.beta);
    const long long centre = std::llround(p.coupling.a.value_or(p.grid.L / 2) / dx);
    const long long lo = centre - (p.coupling.span - 1) / 2;
    const double h = area / (p.coupling.span * dx);
    for (Eigen::Index k = 0; k < N; ++k) {
        const double x = dx * double(k);
        d.vdiag(k, k) = p.A1 * (x - c0) * (x - c0);
        d.vdiag(k + N, k + N) = p.A1 * (x - c1) * (x - c1) - p.dG;
        if (k >= lo && k < lo + p.coupling.span) {
            d.vcoup(k, k + N) = h;
            d.vcoup(k + N, k) = h;
        }
    }
    return d;
}

Unitary splitting_step(const DenseModel& d, double tau) {
    const Unitary k = oracle::expm_hermitian(d.kinetic, tau / 2);
    const Unitary v = oracle::expm_hermitian(d.vdiag, tau / 2);
    const Unitary c = oracle::expm_hermitian(d.vcoup, tau);
    return k * v * c * v * k;
}

// Block of the circuit unitary on inputs and outputs with every ancilla in |0>.
Unitary logical_block(const Circuit& c, int logical) {
    const Unitary u = circuit_unitary<double>(c);
    const Eigen::Index d = Eigen::Index{1} << logical;
    return u.topLeftCorner(d, d);
}

State logical_state(const State& psi, int logical) { return psi.head(Eigen::Index{1} << logical); }

}  // namespace

TEST(Marcus, ExplicitStepMatchesDenseSplitting) {
    for (double dG : {0.0, 0.1, -0.05}) {
        MarcusParams p = small_model(4);
        p.dG = dG;
        const Circuit step = build_trotter_step(p, Mode::Explicit, 1.0);
        const Unitary got = logical_block(step, 5);
        const Unitary want = splitting_step(dense_model(p), 1.0);
        EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-8) << "dG=" << dG;
        EXPECT_LT((got.adjoint() * got - Unitary::Identity(32, 32)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Marcus, ExplicitStepWithStrongCouplingMatchesDense) {
    MarcusParams p = small_model(4);
    p.coupling.C0 = 0.5;
    p.coupling.span = 5;
    const Unitary got = logical_block(build_trotter_step(p, Mode::Explicit, 0.7), 5);
    EXPECT_LT((got - splitting_step(dense_model(p), 0.7)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Marcus, TrotterErrorIsThirdOrderPerStep) {
    MarcusParams p = small_model(4);
    p.coupling.C0 = 0.5;
    const DenseModel d = dense_model(p);
    const Unitary h = d.kinetic + d.vdiag + d.vcoup;
    const State psi0 = logical_state(initial_state(p), 5);
    std::vector<double> lt, le;
    for (double tau : {1.0, 0.5, 0.25, 0.125}) {
        const Unitary step = logical_block(build_trotter_step(p, Mode::Explicit, tau), 5);
        const State a = step * psi0;
        const State b = oracle::expm_hermitian(h, tau) * psi0;
        lt.push_back(std::log(tau));
        le.push_back(std::log((a - b).norm()));
    }
    double mt = 0, me = 0;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        mt += lt[i];
        me += le[i];
    }
    mt /= double(lt.size());
    me /= double(le.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        sxy += (lt[i] - mt) * (le[i] - me);
        sxx += (lt[i] - mt) * (lt[i] - mt);
    }
    EXPECT_NEAR(sxy / sxx, 3.0, 0.2);
}

TEST(Marcus, ZeroTimeStepIsIdentity) {
    const MarcusParams p = small_model(4);
    const Unitary u = logical_block(build_trotter_step(p, Mode::Explicit, 0.0), 5);
    EXPECT_LT((u - Unitary::Identity(32, 32)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Marcus, NoCouplingKeepsPopulationOnDonor) {
    MarcusParams p = small_model(6);
    p.coupling.C0 = 0.0;
    const PopulationTrace t = simulate(p, Mode::Explicit, 1.0, 40);
    for (double v : t.p0_values) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(Marcus, ConservationAlongTrajectory) {
    MarcusParams p;
    p.dG = 0.15;
    p.coupling.C0 = 0.05;
    const PopulationTrace t = simulate(p, Mode::Explicit, 1.0, 60);
    ASSERT_EQ(t.times.size(), 61u);
    for (std::size_t i = 0; i < t.times.size(); ++i) {
        EXPECT_NEAR(t.norm_values[i], 1.0, 1e-8);
        EXPECT_LT(t.ancilla_population[i], 1e-10);
        EXPECT_GE(t.p0_values[i], -1e-12);
        EXPECT_LE(t.p0_values[i], 1.0 + 1e-12);
    }
    EXPECT_LT(t.p0_values.back(), 1.0);
}

TEST(Marcus, PopulationsSumToOne) {
    MarcusParams p = small_model(5);
    p.coupling.C0 = 0.3;
    const Circuit step = build_trotter_step(p, Mode::Explicit, 1.0);
    const int obj = trotter_layout(p).objective();
    State psi = initial_state(p);
    for (int s = 0; s < 30; ++s) {
        apply_circuit<double>(step, psi);
        double p0 = 0, p1 = 0;
        for (Eigen::Index k = 0; k < psi.size(); ++k) ((k >> obj) & 1 ? p1 : p0) += std::norm(psi(k));
        EXPECT_NEAR(p0 + p1, 1.0, 1e-10);
    }
}

TEST(Marcus, InitialStateIsNormalizedGaussianOnDonor) {
    MarcusParams p;
    p.x0_packet = -1.0;
    const State psi = initial_state(p);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    const double dx = p.grid.dx();
    double mean = 0;
    for (Eigen::Index k = 0; k < 256; ++k) mean += std::norm(psi(k)) * dx * double(k);
    EXPECT_NEAR(mean, 10.0 + 1.5 - 1.0, 1e-6);
    EXPECT_NEAR(psi.head(256).squaredNorm(), 1.0, 1e-12);
}

TEST(Marcus, UntruncatedCompressionReproducesExplicitDynamics) {
    MarcusParams p = small_model(4);
    p.coupling.C0 = 0.2;
    CompressionSettings s;
    s.l_kinetic = 4;
    s.l_potential = 4;
    s.adam.max_iters = 1500;
    const CompressedBundle b = compress_operators(p, 1.0, s);
    EXPECT_LT(std::max({b.kinetic_cost, b.v0_cost, b.v1_cost}), 1e-6);
    const PopulationTrace e = simulate(p, Mode::Explicit, 1.0, 50);
    const PopulationTrace c = simulate(p, Mode::Compressed, 1.0, 50, &b.ops);
    for (std::size_t i = 0; i < e.times.size(); ++i) EXPECT_NEAR(e.p0_values[i], c.p0_values[i], 1e-3);
}

TEST(Marcus, CompressedModeNeedsOperators) {
    const MarcusParams p = small_model(4);
    EXPECT_THROW(build_trotter_step(p, Mode::Compressed, 1.0), ArgumentError);
}

TEST(Marcus, ParameterChecks) {
    MarcusParams p;
    p.mu = 0;
    EXPECT_THROW(p.check(), ArgumentError);
    p = MarcusParams{};
    p.coupling.a = 0.0;
    EXPECT_THROW(p.check(), ArgumentError);
    p = MarcusParams{};
    p.grid.n = 2;
    EXPECT_THROW(p.check(), ArgumentError);
    EXPECT_NEAR(reorganization_energy(MarcusParams{}), 0.135, 1e-15);
}

TEST(Rates, ExtractRateRecoversLinearDecay) {
    std::vector<double> t, p;
    for (int i = 0; i <= 100; ++i) {
        t.push_back(i);
        p.push_back(1.0 - 0.001 * i);
    }
    const RateResult r = extract_rate(t, p);
    EXPECT_NEAR(r.k, 0.001, 1e-12);
    EXPECT_NEAR(r.intercept, 1.0, 1e-12);
    EXPECT_EQ(r.samples, 101);
}

TEST(Rates, ExtractRateWithNoiseWithinOnePercent) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 1e-5);
    std::vector<double> t, p;
    for (int i = 0; i <= 100; ++i) {
        t.push_back(i);
        p.push_back(1.0 - 0.002 * i + g(rng));
    }
    EXPECT_NEAR(extract_rate(t, p).k, 0.002, 0.002 * 0.01);
}

TEST(Rates, ExtractRateEdgeCases) {
    const std::vector<double> t{0, 1, 2, 3, 4};
    const std::vector<double> flat(5, 0.7);
    EXPECT_EQ(extract_rate(t, flat).k, 0.0);
    EXPECT_THROW(extract_rate({0, 1}, {1, 1}), ArgumentError);
    EXPECT_THROW(extract_rate(t, flat, 1.5), ArgumentError);
    EXPECT_THROW(extract_rate(t, {1, 1}), ArgumentError);
    EXPECT_EQ(extract_rate(t, flat, 2.0).samples, 3);
}

TEST(Rates, MarcusTheorySymmetryAndPeak) {
    const MarcusRateParams m;
    const double top = marcus_rate_theory(m, -m.lambda);
    EXPECT_NEAR(top, 2 * kPi * m.v_coup_sq / std::sqrt(4 * kPi * m.lambda * m.kT), 1e-15);
    for (double d : {0.01, 0.05, 0.1}) {
        EXPECT_NEAR(marcus_rate_theory(m, -m.lambda + d), marcus_rate_theory(m, -m.lambda - d), 1e-18);
        EXPECT_LT(marcus_rate_theory(m, -m.lambda + d), top);
    }
    EXPECT_NEAR(marcus_rate_theory(m, 0.0), 1.650684889e-4, 1e-12);
    MarcusRateParams bad = m;
    bad.kT = 0;
    EXPECT_THROW(marcus_rate_theory(bad, 0.0), ArgumentError);
}

TEST(Rates, FranckCondonOverlapsAreComplete) {
    MarcusParams p;
    p.mu = 4.0;
    const FcRate r = fc_rate_low_temperature(p, 1e-4);
    EXPECT_NEAR(r.overlaps.sum(), 1.0, 1e-8);
    EXPECT_GT(r.rate, 0.0);
    EXPECT_GE(r.bound_states, 3);
}

TEST(Rates, IdenticalSurfacesOverlapOnlyGroundState) {
    MarcusParams p;
    p.A0 = 0.0;
    const FcRate r = fc_rate_low_temperature(p, 1e-4);
    EXPECT_NEAR(r.overlaps(0), 1.0, 1e-8);
}

TEST(Rates, DisplacedOscillatorsGivePoissonFactors) {
    MarcusParams p;
    p.mu = 4.0;
    const FcRate r = fc_rate_low_temperature(p, 1e-4);
    const double s = p.mu * well_frequency(p) * (2 * p.A0) * (2 * p.A0) / 2;
    double fact = 1;
    for (int v = 0; v <= 5; ++v) {
        if (v > 0) fact *= v;
        const double poisson = std::exp(-s) * std::pow(s, v) / fact;
        EXPECT_NEAR(r.overlaps(v), poisson, 0.02 * poisson) << "v=" << v;
    }
}

TEST(Rates, ShallowWellsAreRejected) {
    MarcusParams p;
    p.A1 = 1e-6;
    EXPECT_THROW(fc_rate_low_temperature(p, 1e-4), DomainError);
}

TEST(Rates, ScanRowsFollowModeThenDriving) {
    MarcusParams p = small_model(4);
    p.coupling.C0 = 0.2;
    ScanRequest req;
    req.dG_values = {0.0, 0.1};
    req.t_max = 10;
    const auto rows = rate_scan(p, req);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].dG, 0.0);
    EXPECT_EQ(rows[1].dG, 0.1);
    MarcusParams q = p;
    q.dG = 0.1;
    EXPECT_NEAR(rows[1].rate.k, extract_rate(simulate(q, Mode::Explicit, 1.0, 10), 10).k, 1e-14);
    req.dG_values.clear();
    EXPECT_THROW(rate_scan(p, req), ArgumentError);
}

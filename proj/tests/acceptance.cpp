#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "support/oracle.hpp"
#include "vffc/builders/comparator.hpp"
#include "vffc/builders/quadratic.hpp"
#include "vffc/grid/grid.hpp"
#include "vffc/marcus/dynamics.hpp"
#include "vffc/marcus/rates.hpp"
#include "vffc/qsim/simulator.hpp"
#include "vffc/resources/census.hpp"
#include "vffc/vff/ansatz.hpp"
#include "vffc/vff/compress.hpp"
#include "vffc/vff/cost.hpp"
#include "vffc/walsh/walsh.hpp"

#ifndef VFFC_CLI_PATH
#define VFFC_CLI_PATH "vffc"
#endif

using namespace vffc;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = false;
    std::string summary;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

void note(const std::string& s) { std::cout << "    " << s << "\n" << std::flush; }

double best_of_seeds(const CompressionTarget& target, CompressConfig cfg, int seeds, CompressResult* best = nullptr) {
    double lowest = 1.0;
    for (int s = 0; s < seeds; ++s) {
        cfg.adam.seed = static_cast<std::uint64_t>(s);
        CompressResult r = compress(target, cfg);
        if (r.best_cost < lowest) {
            lowest = r.best_cost;
            if (best) *best = r;
        }
    }
    return lowest;
}

// 1 -------------------------------------------------------------------------------------------

Verdict check_exact_representability() {
    constexpr double kTol = 1e-3;
    bool ok = true;
    double worst = 0;
    for (int n : {3, 4, 5}) {
        MarcusParams p;
        p.grid.n = n;
        const CompressionTarget t = diagonal_target(potential_v0(p), 1.0);
        const int ring_l = (n + 2) / 2;
        for (auto [topo, l] : {std::pair{Topology::Linear, n}, std::pair{Topology::Ring, ring_l}}) {
            CompressConfig cfg{l, topo, 1.0, 1, AdamConfig{}, 1};
            const auto start = std::chrono::steady_clock::now();
            const double c = best_of_seeds(t, cfg, 1);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            note("n=" + std::to_string(n) + " " + to_string(topo) + " l=" + std::to_string(l) + " cost " +
                 fmt("%.2e", c) + " in " + fmt("%.1f", secs) + " s");
            ok = ok && c < kTol && secs < 600;
            worst = std::max(worst, c);
        }
    }
    return {ok, "V0 at l=n (linear) and l=ceil((n+1)/2) (ring), n=3..5: worst cost " + fmt("%.2e", worst) +
                    " < 1e-3"};
}

// 2 -------------------------------------------------------------------------------------------

Verdict check_n8_thresholds() {
    constexpr double kTol = 0.01;
    constexpr int kSeeds = 5;
    constexpr double kHeavyMass = 1836.0;
    MarcusParams p;
    const double half = 0.5;
    AdamConfig adam;
    adam.max_iters = 2000;

    MarcusParams light = p;
    VffAnsatz probe = make_ansatz(8, 4, Topology::Linear, half);
    const RealVector kd_light = kinetic_diagonal(light.grid, light.mu);
    probe.thetas = analytic_thetas(probe, walsh_transform(kd_light));
    note("mu=1 kinetic l=4: cost of the exact truncated angles " +
         fmt("%.3f", lhst_cost(diagonal_target(kd_light, half), probe).lhst) + " (reference only)");

    MarcusParams heavy = p;
    heavy.mu = kHeavyMass;
    struct Case {
        std::string name;
        CompressionTarget target;
        int l;
        Topology topo;
    };
    const std::vector<Case> cases{
        {"kinetic (mu=1836) l=4 linear", kinetic_target(heavy, half), 4, Topology::Linear},
        {"V0 l=6 linear", v0_target(p, half), 6, Topology::Linear},
        {"V1 l=6 linear", v1_target(p, half), 6, Topology::Linear},
        {"V0 l=4 ring", v0_target(p, half), 4, Topology::Ring},
    };
    bool ok = true;
    std::string parts;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : cases) {
        const double best = best_of_seeds(c.target, CompressConfig{c.l, c.topo, half, 1, adam, 1}, kSeeds);
        note(c.name + ": best of " + std::to_string(kSeeds) + " seeds " + fmt("%.2e", best));
        ok = ok && best < kTol;
        parts += (parts.empty() ? "" : ", ") + fmt("%.1e", best);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    note("total " + fmt("%.0f", secs) + " s");
    ok = ok && secs < 3600;
    return {ok, "n=8 compression below 0.01 (kinetic, V0, V1 linear; V0 ring): " + parts};
}

// 3 -------------------------------------------------------------------------------------------

Verdict check_global_minimum() {
    bool ok = true;
    double worst_dev = 0, worst_r2 = 1;
    for (int n : {3, 4, 5}) {
        MarcusParams p;
        p.grid.n = n;
        for (int which = 0; which < 2; ++which) {
            const RealVector f = which == 0 ? potential_v0(p) : kinetic_diagonal(p.grid, p.mu);
            const CompressResult r = compress(diagonal_target(f, 0.5), CompressConfig{n, Topology::Linear, 0.5, 1, {}, 1});
            const GlobalMinimumReport g = verify_global_minimum(r.ansatz, walsh_transform(f));
            note(std::string(which == 0 ? "V0" : "kinetic") + " n=" + std::to_string(n) + " untruncated: cost " +
                 fmt("%.1e", r.best_cost) + ", max angle deviation " + fmt("%.1e", g.max_deviation) +
                 " rad, after parity-flip reduction " + fmt("%.1e", g.max_deviation_symmetric) + " rad");
            ok = ok && g.max_deviation_symmetric < 1e-2;
            worst_dev = std::max(worst_dev, g.max_deviation_symmetric);
        }
    }
    MarcusParams p;
    MarcusParams heavy = p;
    heavy.mu = 1836.0;
    const std::vector<std::tuple<std::string, RealVector, int>> truncated{
        {"V0 n=8 l=6", potential_v0(p), 6},
        {"V1 n=8 l=6", potential_v1(p), 6},
        {"kinetic (mu=1836) n=8 l=4", kinetic_diagonal(heavy.grid, heavy.mu), 4}};
    for (const auto& [name, f, l] : truncated) {
        const CompressResult r = compress(diagonal_target(f, 0.5), CompressConfig{l, Topology::Linear, 0.5, 1, {}, 1});
        const GlobalMinimumReport g = verify_global_minimum(r.ansatz, walsh_transform(f));
        note(name + " truncated: alpha0 " + fmt("%.5f", g.alpha0) + ", alpha1 " + fmt("%.5f", g.alpha1) + ", R^2 " +
             fmt("%.6f", g.r_squared));
        ok = ok && g.r_squared > 0.99;
        worst_r2 = std::min(worst_r2, g.r_squared);
    }
    return {ok, "untruncated angles within " + fmt("%.1e", worst_dev) + " rad of the analytic minimum modulo parity flips (< 1e-2); truncated R^2 >= " +
                    fmt("%.4f", worst_r2) + " (> 0.99)"};
}

// 4 -------------------------------------------------------------------------------------------

double quadratic_error() {
    std::mt19937_64 rng(401);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 5;
        const GridSpec g{n, oracle::uniform(rng, 1, 30)};
        const double eta = oracle::uniform(rng, 0, 0.1), x0 = oracle::uniform(rng, 0, g.L);
        const double delta = oracle::uniform(rng, -0.5, 0.5), tau = oracle::uniform(rng, 0.01, 2);
        const QuadraticPhases ph = make_quadratic_phases(eta, x0, delta, tau, g.dx());
        for (bool reduced : {true, false}) {
            const Unitary u = oracle::circuit_matrix(explicit_quadratic_circuit(ph, n, reduced));
            for (std::uint64_t k = 0; k < g.size(); ++k) {
                const double x = g.dx() * double(k);
                const cplx want = std::polar(1.0, -tau * (eta * (x - x0) * (x - x0) + delta));
                worst = std::max(worst, std::abs(u(Eigen::Index(k), Eigen::Index(k)) - want));
            }
            worst = std::max(worst, (u - Unitary(u.diagonal().asDiagonal())).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double walsh_error() {
    std::mt19937_64 rng(402);
    double worst = 0;
    for (int n = 2; n <= 7; ++n) {
        RealVector f(Eigen::Index{1} << n);
        const double a = oracle::uniform(rng, 0, 1), b = oracle::uniform(rng, -1, 1), c = oracle::uniform(rng, -1, 1);
        for (Eigen::Index k = 0; k < f.size(); ++k) f(k) = a * double(k * k) + b * double(k) + c;
        const double tau = oracle::uniform(rng, 0.1, 1.5);
        const Circuit circ = diagonal_circuit(truncate(walsh_transform(f), 2, n, Topology::Linear), tau);
        const Unitary u = oracle::circuit_matrix(circ);
        for (Eigen::Index k = 0; k < f.size(); ++k) worst = std::max(worst, std::abs(u(k, k) - std::polar(1.0, -tau * f(k))));
    }
    return worst;
}

double kinetic_error() {
    double worst = 0;
    for (int n : {3, 4, 5, 6}) {
        const GridSpec g{n, 20.0};
        const double mu = 1.3, tau = 0.6;
        const Unitary f = oracle::centered_dft(n);
        Eigen::VectorXcd d(f.rows());
        for (Eigen::Index m = 0; m < f.rows(); ++m) {
            const double q = (2 * kPi / g.L) * double(m - f.rows() / 2);
            d(m) = std::polar(1.0, -tau * q * q / (2 * mu));
        }
        const Unitary want = f.adjoint() * d.asDiagonal() * f;
        for (bool reduced : {true, false}) {
            worst = std::max(worst, (oracle::circuit_matrix(kinetic_circuit(g, mu, tau, reduced)) - want).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

long comparator_failures(long& checked) {
    long bad = 0;
    for (int n = 1; n <= 8; ++n) {
        const ComparatorLayout lay = ComparatorLayout::make(n, 1);
        const std::uint64_t N = std::uint64_t{1} << n;
        const std::uint64_t tbit = std::uint64_t{1} << lay.comparator(0);
        for (Relation rel : {Relation::Greater, Relation::Less}) {
            for (std::uint64_t t = 0; t < N; ++t) {
                if ((rel == Relation::Greater && t == N - 1) || (rel == Relation::Less && t == 0)) continue;
                const Circuit c = comparator_circuit(lay, t, rel, 0);
                for (std::uint64_t k = 0; k < N; ++k) {
                    const bool truth = rel == Relation::Greater ? k > t : k < t;
                    for (std::uint64_t init : {std::uint64_t{0}, tbit}) {
                        ++checked;
                        if (classical_apply(c, k | init) != (k | (truth ? init ^ tbit : init))) ++bad;
                    }
                }
            }
        }
    }
    return bad;
}

struct DenseModel {
    Unitary kinetic, vdiag, vcoup;
};

DenseModel dense_model(const MarcusParams& p) {
    const int n = p.grid.n;
    const Eigen::Index N = Eigen::Index{1} << n;
    const double dx = p.grid.L / double(N);
    Eigen::VectorXcd kd(N);
    for (Eigen::Index m = 0; m < N; ++m) {
        const double q = (2 * kPi / p.grid.L) * double(m - N / 2);
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
    const long long centre = std::llround(p.coupling.a.value_or(p.grid.L / 2) / dx);
    const long long lo = centre - (p.coupling.span - 1) / 2;
    const double h = p.coupling.C0 * std::sqrt(kPi / p.coupling.beta) / (p.coupling.span * dx);
    for (Eigen::Index k = 0; k < N; ++k) {
        const double x = dx * double(k);
        d.vdiag(k, k) = p.A1 * (x - c0) * (x - c0);
        d.vdiag(k + N, k + N) = p.A1 * (x - c1) * (x - c1) - p.dG;
        if (k >= lo && k < lo + p.coupling.span) d.vcoup(k, k + N) = d.vcoup(k + N, k) = h;
    }
    return d;
}

Unitary logical_block(const Circuit& c, int logical) {
    const Eigen::Index d = Eigen::Index{1} << logical;
    return circuit_unitary<double>(c).topLeftCorner(d, d);
}

Verdict check_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    const double q = quadratic_error();
    note("explicit quadratic vs entry-wise exponential (100 draws, n=2..6, both forms): " + fmt("%.1e", q));
    const double w = walsh_error();
    note("Walsh diagonal circuits vs exponential (n=2..7): " + fmt("%.1e", w));
    const double k = kinetic_error();
    note("kinetic sandwich vs F^dagger exp(-i tau p^2/2mu) F (n=3..6): " + fmt("%.1e", k));
    long checked = 0;
    const long bad = comparator_failures(checked);
    note("comparator truth tables, n=1..8, every threshold, both relations: " + std::to_string(bad) +
         " failures in " + std::to_string(checked) + " cases");
    MarcusParams p;
    p.grid.n = 4;
    p.dG = 0.1;
    const DenseModel d = dense_model(p);
    const Unitary want = oracle::expm_hermitian(d.kinetic, 0.5) * oracle::expm_hermitian(d.vdiag, 0.5) *
                         oracle::expm_hermitian(d.vcoup, 1.0) * oracle::expm_hermitian(d.vdiag, 0.5) *
                         oracle::expm_hermitian(d.kinetic, 0.5);
    const double t = (logical_block(build_trotter_step(p, Mode::Explicit, 1.0), 5) - want).cwiseAbs().maxCoeff();
    note("full Trotter step n=4 vs dense splitting: " + fmt("%.1e", t));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = q < 1e-9 && w < 1e-10 && k < 1e-9 && bad == 0 && t < 1e-8 && secs < 300;
    return {ok, "all oracles agree (max " + fmt("%.1e", std::max({q, w, k, t})) + ", comparators exhaustive) in " +
                    fmt("%.0f", secs) + " s"};
}

// 5 -------------------------------------------------------------------------------------------

Verdict check_trotter_order() {
    MarcusParams p;
    p.grid.n = 4;
    p.dG = 0.1;
    const DenseModel d = dense_model(p);
    const Unitary h = d.kinetic + d.vdiag + d.vcoup;
    const State psi0 = initial_state(p).head(32);
    std::vector<double> lt, le;
    for (double tau : {1.0, 0.5, 0.25, 0.125}) {
        const State a = logical_block(build_trotter_step(p, Mode::Explicit, tau), 5) * psi0;
        const State b = oracle::expm_hermitian(h, tau) * psi0;
        const double err = (a - b).norm();
        note("tau=" + fmt("%.3f", tau) + ": one-step error " + fmt("%.3e", err));
        lt.push_back(std::log(tau));
        le.push_back(std::log(err));
    }
    const double mt = std::accumulate(lt.begin(), lt.end(), 0.0) / 4, me = std::accumulate(le.begin(), le.end(), 0.0) / 4;
    double sxy = 0, sxx = 0;
    for (int i = 0; i < 4; ++i) {
        sxy += (lt[i] - mt) * (le[i] - me);
        sxx += (lt[i] - mt) * (lt[i] - mt);
    }
    const double slope = sxy / sxx;
    return {std::abs(slope - 3.0) <= 0.2, "log-log slope " + fmt("%.3f", slope) + " (3.0 +- 0.2)"};
}

// 6 -------------------------------------------------------------------------------------------

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_cli(const std::string& args, const fs::path& out) {
    const std::string cmd = std::string("\"") + VFFC_CLI_PATH + "\" " + args + " -o \"" + out.string() + "\" > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path scratch_dir(const std::string& tag) {
    const fs::path d = fs::temp_directory_path() / ("vffc_acceptance_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

Verdict check_fast_forward() {
    std::mt19937_64 rng(601);
    double worst = 0;
    for (int n = 2; n <= 6; ++n) {
        VffAnsatz a = make_ansatz(n, n, Topology::Linear, 1.0);
        for (auto& t : a.thetas) t = oracle::uniform(rng, -kPi, kPi);
        for (auto& g : a.gammas) g = oracle::uniform(rng, -kPi, kPi);
        const Unitary one = ansatz_unitary(a);
        Unitary power = Unitary::Identity(one.rows(), one.cols());
        for (int N = 1; N <= 20; ++N) {
            power = one * power;
            worst = std::max(worst, (ansatz_unitary(fast_forward(a, N)) - power).cwiseAbs().maxCoeff());
        }
    }
    note("W D(N theta) W^dagger vs (W D W^dagger)^N, n=2..6, N<=20: " + fmt("%.1e", worst));

    const fs::path dir = scratch_dir("ff");
    const int rc = run_cli("fastforward-check --n 3 --steps 10", dir);
    double csv_worst = 1.0;
    int rows = 0;
    std::istringstream csv(read_file(dir / "fastforward-check" / "fastforward.csv"));
    std::string line;
    std::getline(csv, line);
    while (std::getline(csv, line)) {
        const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        const double f = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        const double fe = std::stod(line.substr(c2 + 1));
        csv_worst = std::max({csv_worst == 1.0 ? 0.0 : csv_worst, std::abs(f - 1), std::abs(fe - 1)});
        ++rows;
    }
    fs::remove_all(dir);
    note("fastforward-check exit " + std::to_string(rc) + ", " + std::to_string(rows) + " rows, max |1 - fidelity| " +
         fmt("%.1e", csv_worst));
    const bool ok = worst < 1e-10 && rc == 0 && rows == 11 && csv_worst < 1e-10;
    return {ok, "matrix identity " + fmt("%.1e", worst) + "; CLI fidelity within " + fmt("%.1e", csv_worst) + " of 1"};
}

// 7 -------------------------------------------------------------------------------------------

Verdict check_resource_accounting() {
    const auto rows = census_table(MarcusParams{}, 1.0);
    int zz_match = 0, rz_decoded = 0, flagged_anomaly = 0;
    for (const auto& r : rows) {
        if (r.comp_zz == r.published.comp_zz) ++zz_match;
        if (r.published.comp_rz == r.published.comp_zz + r.published.n) ++rz_decoded;
        const bool anomaly = r.published.n == 8 && r.published.op != "T";
        const bool flagged = std::find(r.mismatches.begin(), r.mismatches.end(), "comp_rz") != r.mismatches.end();
        if (anomaly && flagged && r.mismatches.size() == 1) ++flagged_anomaly;
        if (!anomaly && !r.mismatches.empty()) note("unexpected mismatch in row n=" + std::to_string(r.published.n) + " " + r.published.op);
    }
    note("Comp. ZZ matches on " + std::to_string(zz_match) + "/9 rows; Rz = ZZ + n holds on " +
         std::to_string(rz_decoded) + "/9 published rows; anomaly flagged on " + std::to_string(flagged_anomaly) + "/2");
    const int q = total_qubits(8, 3);
    MarcusParams p;
    note("total_qubits(8, 3) = " + std::to_string(q) + " (required 15); the n=8 Trotter register built here has " +
         std::to_string(trotter_layout(p).total_wires()) + " wires");
    int removed = 0;
    for (const auto& [loc, c] : truncation_removed(8, 4, Topology::Linear)) removed += c;
    note("n=8 kinetic l=4 truncation removes " + std::to_string(removed) + " ZZ terms");
    const bool ok = zz_match == 9 && rz_decoded == 7 && flagged_anomaly == 2 && q == 15 && removed == 10;
    return {ok, "census 9/9, anomaly flagged, 10 removed; total_qubits(8,3) = " + std::to_string(q) + " vs 15"};
}

// 8 -------------------------------------------------------------------------------------------

Verdict check_rate_scan_behaviour() {
    constexpr double kLambda = 0.135;
    constexpr double kStep = 0.05;
    MarcusParams p;
    ScanRequest req;
    for (int i = 0; i <= 6; ++i) req.dG_values.push_back(kStep * i);
    req.modes = {Mode::Explicit, Mode::Compressed};
    req.tau = 1.0;
    req.t_max = 100.0;
    req.compression.l_kinetic = 4;
    req.compression.l_potential = 6;
    const auto start = std::chrono::steady_clock::now();
    const CompressedBundle b = compress_operators(p, req.tau, req.compression);
    note("compression costs: kinetic " + fmt("%.3f", b.kinetic_cost) + ", V0 " + fmt("%.1e", b.v0_cost) + ", V1 " +
         fmt("%.1e", b.v1_cost));
    req.operators = b.ops;
    const auto rows = rate_scan(p, req);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<double> ke, kc;
    for (const auto& r : rows) (r.mode == Mode::Explicit ? ke : kc).push_back(r.rate.k);
    for (std::size_t i = 0; i < ke.size(); ++i) {
        note("dG=" + fmt("%.2f", req.dG_values[i]) + "  explicit k=" + fmt("%+.3e", ke[i]) + "  compressed k=" +
             fmt("%+.3e", kc[i]));
    }
    auto argmax = [](const std::vector<double>& v) {
        return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    };
    auto rise_fall = [&](const std::vector<double>& v) {
        const std::size_t m = argmax(v);
        return m > 0 && m + 1 < v.size() && v.front() < v[m] && v.back() < v[m];
    };
    const std::size_t pe = argmax(ke), pc = argmax(kc);
    const double dge = req.dG_values[pe], dgc = req.dG_values[pc];
    const bool explicit_ok = rise_fall(ke) && std::abs(dge - kLambda) <= kStep + 1e-12;

    std::vector<double> dev(ke.size());
    for (std::size_t i = 0; i < ke.size(); ++i) dev[i] = std::abs(kc[i] - ke[i]) / std::max(std::abs(ke[i]), 1e-12);
    const std::size_t closest = static_cast<std::size_t>(std::min_element(dev.begin(), dev.end()) - dev.begin());
    const bool same_peak = std::abs(dgc - dge) <= kStep + 1e-12;
    const bool tracks = std::abs(req.dG_values[closest] - dge) <= kStep + 1e-12;
    const bool compressed_ok = same_peak && tracks;

    std::vector<double> fc;
    for (double dG : req.dG_values) {
        MarcusParams q = p;
        q.dG = dG;
        fc.push_back(fc_rate_low_temperature(q, 1e-4).rate);
    }
    note("golden-rule Franck-Condon curve peaks at dG=" + fmt("%.2f", req.dG_values[argmax(fc)]));
    note("explicit: rise-then-fall " + std::string(rise_fall(ke) ? "yes" : "no") + ", peak dG=" + fmt("%.2f", dge) +
         " -> " + (explicit_ok ? "ok" : "not ok"));
    note("compressed: peak dG=" + fmt("%.2f", dgc) + ", closest agreement at dG=" + fmt("%.2f", req.dG_values[closest]) +
         " -> " + (compressed_ok ? "ok" : "not ok"));
    note("wall time " + fmt("%.0f", secs) + " s");
    return {explicit_ok && compressed_ok && secs < 4 * 3600,
            "explicit peak dG=" + fmt("%.2f", dge) + (explicit_ok ? " (ok)" : " (not ok)") + "; compressed peak dG=" +
                fmt("%.2f", dgc) + (compressed_ok ? " (ok)" : " (not ok)")};
}

// 9 -------------------------------------------------------------------------------------------

struct Conservation {
    double norm = 0, sum = 0, ancilla = 0;
};

Conservation propagate(const MarcusParams& p, Mode mode, int steps, const CompressedOperators* ops) {
    const Circuit step = build_trotter_step(p, mode, 1.0, ops);
    const int obj = trotter_layout(p).objective();
    const std::uint64_t logical = (std::uint64_t{1} << (p.grid.n + 1)) - 1;
    State psi = initial_state(p);
    Conservation c;
    for (int s = 0; s <= steps; ++s) {
        if (s > 0) apply_circuit<double>(step, psi);
        double p0 = 0, p1 = 0, anc = 0;
        for (Eigen::Index k = 0; k < psi.size(); ++k) {
            const double w = std::norm(psi(k));
            if (static_cast<std::uint64_t>(k) & ~logical) {
                anc += w;
                continue;
            }
            ((k >> obj) & 1 ? p1 : p0) += w;
        }
        c.norm = std::max(c.norm, std::abs(psi.norm() - 1.0));
        c.sum = std::max(c.sum, std::abs(p0 + p1 - 1.0));
        c.ancilla = std::max(c.ancilla, anc);
    }
    return c;
}

Verdict check_conservation() {
    struct Run {
        std::string name;
        MarcusParams p;
        Mode mode;
    };
    std::vector<Run> runs;
    for (double dG : {0.0, 0.15, 0.3}) {
        MarcusParams p;
        p.dG = dG;
        runs.push_back({"explicit dG=" + fmt("%.2f", dG), p, Mode::Explicit});
    }
    MarcusParams adiabatic;
    adiabatic.p0 = -30;
    adiabatic.x0_packet = 4;
    runs.push_back({"explicit adiabatic benchmark (p0=-30, x0=4)", adiabatic, Mode::Explicit});
    MarcusParams strong;
    strong.dG = 0.15;
    strong.coupling.C0 = 0.2;
    strong.coupling.span = 9;
    runs.push_back({"explicit strong 9-point coupling", strong, Mode::Explicit});
    MarcusParams comp;
    comp.dG = 0.15;
    runs.push_back({"compressed dG=0.15", comp, Mode::Compressed});

    CompressionSettings cs;
    cs.adam.max_iters = 300;
    const CompressedOperators ops = compress_operators(comp, 1.0, cs).ops;
    Conservation worst;
    for (const auto& r : runs) {
        const Conservation c = propagate(r.p, r.mode, 100, r.mode == Mode::Compressed ? &ops : nullptr);
        note(r.name + ": norm " + fmt("%.1e", c.norm) + ", P0+P1 " + fmt("%.1e", c.sum) + ", ancilla " + fmt("%.1e", c.ancilla));
        worst.norm = std::max(worst.norm, c.norm);
        worst.sum = std::max(worst.sum, c.sum);
        worst.ancilla = std::max(worst.ancilla, c.ancilla);
    }
    const bool ok = worst.norm < 1e-8 && worst.sum < 1e-9 && worst.ancilla < 1e-10;
    return {ok, std::to_string(runs.size()) + " runs x 100 steps: norm " + fmt("%.1e", worst.norm) + ", P0+P1 " +
                    fmt("%.1e", worst.sum) + ", ancilla " + fmt("%.1e", worst.ancilla)};
}

// 10 ------------------------------------------------------------------------------------------

Verdict check_gradients() {
    std::mt19937_64 rng(1001);
    double worst = 0;
    int params = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 4;
        const int l = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        VffAnsatz a = make_ansatz(n, l, trial % 3 == 0 ? Topology::Ring : Topology::Linear, 1.0, 1 + trial % 2);
        for (auto& t : a.thetas) t = oracle::uniform(rng, -kPi, kPi);
        for (auto& g : a.gammas) g = oracle::uniform(rng, -kPi, kPi);
        const CompressionTarget target =
            trial % 2 ? CompressionTarget::from_matrix(oracle::random_unitary(rng, Eigen::Index{1} << n))
                      : diagonal_target(RealVector::Random(Eigen::Index{1} << n), 1.3);
        const RealVector g = parameter_shift_gradient(target, a, 1);
        const RealVector p = parameters(a);
        const double h = 1e-5;
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            VffAnsatz plus = a, minus = a;
            RealVector pp = p, pm = p;
            pp(i) += h;
            pm(i) -= h;
            set_parameters(plus, pp);
            set_parameters(minus, pm);
            const double fd = (lhst_cost(target, plus).lhst - lhst_cost(target, minus).lhst) / (2 * h);
            worst = std::max(worst, std::abs(g(i) - fd));
            ++params;
        }
    }
    note("parameter shift vs central differences: " + std::to_string(params) + " partials, max gap " + fmt("%.1e", worst));
    double zero = 0;
    for (int n = 1; n <= 5; ++n) {
        const VffAnsatz a = make_ansatz(n, n, Topology::Linear, 1.0, 2);
        const CompressionTarget id = CompressionTarget::from_matrix(Unitary::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n));
        zero = std::max(zero, parameter_shift_gradient(id, a, 1).cwiseAbs().maxCoeff());
        VffAnsatz r = make_ansatz(n, n, Topology::Ring, 0.7, 2);
        for (auto& t : r.thetas) t = oracle::uniform(rng, -kPi, kPi);
        for (auto& g : r.gammas) g = oracle::uniform(rng, -kPi, kPi);
        const CompressionTarget own = CompressionTarget::from_matrix(ansatz_unitary(r));
        zero = std::max(zero, parameter_shift_gradient(own, r, 1).cwiseAbs().maxCoeff());
    }
    note("gradient at exact optima (identity and random self-targets, n=1..5): " + fmt("%.1e", zero));
    return {worst < 1e-5 && zero < 1e-8, "50 configurations within " + fmt("%.1e", worst) + " (< 1e-5); optimum gradient " +
                                             fmt("%.1e", zero) + " (< 1e-8)"};
}

// 11 ------------------------------------------------------------------------------------------

Verdict check_franck_condon() {
    MarcusParams p;
    p.mu = 4.0;
    const FcRate r = fc_rate_low_temperature(p, 1e-4);
    const double s = p.mu * well_frequency(p) * (2 * p.A0) * (2 * p.A0) / 2;
    double worst = 0, fact = 1;
    for (int v = 0; v <= 5; ++v) {
        if (v > 0) fact *= v;
        const double poisson = std::exp(-s) * std::pow(s, v) / fact;
        const double rel = std::abs(r.overlaps(v) - poisson) / poisson;
        note("v=" + std::to_string(v) + ": grid " + fmt("%.6f", r.overlaps(v)) + ", Poisson " + fmt("%.6f", poisson) +
             ", rel " + fmt("%.1e", rel));
        worst = std::max(worst, rel);
    }
    const double completeness = std::abs(r.overlaps.sum() - 1.0);
    note("Huang-Rhys factor S=" + fmt("%.4f", s) + " (mu=4, n=8); completeness error " + fmt("%.1e", completeness));
    return {worst < 0.02 && completeness < 1e-8,
            "Poisson within " + fmt("%.2f", 100 * worst) + "% for v<=5; completeness " + fmt("%.1e", completeness)};
}

// 12 ------------------------------------------------------------------------------------------

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        std::string content = read_file(e.path());
        if (e.path().filename() == "manifest.json") {
            auto j = nlohmann::json::parse(content);
            j.erase("wall_time_s");
            content = j.dump();
        }
        files[fs::relative(e.path(), dir).string()] = content;
    }
    return files;
}

Verdict check_determinism() {
    const fs::path base = scratch_dir("det");
    const fs::path cfg = base / "scan.json";
    std::ofstream(cfg) << R"({
  "grid": {"n": 5},
  "marcus": {"coupling": {"C0": 0.2}},
  "scan": {"dG": [0, 0.1, 0.2], "modes": ["explicit", "compressed"], "t_max": 20},
  "compression": {"l_kinetic": 4, "l_potential": 4, "optimizer": {"max_iters": 200}}
})";
    const std::vector<std::string> commands{
        "compress --target v0 --n 5 --l 3 --max-iters 200 --seed 3",
        "compress --target kinetic --n 4 --l 2 --topology ring --max-iters 100 --seed 11",
        "marcus --mode compressed --steps 20 --set grid.n=5 compression.optimizer.max_iters=100",
        "marcus --mode explicit --steps 30 --dG 0.1",
        "rate-scan -c \"" + cfg.string() + "\"",
        "rates-theory --set grid.n=7 theory.dG=[0,0.1,0.2]",
        "count",
        "init-wavepacket --n 3 --layers 2 --seed 4 --set optimizer.max_iters=200",
        "fastforward-check --n 3 --steps 10",
    };
    bool ok = true;
    int compared = 0;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const fs::path a = base / ("a" + std::to_string(i)), b = base / ("b" + std::to_string(i));
        const int ra = run_cli(commands[i] + " -j 1", a);
        const int rb = run_cli(commands[i] + " -j 2", b);
        const auto sa = snapshot(a), sb = snapshot(b);
        const bool same = ra == 0 && rb == 0 && !sa.empty() && sa == sb;
        compared += static_cast<int>(sa.size());
        note((same ? "identical: " : "DIFFERENT: ") + commands[i] + " (" + std::to_string(sa.size()) + " files, exit " +
             std::to_string(ra) + "/" + std::to_string(rb) + ")");
        ok = ok && same;
    }
    fs::remove_all(base);
    return {ok, std::to_string(commands.size()) + " invocations run twice (1 and 2 workers), " + std::to_string(compared) +
                    " files byte-identical apart from manifest wall time"};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "exact representability", check_exact_representability},
        {2, "compression thresholds at n=8", check_n8_thresholds},
        {3, "global minimum", check_global_minimum},
        {4, "oracle equivalence", check_oracle_equivalence},
        {5, "Trotter order", check_trotter_order},
        {6, "fast-forwarding identity", check_fast_forward},
        {7, "resource accounting", check_resource_accounting},
        {8, "rate-scan behaviour", check_rate_scan_behaviour},
        {9, "conservation", check_conservation},
        {10, "gradients", check_gradients},
        {11, "Franck-Condon oracle", check_franck_condon},
        {12, "CLI determinism", check_determinism},
    };
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            wanted.push_back(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--criterion N]...\n";
            return 2;
        }
    }
    int failed = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        std::cout << "criterion " << c.id << " (" << c.title << ")\n" << std::flush;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << ": " << v.summary << "\n"
                  << std::flush;
        if (!v.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}

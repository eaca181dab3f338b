#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "vffc/builders/quadratic.hpp"
#include "vffc/builders/ucc.hpp"
#include "vffc/errors.hpp"
#include "vffc/grid/grid.hpp"
#include "vffc/marcus/rates.hpp"
#include "vffc/qsim/simulator.hpp"
#include "vffc/resources/census.hpp"
#include "vffc/util/parallel.hpp"
#include "vffc/vff/compress.hpp"

namespace vffc::cli {

namespace {

using nlohmann::json;

std::string num(double v) { return format_number(v); }
std::string num(int v) { return std::to_string(v); }
std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

GridSpec read_grid(Node& root, int default_n) {
    Node g = root.child("grid");
    GridSpec grid;
    grid.n = g.integer("n", default_n, 1, 20);
    grid.L = g.positive("L", 20.0);
    g.finish();
    return grid;
}

MarcusParams read_marcus(Node& root) {
    MarcusParams p;
    p.grid = read_grid(root, 8);
    Node m = root.child("marcus");
    p.mu = m.positive("mu", 1.0);
    p.A1 = m.positive("A1", 0.015);
    p.A0 = m.number("A0", 1.5);
    p.dG = m.number("dG", 0.0);
    p.p0 = m.number("p0", 0.0);
    p.x0_packet = m.number("x0_packet", 0.0);
    Node c = m.child("coupling");
    p.coupling.C0 = c.non_negative("C0", 0.01);
    p.coupling.beta = c.positive("beta", 5.0);
    p.coupling.a = c.optional_number("a");
    p.coupling.span = c.integer("span", 3, 1, 1 << 20);
    c.finish();
    m.finish();
    p.check();
    return p;
}

AdamConfig read_optimizer(Node& parent, std::uint64_t seed, int default_iters) {
    Node o = parent.child("optimizer");
    AdamConfig a;
    a.learning_rate = o.positive("learning_rate", 0.05);
    a.beta1 = o.number("beta1", 0.9);
    a.beta2 = o.number("beta2", 0.999);
    a.max_iters = o.integer("max_iters", default_iters, 0, 10000000);
    a.patience = o.integer("patience", 50, 1, 10000000);
    a.cost_tolerance = o.non_negative("cost_tolerance", 1e-10);
    a.init_scale = o.non_negative("init_scale", 0.1);
    a.seed = seed;
    o.finish();
    a.check();
    return a;
}

CompressionSettings read_compression(Node& root, std::uint64_t seed) {
    Node c = root.child("compression");
    CompressionSettings s;
    s.l_kinetic = c.integer("l_kinetic", 4, 1, 20);
    s.l_potential = c.integer("l_potential", 6, 1, 20);
    s.topology = topology_from_string(c.choice("topology", "linear", {"linear", "ring"}));
    s.adam = read_optimizer(c, seed, 2000);
    c.finish();
    return s;
}

json compression_summary(const CompressedBundle& b) {
    return json{{"kinetic_cost", b.kinetic_cost},
                {"v0_cost", b.v0_cost},
                {"v1_cost", b.v1_cost},
                {"converged", b.converged}};
}

json operators_json(const CompressedOperators& ops) {
    return json{{"kinetic", ansatz_to_json(ops.kinetic)}, {"v0", ansatz_to_json(ops.v0)}, {"v1", ansatz_to_json(ops.v1)}};
}

Csv rate_csv() { return Csv({"dG", "k", "residual", "mode", "tau"}); }

void add_rate(Csv& csv, const RateResult& r, Mode mode, double tau) {
    csv.row({num(r.dG), num(r.k), num(r.residual), to_string(mode), num(tau)});
}

RealVector read_target_file(const std::string& path, Node& root) {
    std::ifstream in(path);
    if (!in) root.fail("target_file", "cannot read '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        root.fail("target_file", std::string("malformed JSON in target file: ") + e.what());
    }
    if (j.contains("values")) {
        const auto v = j.at("values").get<std::vector<double>>();
        return Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
    }
    return inverse_walsh(diagonal_spec_from_json(j));
}

// ---------------------------------------------------------------------------------------------

Runner prepare_compress(Node& root, unsigned workers) {
    const std::uint64_t seed = root.seed("seed", 0);
    const std::string which = root.choice("target", "kinetic", {"kinetic", "v0", "v1", "file"});
    const std::optional<std::string> file = root.optional_string("target_file");
    if (which == "file" && !file) root.fail("target_file", "required when target is 'file'");
    const MarcusParams p = read_marcus(root);
    const int l = root.integer("l", 4, 1, 20);
    const Topology topo = topology_from_string(root.choice("topology", "linear", {"linear", "ring"}));
    const double tau = root.positive("tau", 1.0);
    const int layers = root.integer("layers_w", 1, 1, 64);
    const AdamConfig adam = read_optimizer(root, seed, 2000);

    RealVector values;
    if (which == "kinetic") values = kinetic_diagonal(p.grid, p.mu);
    if (which == "v0") values = potential_v0(p);
    if (which == "v1") values = potential_v1(p);
    if (which == "file") values = read_target_file(*file, root);
    const int n = ceil_log2(static_cast<std::uint64_t>(values.size()));
    if (l > n) root.fail("l", "exceeds the register size " + std::to_string(n));

    return [=] {
        const CompressionTarget target = diagonal_target(values, tau);
        const CompressConfig cfg{l, topo, tau, layers, adam, workers};
        const CompressResult r = compress(target, cfg);

        const DiagonalSpec walsh = walsh_transform(values);
        VffAnsatz exact = make_ansatz(n, l, topo, tau, layers);
        exact.thetas = analytic_thetas(exact, walsh);
        const GlobalMinimumReport gm = verify_global_minimum(r.ansatz, walsh);

        json doc = ansatz_to_json(r.ansatz);
        doc["target"] = which;
        doc["best_cost"] = r.best_cost;
        doc["converged"] = r.converged;

        Csv hist({"iter", "cost", "best_cost"});
        for (const auto& h : r.history) hist.row({num(h.iter), num(h.cost), num(h.best_cost)});

        Outcome out;
        out.artifacts = {{"ansatz.json", canonical_json(doc)}, {"history.csv", hist.str()}};
        out.converged = r.converged;
        out.summary = json{{"best_cost", r.best_cost},
                           {"iterations", static_cast<int>(r.history.size())},
                           {"analytic_truncated_cost", lhst_cost(target, exact).lhst},
                           {"max_angle_deviation", gm.max_deviation},
                           {"max_angle_deviation_symmetric", gm.max_deviation_symmetric},
                           {"alpha0", gm.alpha0},
                           {"alpha1", gm.alpha1},
                           {"r_squared", gm.r_squared}};
        return out;
    };
}

Runner prepare_marcus(Node& root, unsigned) {
    const std::uint64_t seed = root.seed("seed", 0);
    const MarcusParams p = read_marcus(root);
    const Mode mode = mode_from_string(root.choice("mode", "explicit", {"explicit", "compressed"}));
    const double tau = root.positive("tau", 1.0);
    const int steps = root.integer("steps", 100, 0, 10000000);
    const double t_max = root.positive("t_max", 100.0);
    const CompressionSettings cs = read_compression(root, seed);

    return [=] {
        Outcome out;
        std::optional<CompressedBundle> bundle;
        if (mode == Mode::Compressed) {
            bundle = compress_operators(p, tau, cs);
            out.summary["compression"] = compression_summary(*bundle);
            out.converged = bundle->converged;
        }
        const PopulationTrace t = simulate(p, mode, tau, steps, bundle ? &bundle->ops : nullptr);
        Csv trace({"t", "p0", "norm", "ancilla"});
        double worst_norm = 0, worst_ancilla = 0;
        for (std::size_t i = 0; i < t.times.size(); ++i) {
            trace.row({num(t.times[i]), num(t.p0_values[i]), num(t.norm_values[i]), num(t.ancilla_population[i])});
            worst_norm = std::max(worst_norm, std::abs(t.norm_values[i] - 1.0));
            worst_ancilla = std::max(worst_ancilla, t.ancilla_population[i]);
        }
        out.artifacts.push_back({"trace.csv", trace.str()});
        Csv rate = rate_csv();
        if (t.times.size() >= 3) {
            RateResult r = extract_rate(t, t_max);
            r.dG = p.dG;
            add_rate(rate, r, mode, tau);
            out.summary["k"] = r.k;
        }
        out.artifacts.push_back({"rate.csv", rate.str()});
        if (bundle) out.artifacts.push_back({"operators.json", canonical_json(operators_json(bundle->ops))});
        out.summary["max_norm_error"] = worst_norm;
        out.summary["max_ancilla_population"] = worst_ancilla;
        out.summary["final_p0"] = t.p0_values.back();
        return out;
    };
}

Runner prepare_rate_scan(Node& root, unsigned workers) {
    const std::uint64_t seed = root.seed("seed", 0);
    const MarcusParams p = read_marcus(root);
    Node s = root.child("scan");
    ScanRequest req;
    req.dG_values = s.numbers("dG", {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3});
    if (req.dG_values.empty()) s.fail("dG", "must not be empty");
    for (const auto& m : s.choices("modes", {"explicit"}, {"explicit", "compressed"})) {
        req.modes.push_back(mode_from_string(m));
    }
    if (req.modes.empty()) s.fail("modes", "must not be empty");
    req.modes.erase(std::unique(req.modes.begin(), req.modes.end()), req.modes.end());
    req.tau = s.positive("tau", 1.0);
    req.t_max = s.positive("t_max", 100.0);
    s.finish();
    req.compression = read_compression(root, seed);
    req.workers = workers;

    return [=]() mutable {
        Outcome out;
        if (std::find(req.modes.begin(), req.modes.end(), Mode::Compressed) != req.modes.end()) {
            const CompressedBundle b = compress_operators(p, req.tau, req.compression);
            req.operators = b.ops;
            out.summary["compression"] = compression_summary(b);
            out.converged = b.converged;
            out.artifacts.push_back({"operators.json", canonical_json(operators_json(b.ops))});
        }
        const std::vector<ScanRow> rows = rate_scan(p, req);
        Csv csv = rate_csv();
        json peaks = json::object();
        for (Mode m : req.modes) {
            const ScanRow* best = nullptr;
            for (const auto& r : rows) {
                if (r.mode == m && (best == nullptr || r.rate.k > best->rate.k)) best = &r;
            }
            peaks[to_string(m)] = best->dG;
        }
        for (const auto& r : rows) add_rate(csv, r.rate, r.mode, r.tau);
        out.artifacts.insert(out.artifacts.begin(), Artifact{"scan.csv", csv.str()});
        out.summary["peak_dG"] = peaks;
        out.summary["rows"] = static_cast<int>(rows.size());
        return out;
    };
}

Runner prepare_rates_theory(Node& root, unsigned workers) {
    root.seed("seed", 0);
    const MarcusParams p = read_marcus(root);
    Node t = root.child("theory");
    std::vector<double> grid;
    for (int i = 0; i <= 30; ++i) grid.push_back(0.01 * i);
    const std::vector<double> dGs = t.numbers("dG", grid);
    if (dGs.empty()) t.fail("dG", "must not be empty");
    const double h = coupling_values(p).maxCoeff();
    MarcusRateParams mp;
    mp.v_coup_sq = t.non_negative("v_coup_sq", h * h);
    mp.lambda = t.positive("lambda", reorganization_energy(p));
    mp.kT = t.positive("kT", 0.01);
    const double window = t.non_negative("window", 0.0);
    t.finish();

    return [=] {
        std::vector<double> marcus(dGs.size()), fc(dGs.size());
        parallel_for(
            dGs.size(),
            [&](std::size_t i) {
                MarcusParams q = p;
                q.dG = dGs[i];
                // Positive dG lowers the product surface, so the reaction free energy is -dG.
                marcus[i] = marcus_rate_theory(mp, -dGs[i]);
                fc[i] = fc_rate_low_temperature(q, mp.v_coup_sq, window).rate;
            },
            workers);
        Csv csv({"dG", "marcus_rate", "fc_rate"});
        for (std::size_t i = 0; i < dGs.size(); ++i) csv.row({num(dGs[i]), num(marcus[i]), num(fc[i])});
        const auto peak = [&](const std::vector<double>& v) {
            return dGs[static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin())];
        };
        Outcome out;
        out.artifacts = {{"theory.csv", csv.str()}};
        out.summary = json{{"lambda", mp.lambda}, {"marcus_peak_dG", peak(marcus)}, {"fc_peak_dG", peak(fc)}};
        return out;
    };
}

void census_row(Csv& csv, const std::string& circuit, const PublishedCensusRow& pub, const Circuit& c) {
    const GateCensus g = count_gates(c, Topology::Linear);
    csv.row({circuit, num(pub.n), pub.op, num(pub.l), num(g.x), num(g.rz), num(g.zz), num(g.czz), num(g.crz),
             num(g.cnot), num(g.toffoli), num(g.global_phase), num(g.other), num(g.rz_expanded()),
             num(g.cnot_expanded()), num(g.toffoli_expanded()), num(g.max_locality), num(g.depth),
             num(swap_overhead(c, Topology::Linear)), num(swap_overhead(c, Topology::Ring))});
}

Runner prepare_count(Node& root, unsigned) {
    root.seed("seed", 0);
    const MarcusParams p = read_marcus(root);
    const double tau = root.positive("tau", 1.0);

    return [=] {
        const std::vector<CensusRow> rows = census_table(p, tau);
        Csv table({"n", "op", "l", "ex_zz", "ex_zz_published", "ex_rz", "ex_rz_published", "ex_toffoli",
                   "ex_toffoli_published", "ex_max_l", "ex_max_l_published", "comp_zz", "comp_zz_published",
                   "comp_rz", "comp_rz_published", "comp_toffoli", "comp_toffoli_published", "comp_max_l",
                   "comp_max_l_published", "ex_crz_reduced", "mismatch"});
        int flagged = 0;
        for (const auto& r : rows) {
            const auto& q = r.published;
            std::string mismatch;
            for (const auto& m : r.mismatches) mismatch += (mismatch.empty() ? "" : ";") + m;
            if (!mismatch.empty()) ++flagged;
            table.row({num(q.n), q.op, num(q.l), num(r.ex_zz_table), num(q.ex_zz), num(r.ex_rz_table), num(q.ex_rz),
                       opt(r.ex_toffoli_table), opt(q.ex_toffoli), num(r.ex_max_l), num(q.ex_max_l), num(r.comp_zz),
                       num(q.comp_zz), num(r.comp_rz), num(q.comp_rz), opt(r.comp_toffoli), opt(q.comp_toffoli),
                       num(r.comp_max_l), num(q.comp_max_l), num(r.ex_crz_reduced), mismatch});
        }

        Csv census({"circuit", "n", "op", "l", "x", "rz", "zz", "czz", "crz", "cnot", "toffoli", "global_phase",
                    "other", "rz_expanded", "cnot_expanded", "toffoli_expanded", "max_locality", "depth",
                    "swap_linear", "swap_ring"});
        for (const auto& r : rows) {
            const auto& q = r.published;
            MarcusParams m = p;
            m.grid.n = q.n;
            const bool kinetic = q.op == "T";
            Circuit d = build_d(make_ansatz(q.n, q.l, Topology::Linear, tau / 2));
            const QuadraticPhases ph = kinetic ? kinetic_phases(m.grid, m.mu, tau / 2)
                                               : (q.op == "V0" ? v0_phases(m, tau / 2) : v1_phases(m, tau / 2));
            Circuit ex = explicit_quadratic_circuit(ph, q.n, true);
            if (!kinetic) {
                d.num_qubits = q.n + 1;
                ex.num_qubits = q.n + 1;
                const int polarity = q.op == "V0" ? 0 : 1;
                d = controlled(d, q.n, polarity);
                ex = controlled(ex, q.n, polarity);
            }
            census_row(census, "compressed_d", q, d);
            census_row(census, "explicit_reduced", q, ex);
        }

        json removed = json::object();
        for (const auto& [loc, c] : truncation_removed(8, 4, Topology::Linear)) removed[std::to_string(loc)] = c;
        Outcome out;
        out.artifacts = {{"table.csv", table.str()}, {"census.csv", census.str()}};
        out.summary = json{{"rows", static_cast<int>(rows.size())},
                           {"flagged_rows", flagged},
                           {"total_qubits_n8_p3", total_qubits(8, 3)},
                           {"kinetic_n8_l4_removed_by_locality", removed}};
        return out;
    };
}

Runner prepare_init_wavepacket(Node& root, unsigned) {
    const std::uint64_t seed = root.seed("seed", 0);
    GridSpec grid;
    grid.n = root.integer("n", 3, 1, 12);
    grid.L = root.positive("L", 20.0);
    const double a = root.positive("a", 0.015);
    const double c = root.number("c", 10.0);
    const double mu = root.positive("mu", 1.0);
    const int layers = root.integer("layers", 2, 0, 64);
    const double goal = root.positive("target_fidelity", 0.99);
    const AdamConfig adam = read_optimizer(root, seed, 600);

    return [=] {
        const State target = ground_state(grid, sample_diagonal(grid, [&](double x) { return a * (x - c) * (x - c); }), mu);
        const WavepacketFit fit = fit_wavepacket(target, layers, adam);
        json doc{{"n", grid.n},        {"L", grid.L},      {"a", a},
                 {"c", c},             {"mu", mu},         {"layers", layers},
                 {"seed", seed},       {"fidelity", fit.fidelity},
                 {"thetas", std::vector<double>(fit.thetas.data(), fit.thetas.data() + fit.thetas.size())}};
        Csv hist({"iter", "fidelity"});
        for (std::size_t i = 0; i < fit.history.size(); ++i) hist.row({num(static_cast<int>(i)), num(fit.history[i])});
        Outcome out;
        out.artifacts = {{"wavepacket.json", canonical_json(doc)}, {"history.csv", hist.str()}};
        out.converged = fit.fidelity >= goal;
        out.summary = json{{"fidelity", fit.fidelity}, {"iterations", static_cast<int>(fit.history.size())}};
        return out;
    };
}

Runner prepare_fastforward(Node& root, unsigned) {
    const std::uint64_t seed = root.seed("seed", 0);
    GridSpec grid;
    grid.n = root.integer("n", 3, 1, 12);
    grid.L = root.positive("L", 20.0);
    const double mu = root.positive("mu", 1.0);
    const double tau = root.positive("tau", 32.0);
    const int l = root.integer("l", grid.n, 1, grid.n);
    const Topology topo = topology_from_string(root.choice("topology", "linear", {"linear", "ring"}));
    const int steps = root.integer("steps", 10, 0, 100000);
    const double a = root.positive("a", 0.015);
    const double c = root.number("c", grid.L / 2);

    return [=] {
        const RealVector kd = kinetic_diagonal(grid, mu);
        VffAnsatz ansatz = make_ansatz(grid.n, l, topo, tau);
        ansatz.thetas = analytic_thetas(ansatz, walsh_transform(kd));
        ansatz.gammas = uniform_init(ansatz.gammas.size(), kPi, seed);

        const Circuit qft = centered_qft_circuit(grid.n);
        auto sandwich = [&](const VffAnsatz& a2) {
            Circuit s(grid.n);
            s.append(qft);
            s.append(ansatz_circuit(a2));
            s.append(inverse(qft));
            return s;
        };
        const Circuit one = sandwich(ansatz);
        const Unitary f = centered_dft_matrix(grid.n);
        const State psi0 =
            ground_state(grid, sample_diagonal(grid, [&](double x) { return a * (x - c) * (x - c); }), mu);

        Csv csv({"N", "fidelity", "exact_fidelity"});
        State stepped = psi0;
        double worst = 1.0, worst_exact = 1.0;
        for (int N = 0; N <= steps; ++N) {
            if (N > 0) apply_circuit<double>(one, stepped);
            State ff = psi0;
            apply_circuit<double>(sandwich(fast_forward(ansatz, N)), ff);
            const Eigen::VectorXcd phases = (kd.cast<cplx>() * cplx(0, -tau * N)).array().exp();
            const State exact = f.adjoint() * (phases.asDiagonal() * (f * psi0));
            const double fid = state_fidelity<double>(stepped, ff);
            const double fid_exact = state_fidelity<double>(exact, ff);
            worst = std::min(worst, fid);
            worst_exact = std::min(worst_exact, fid_exact);
            csv.row({num(N), num(fid), num(fid_exact)});
        }
        Outcome out;
        out.artifacts = {{"fastforward.csv", csv.str()}};
        out.summary = json{{"min_fidelity", worst}, {"min_exact_fidelity", worst_exact}};
        return out;
    };
}

}  // namespace

const std::vector<CommandSpec>& command_table() {
    static const std::vector<CommandSpec> table{
        {"compress",
         "Variationally compress a diagonal operator exp(-i tau f) into W D W^dagger",
         {{"--target", {"target"}, "kinetic, v0, v1 or file"},
          {"--target-file", {"target_file"}, "JSON with {n, terms} or {values}"},
          {"--n", {"grid", "n"}, "position qubits"},
          {"--l", {"l"}, "locality bound"},
          {"--topology", {"topology"}, "linear or ring"},
          {"--tau", {"tau"}, "evolution time of the compressed operator"},
          {"--seed", {"seed"}, "optimizer seed"},
          {"--max-iters", {"optimizer", "max_iters"}, "Adam iteration budget"}},
         prepare_compress},
        {"marcus",
         "Propagate one Marcus-model trajectory and fit its short-time rate",
         {{"--mode", {"mode"}, "explicit or compressed"},
          {"--dG", {"marcus", "dG"}, "driving force"},
          {"--steps", {"steps"}, "Trotter steps"},
          {"--tau", {"tau"}, "Trotter step"},
          {"--seed", {"seed"}, "optimizer seed"}},
         prepare_marcus},
        {"rate-scan",
         "Rate coefficients over a list of driving forces",
         {{"--seed", {"seed"}, "optimizer seed"}},
         prepare_rate_scan},
        {"rates-theory", "Classical Marcus and Franck-Condon rate curves", {}, prepare_rates_theory},
        {"count", "Gate census of explicit and compressed operators against the published table", {}, prepare_count},
        {"init-wavepacket",
         "Fit the real-amplitude loader to a harmonic ground state",
         {{"--n", {"n"}, "qubits"}, {"--layers", {"layers"}, "entangling layers"}, {"--seed", {"seed"}, "seed"}},
         prepare_init_wavepacket},
        {"fastforward-check",
         "Fidelity of fast-forwarded free-particle evolution",
         {{"--n", {"n"}, "qubits"},
          {"--steps", {"steps"}, "largest N"},
          {"--tau", {"tau"}, "single-step time"},
          {"--l", {"l"}, "locality bound"},
          {"--seed", {"seed"}, "seed for the W angles"}},
         prepare_fastforward},
    };
    return table;
}

std::string columns_reference() {
    return R"(# CSV columns

All numbers are written in shortest round-trip decimal form; atomic units throughout.

## compress/history.csv
- `iter`: Adam iteration, starting at 0
- `cost`: LHST cost at the iterate
- `best_cost`: lowest cost seen so far

## marcus/trace.csv
- `t`: time after `t / tau` Trotter steps
- `p0`: population of diabatic state 0 (objective qubit in |0>)
- `norm`: state norm
- `ancilla`: weight on basis states with any ancilla or comparator bit set

## marcus/rate.csv, rate-scan/scan.csv
- `dG`: driving force (positive lowers surface 1)
- `k`: minus the least-squares slope of `p0` against `t` for `t <= t_max`
- `residual`: RMS residual of that fit
- `mode`: `explicit` or `compressed`
- `tau`: Trotter step

Scan rows are ordered by mode (config order), then by `dG` (config order).

## rates-theory/theory.csv
- `dG`: driving force
- `marcus_rate`: classical Marcus rate at reaction free energy `-dG`
- `fc_rate`: zero-temperature golden-rule rate from grid Franck-Condon overlaps

## count/table.csv
One row per published table row. `*_published` columns hold the published value; the unsuffixed
column holds the regenerated value. `ex_zz`, `ex_rz` and `ex_toffoli` use the published convention
(twice the compressed pair count); `ex_crz_reduced` is the pair count of the commutativity-reduced
explicit circuit. `mismatch` lists the disagreeing fields separated by `;`.

## count/census.csv
- `circuit`: `compressed_d` (the diagonal layer) or `explicit_reduced`; potential rows are
  controlled on the objective qubit
- `x` ... `other`: gate counts by class (`czz`, `crz`: singly controlled ZZ and Rz)
- `rz_expanded`, `cnot_expanded`, `toffoli_expanded`: counts after expanding ZZ and CZZ
- `max_locality`, `depth`: largest covering span and greedy layer count
- `swap_linear`, `swap_ring`: sum of max(0, 2d - 3) over two-qubit gates

## init-wavepacket/history.csv
- `iter`: iteration
- `fidelity`: overlap with the target at that iteration

## fastforward-check/fastforward.csv
- `N`: number of steps
- `fidelity`: overlap of the rescaled ansatz with N applications of the single step
- `exact_fidelity`: overlap of the rescaled ansatz with exact free-particle evolution for time N tau
)";
}

}  // namespace vffc::cli

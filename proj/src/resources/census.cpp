#include "vffc/resources/census.hpp"

#include <algorithm>
#include <string>

#include "vffc/builders/quadratic.hpp"
#include "vffc/errors.hpp"
#include "vffc/vff/ansatz.hpp"

namespace vffc {

int op_locality(const GateOp& op, int num_qubits, Topology topology) {
    std::vector<int> qs = op_qubits(op);
    if (qs.empty()) return 0;
    if (qs.size() == 1) return 1;
    std::sort(qs.begin(), qs.end());
    const int span = qs.back() - qs.front();
    if (topology == Topology::Linear) return span + 1;
    int max_gap = qs.front() + num_qubits - qs.back();
    for (std::size_t i = 1; i < qs.size(); ++i) max_gap = std::max(max_gap, qs[i] - qs[i - 1]);
    return std::min(span, num_qubits - max_gap) + 1;
}

GateCensus count_gates(const Circuit& circuit, Topology topology) {
    validate(circuit);
    GateCensus c;
    std::vector<int> level(static_cast<std::size_t>(circuit.num_qubits), 0);
    for (const auto& op : circuit.ops) {
        switch (op.kind) {
            case GateKind::X: ++c.x; break;
            case GateKind::Rz: ++c.rz; break;
            case GateKind::Rx: ++c.rx; break;
            case GateKind::Ry: ++c.ry; break;
            case GateKind::ZZ: ++c.zz; break;
            case GateKind::CNOT: ++c.cnot; break;
            case GateKind::Toffoli: ++c.toffoli; break;
            case GateKind::ControlledRz: ++c.crz; break;
            case GateKind::ControlledRx: ++c.crx; break;
            case GateKind::GlobalPhase: ++c.global_phase; break;
            case GateKind::MultiControlled: {
                const std::size_t k = op.controls.size();
                if (k == 0) {
                    ++c.other;
                } else if (op.inner == GateKind::X && k == 1) {
                    ++c.cnot;
                } else if (op.inner == GateKind::X && k == 2) {
                    ++c.toffoli;
                } else if (op.inner == GateKind::Rz && k == 1) {
                    ++c.crz;
                } else if (op.inner == GateKind::Rx && k == 1) {
                    ++c.crx;
                } else if (op.inner == GateKind::ZZ && k == 1) {
                    ++c.czz;
                } else if (op.inner == GateKind::GlobalPhase && k == 1) {
                    ++c.rz;
                } else {
                    ++c.other;
                }
                break;
            }
        }
        c.max_locality = std::max(c.max_locality, op_locality(op, circuit.num_qubits, topology));
        const std::vector<int> qs = op_qubits(op);
        if (qs.empty()) continue;
        int layer = 0;
        for (int q : qs) layer = std::max(layer, level[static_cast<std::size_t>(q)]);
        for (int q : qs) level[static_cast<std::size_t>(q)] = layer + 1;
        c.depth = std::max(c.depth, layer + 1);
    }
    return c;
}

int swap_overhead(const Circuit& circuit, Topology topology) {
    int total = 0;
    for (const auto& op : circuit.ops) {
        if (op_qubits(op).size() != 2) continue;
        const int d = op_locality(op, circuit.num_qubits, topology) - 1;
        total += std::max(0, 2 * d - 3);
    }
    return total;
}

int total_qubits(int n, int pieces) {
    if (n < 1 || pieces < 1) throw ArgumentError("total_qubits: need n >= 1 and at least one piece");
    return n + 1 + (pieces - 1) + ceil_log2(static_cast<std::uint64_t>(n));
}

std::map<int, int> truncation_removed(int n, int l, Topology topology) {
    std::map<int, int> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int loc = term_locality((Mask{1} << i) | (Mask{1} << j), n, topology);
            if (loc > l) ++out[loc];
        }
    }
    return out;
}

const std::vector<PublishedCensusRow>& published_census() {
    static const std::vector<PublishedCensusRow> rows{
        {4, "T", 4, 12, 6, 16, 10, std::nullopt, std::nullopt, 4, 4},
        {4, "V0", 4, 12, 6, 16, 10, 24, 12, 4, 4},
        {4, "V1", 4, 12, 6, 16, 10, 24, 12, 4, 4},
        {6, "T", 4, 24, 12, 30, 18, std::nullopt, std::nullopt, 6, 4},
        {6, "V0", 6, 30, 15, 36, 21, 60, 30, 6, 6},
        {6, "V1", 6, 30, 15, 36, 21, 60, 30, 6, 6},
        {8, "T", 4, 36, 18, 44, 26, std::nullopt, std::nullopt, 8, 4},
        {8, "V0", 6, 50, 25, 58, 63, 100, 50, 8, 6},
        {8, "V1", 6, 50, 25, 58, 63, 100, 50, 8, 6},
    };
    return rows;
}

std::vector<CensusRow> census_table(const MarcusParams& base, double tau) {
    std::vector<CensusRow> out;
    for (const auto& pub : published_census()) {
        MarcusParams p = base;
        p.grid.n = pub.n;
        p.coupling.a.reset();
        const bool kinetic = pub.op == "T";

        const VffAnsatz a = make_ansatz(pub.n, pub.l, Topology::Linear, tau / 2);
        const Circuit d = build_d(a);
        Circuit widened = d;
        widened.num_qubits = pub.n + 1;
        const GateCensus comp = count_gates(kinetic ? d : controlled(widened, pub.n, 0));

        QuadraticPhases phases = kinetic ? kinetic_phases(p.grid, p.mu, tau / 2)
                                         : (pub.op == "V0" ? v0_phases(p, tau / 2) : v1_phases(p, tau / 2));
        const GateCensus ex = count_gates(explicit_quadratic_circuit(phases, pub.n, true));

        CensusRow row;
        row.published = pub;
        row.comp_zz = comp.zz + comp.czz;
        row.comp_rz = comp.rz_expanded();
        if (!kinetic) row.comp_toffoli = comp.toffoli_expanded();
        row.comp_max_l = count_gates(d).max_locality;
        row.ex_crz_reduced = ex.crz;
        row.ex_zz_table = 2 * row.comp_zz;
        row.ex_rz_table = row.ex_zz_table + pub.n;
        if (!kinetic) row.ex_toffoli_table = 2 * row.ex_zz_table;
        row.ex_max_l = ex.max_locality;

        auto flag = [&](const char* name, std::optional<int> got, std::optional<int> want) {
            if (got != want) row.mismatches.emplace_back(name);
        };
        flag("comp_zz", row.comp_zz, pub.comp_zz);
        flag("comp_rz", row.comp_rz, pub.comp_rz);
        flag("comp_toffoli", row.comp_toffoli, pub.comp_toffoli);
        flag("comp_max_l", row.comp_max_l, pub.comp_max_l);
        flag("ex_zz", row.ex_zz_table, pub.ex_zz);
        flag("ex_rz", row.ex_rz_table, pub.ex_rz);
        flag("ex_toffoli", row.ex_toffoli_table, pub.ex_toffoli);
        flag("ex_max_l", row.ex_max_l, pub.ex_max_l);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace vffc

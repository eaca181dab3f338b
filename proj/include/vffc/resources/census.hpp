#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vffc/marcus/model.hpp"
#include "vffc/qsim/circuit.hpp"
#include "vffc/walsh/walsh.hpp"

namespace vffc {

/**
 * @brief Gate counts by kind.
 *
 * Single-control MultiControlled ops are folded into their controlled classes (cnot, crz, crx,
 * czz); a controlled global phase counts as an rz on the control.
 */
struct GateCensus {
    int x = 0;
    int rz = 0;
    int rx = 0;
    int ry = 0;
    int zz = 0;
    int crz = 0;
    int crx = 0;
    int czz = 0;
    int cnot = 0;
    int toffoli = 0;
    int global_phase = 0;
    int other = 0;
    int max_locality = 0;
    int depth = 0;

    int total() const { return x + rz + rx + ry + zz + crz + crx + czz + cnot + toffoli + global_phase + other; }
    /// Rz-class rotations with each (C)ZZ contributing its internal Rz.
    int rz_expanded() const { return rz + crz + zz + czz; }
    int cnot_expanded() const { return cnot + 2 * zz; }
    /// Each CZZ needs two Toffolis around its controlled Rz.
    int toffoli_expanded() const { return toffoli + 2 * czz; }
};

GateCensus count_gates(const Circuit& circuit, Topology topology = Topology::Linear);

/// Locality of an op on `num_qubits` wires: covering span + 1 (ring: shortest covering arc).
int op_locality(const GateOp& op, int num_qubits, Topology topology);

/// Sum over two-qubit ops of max(0, 2d - 3), d the wire distance on the topology.
int swap_overhead(const Circuit& circuit, Topology topology);

/// n + 1 + (P - 1) + ceil(log2 n) for an n-qubit position register and a P-piece coupling.
int total_qubits(int n, int pieces);

/// Locality -> number of order-2 terms dropped by truncation to locality l.
std::map<int, int> truncation_removed(int n, int l, Topology topology);

struct PublishedCensusRow {
    int n = 0;
    std::string op;
    int l = 0;
    int ex_zz = 0;
    int comp_zz = 0;
    int ex_rz = 0;
    int comp_rz = 0;
    std::optional<int> ex_toffoli;
    std::optional<int> comp_toffoli;
    int ex_max_l = 0;
    int comp_max_l = 0;
};

/// Rows of the published gate-count table (V0 and V1 share a row there and are listed separately here).
const std::vector<PublishedCensusRow>& published_census();

struct CensusRow {
    PublishedCensusRow published;
    int comp_zz = 0;
    int comp_rz = 0;
    std::optional<int> comp_toffoli;
    int comp_max_l = 0;
    int ex_crz_reduced = 0;  ///< pair rotations in the commutativity-reduced explicit circuit
    int ex_zz_table = 0;     ///< published convention: twice the compressed count
    int ex_rz_table = 0;
    std::optional<int> ex_toffoli_table;
    int ex_max_l = 0;
    std::vector<std::string> mismatches;
};

/// Regenerates the table from constructed circuits (Linear topology) and flags disagreements.
std::vector<CensusRow> census_table(const MarcusParams& base, double tau);

}  // namespace vffc

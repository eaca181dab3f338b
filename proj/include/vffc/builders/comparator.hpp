#pragma once

#include <cstdint>

#include "vffc/qsim/circuit.hpp"

namespace vffc {

enum class Relation { Less, Greater };

/**
 * @brief Wire map for a position register with comparator qubits.
 *
 * Wires are ordered: position [0, n), the objective qubit (if present), ancillas, comparators.
 * total_wires() = n + num_ancilla + num_comparators, plus one with an objective.
 */
struct ComparatorLayout {
    int n = 0;
    int num_ancilla = 0;
    int num_comparators = 0;
    bool has_objective = false;

    /// num_ancilla = ceil(log2 n), never below 1.
    static ComparatorLayout make(int n, int num_comparators, bool with_objective = false);

    int objective() const;
    int ancilla(int i) const;
    int comparator(int i) const;
    int total_wires() const { return n + (has_objective ? 1 : 0) + num_ancilla + num_comparators; }
};

int comparator_ancilla_count(int n);

/**
 * @brief Flips comparator wire `index` iff the position register satisfies k < t (Less) or k > t (Greater).
 *
 * The bits of t are read from the lowest zero bit upward; each further bit adds an AND (t bit set)
 * or OR (t bit clear) stage realized with one Toffoli. Intermediate stages live on the ancillas and
 * are scheduled recursively so ceil(log2 n) ancillas suffice. With `uncompute` false the final
 * ancilla clean-up is left to a later inverse block. Less compares complemented bits.
 *
 * @throws ArgumentError for thresholds with a constant answer (Greater 2^n - 1, Less 0) or beyond 2^n - 1.
 */
Circuit comparator_circuit(const ComparatorLayout& layout, std::uint64_t threshold, Relation relation, int index,
                           bool uncompute = true);

}  // namespace vffc

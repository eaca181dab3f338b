#include "vffc/builders/comparator.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "vffc/errors.hpp"
#include "vffc/types.hpp"

namespace vffc {

int comparator_ancilla_count(int n) { return std::max(1, n <= 3 ? 1 : ceil_log2(static_cast<std::uint64_t>(n))); }

ComparatorLayout ComparatorLayout::make(int n, int num_comparators, bool with_objective) {
    if (n < 1 || n > 24) throw ArgumentError("ComparatorLayout: n out of range");
    if (num_comparators < 0) throw ArgumentError("ComparatorLayout: negative comparator count");
    return ComparatorLayout{n, comparator_ancilla_count(n), num_comparators, with_objective};
}

int ComparatorLayout::objective() const {
    if (!has_objective) throw ArgumentError("ComparatorLayout: no objective qubit");
    return n;
}

int ComparatorLayout::ancilla(int i) const {
    if (i < 0 || i >= num_ancilla) throw ArgumentError("ComparatorLayout: ancilla index out of range");
    return n + (has_objective ? 1 : 0) + i;
}

int ComparatorLayout::comparator(int i) const {
    if (i < 0 || i >= num_comparators) throw ArgumentError("ComparatorLayout: comparator index out of range");
    return n + (has_objective ? 1 : 0) + num_ancilla + i;
}

namespace {

enum class Stage { And, Or };

// Longest chain advance reachable into a fixed destination with `free` spare wires.
std::size_t reach(std::size_t free) { return std::size_t{1} << std::min<std::size_t>(free, 40); }

struct ChainEmitter {
    Circuit& out;
    const std::vector<int>& literal;  // position wire of chain element i
    const std::vector<Stage>& stage;  // combiner used to form element i (i >= 1)

    // dest ^= stage_j(literal[j], value on src)
    void step(std::size_t j, int src, int dest) {
        const int a = literal[j];
        if (stage[j] == Stage::And) {
            out.add(gates::toffoli(a, src, dest));
        } else {
            out.add(gates::x(dest)).add(gates::x(a)).add(gates::x(src));
            out.add(gates::toffoli(a, src, dest));
            out.add(gates::x(a)).add(gates::x(src));
        }
    }

    // With element i on wire src, xor element j (> i) into dest using the wires in `spare`.
    void advance(std::size_t i, int src, std::size_t j, int dest, std::vector<int> spare, bool undo_first_leg) {
        const std::size_t dist = j - i;
        if (dist == 1) {
            step(j, src, dest);
            return;
        }
        if (spare.empty() || dist > reach(spare.size())) {
            throw ResourceError("comparator: ancilla budget too small for chain length " + std::to_string(dist));
        }
        const int mid_wire = spare.back();
        spare.pop_back();
        const std::size_t second = std::min(dist - 1, reach(spare.size()));
        const std::size_t mid = j - second;
        advance(i, src, mid, mid_wire, spare, true);
        advance(mid, mid_wire, j, dest, spare, true);
        if (undo_first_leg) advance(i, src, mid, mid_wire, spare, true);
    }
};

}  // namespace

Circuit comparator_circuit(const ComparatorLayout& layout, std::uint64_t threshold, Relation relation, int index,
                           bool uncompute) {
    const int n = layout.n;
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    if (threshold > top) throw ArgumentError("comparator: threshold exceeds register range");
    if (relation == Relation::Greater && threshold == top) {
        throw ArgumentError("comparator: Greater with threshold 2^n - 1 is always false");
    }
    if (relation == Relation::Less && threshold == 0) {
        throw ArgumentError("comparator: Less with threshold 0 is always false");
    }
    const int target = layout.comparator(index);
    const std::uint64_t t = relation == Relation::Greater ? threshold : top - threshold;

    int first = 0;
    while ((t >> first) & 1U) ++first;
    std::vector<int> literal;
    std::vector<Stage> stage;
    for (int b = first; b < n; ++b) {
        literal.push_back(b);
        stage.push_back(((t >> b) & 1U) ? Stage::And : Stage::Or);
    }

    Circuit c(layout.total_wires());
    if (relation == Relation::Less) {
        for (int q : literal) c.add(gates::x(q));
    }
    const std::size_t last = literal.size() - 1;
    if (last == 0) {
        c.add(gates::cnot(literal[0], target));
    } else {
        std::vector<int> spare;
        for (int a = layout.num_ancilla - 1; a >= 0; --a) spare.push_back(layout.ancilla(a));
        ChainEmitter emit{c, literal, stage};
        emit.advance(0, literal[0], last, target, spare, uncompute);
    }
    if (relation == Relation::Less) {
        for (int q : literal) c.add(gates::x(q));
    }
    return c;
}

}  // namespace vffc

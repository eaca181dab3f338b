#include "vffc/builders/coupling.hpp"

#include <cmath>
#include <string>

#include "vffc/errors.hpp"

namespace vffc {

double PiecewiseCoupling::value(const GridSpec& grid, std::uint64_t k) const {
    std::size_t piece = 0;
    while (piece < breakpoints.size() && k >= breakpoints[piece]) ++piece;
    const double x = grid.dx() * static_cast<double>(k);
    return pieces.at(piece).alpha * x + pieces.at(piece).beta;
}

Circuit CouplingBlocks::assemble() const {
    Circuit c(body.num_qubits);
    for (const auto& b : compute) c.append(b);
    c.append(body);
    for (const auto& b : uncompute) c.append(b);
    return c;
}

namespace {

void check_coupling(const ComparatorLayout& layout, const GridSpec& grid, const PiecewiseCoupling& coupling) {
    grid.check();
    if (layout.n != grid.n) throw ArgumentError("coupling: layout and grid disagree on n");
    if (!layout.has_objective) throw ArgumentError("coupling: layout needs an objective qubit");
    if (coupling.pieces.size() != coupling.breakpoints.size() + 1) {
        throw ArgumentError("coupling: expected one more piece than breakpoints");
    }
    if (static_cast<int>(coupling.breakpoints.size()) != layout.num_comparators) {
        throw ArgumentError("coupling: layout provides " + std::to_string(layout.num_comparators) +
                            " comparators, coupling needs " + std::to_string(coupling.breakpoints.size()));
    }
    std::uint64_t prev = 0;
    for (auto b : coupling.breakpoints) {
        if (b <= prev || b >= grid.size()) {
            throw ArgumentError("coupling: breakpoints must increase strictly inside (0, 2^n)");
        }
        prev = b;
    }
}

}  // namespace

CouplingBlocks piecewise_coupling_blocks(const ComparatorLayout& layout, const GridSpec& grid,
                                         const PiecewiseCoupling& coupling, double tau) {
    check_coupling(layout, grid, coupling);
    const int width = layout.total_wires();
    const int obj = layout.objective();
    const std::size_t P = coupling.pieces.size();

    CouplingBlocks blocks;
    for (std::size_t i = 0; i + 1 < P; ++i) {
        blocks.compute.push_back(
            comparator_circuit(layout, coupling.breakpoints[i], Relation::Less, static_cast<int>(i)));
    }
    blocks.body = Circuit(width);
    for (std::size_t p = 0; p < P; ++p) {
        std::vector<int> ctrls;
        std::vector<int> pols;
        if (p > 0) {
            ctrls.push_back(layout.comparator(static_cast<int>(p) - 1));
            pols.push_back(0);
        }
        if (p + 1 < P) {
            ctrls.push_back(layout.comparator(static_cast<int>(p)));
            pols.push_back(1);
        }
        const auto& piece = coupling.pieces[p];
        if (piece.beta != 0.0) {
            GateOp r = gates::rx(obj, 2.0 * tau * piece.beta);
            blocks.body.add(ctrls.empty() ? r : gates::multi_controlled(r, ctrls, pols));
        }
        if (piece.alpha != 0.0) {
            for (int j = 0; j < grid.n; ++j) {
                std::vector<int> c2 = ctrls;
                std::vector<int> p2 = pols;
                c2.push_back(j);
                p2.push_back(1);
                const double angle = 2.0 * tau * piece.alpha * grid.dx() * std::ldexp(1.0, j);
                blocks.body.add(gates::multi_controlled(gates::rx(obj, angle), std::move(c2), std::move(p2)));
            }
        }
    }
    for (auto it = blocks.compute.rbegin(); it != blocks.compute.rend(); ++it) {
        blocks.uncompute.push_back(inverse(*it));
    }
    return blocks;
}

Circuit piecewise_coupling_circuit(const ComparatorLayout& layout, const GridSpec& grid,
                                   const PiecewiseCoupling& coupling, double tau) {
    return piecewise_coupling_blocks(layout, grid, coupling, tau).assemble();
}

double step_height(const GridSpec& grid, const StepCoupling& step) {
    grid.check();
    if (step.hi < step.lo || step.hi >= grid.size()) throw ArgumentError("step coupling: window out of range");
    if (!(step.beta > 0.0)) throw ArgumentError("step coupling: beta must be positive");
    const double width = static_cast<double>(step.hi - step.lo + 1) * grid.dx();
    return step.C0 * std::sqrt(kPi / step.beta) / width;
}

PiecewiseCoupling step_as_piecewise(const GridSpec& grid, const StepCoupling& step) {
    const double h = step_height(grid, step);
    PiecewiseCoupling pc;
    if (step.lo > 0) {
        pc.breakpoints.push_back(step.lo);
        pc.pieces.push_back({0.0, 0.0});
    }
    pc.pieces.push_back({0.0, h});
    if (step.hi + 1 < grid.size()) {
        pc.breakpoints.push_back(step.hi + 1);
        pc.pieces.push_back({0.0, 0.0});
    }
    return pc;
}

int step_comparator_count(const GridSpec& grid, const StepCoupling& step) {
    return static_cast<int>(step_as_piecewise(grid, step).breakpoints.size());
}

Circuit step_coupling_circuit(const ComparatorLayout& layout, const GridSpec& grid, const StepCoupling& step,
                              double tau) {
    return piecewise_coupling_circuit(layout, grid, step_as_piecewise(grid, step), tau);
}

}  // namespace vffc

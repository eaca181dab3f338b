#pragma once

#include <vector>

#include <json.hpp>

#include "vffc/qsim/circuit.hpp"
#include "vffc/types.hpp"

namespace vffc {

enum class Topology { Linear, Ring };

const char* to_string(Topology t);
Topology topology_from_string(const std::string& s);

struct WalshTerm {
    Mask mask = 0;
    double coeff = 0.0;

    bool operator==(const WalshTerm&) const = default;
};

/// f(k) = sum_j coeff_j (-1)^{popcount(j & k)}
struct DiagonalSpec {
    int n = 0;
    std::vector<WalshTerm> terms;
};

/// Forward transform; returns all 2^n coefficients in mask order.
DiagonalSpec walsh_transform(const RealVector& values);

/// Dense reconstruction of the diagonal from (possibly truncated) coefficients.
RealVector inverse_walsh(const DiagonalSpec& spec);

int term_order(Mask mask);

/// Order 0 -> 0, order 1 -> 1, a pair (i, j) -> distance + 1 on the given topology.
/// @throws UnsupportedError for order >= 3.
int term_locality(Mask mask, int n, Topology topology);

/// Keeps terms with order <= max_order and locality <= max_locality; coefficients are untouched.
DiagonalSpec truncate(const DiagonalSpec& spec, int max_order, int max_locality, Topology topology);

/// Masks of order 1 and 2 admitted by (max_locality, topology), ascending.
std::vector<Mask> admissible_masks(int n, int max_locality, Topology topology);

/**
 * @brief Circuit for exp(-i tau sum_j c_j Z^j).
 *
 * Order-1 terms become Rz(2 tau c), order-2 terms ZZ(2 tau c); the accompanying phases and the
 * order-0 term are collected into one trailing GlobalPhase.
 * @throws UnsupportedError when a term has order >= 3.
 */
Circuit diagonal_circuit(const DiagonalSpec& spec, double tau);

nlohmann::json diagonal_spec_to_json(const DiagonalSpec& spec);
DiagonalSpec diagonal_spec_from_json(const nlohmann::json& j);

}  // namespace vffc

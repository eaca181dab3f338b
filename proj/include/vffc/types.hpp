#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace vffc {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using StateVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using DenseUnitary = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

using cplx = std::complex<double>;
using State = StateVector<double>;
using Unitary = DenseUnitary<double>;
using RealVector = Eigen::VectorXd;

using Mask = std::uint32_t;

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr int popcount(std::uint64_t v) noexcept { return __builtin_popcountll(v); }

/// Smallest c with 2^c >= v; defined as 0 for v <= 1.
inline constexpr int ceil_log2(std::uint64_t v) noexcept {
    int c = 0;
    while ((std::uint64_t{1} << c) < v) ++c;
    return c;
}

}  // namespace vffc

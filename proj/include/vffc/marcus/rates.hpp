#pragma once

#include <optional>
#include <vector>

#include "vffc/marcus/dynamics.hpp"

namespace vffc {

struct RateResult {
    double dG = 0.0;
    double k = 0.0;
    double intercept = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    double residual = 0.0;  ///< RMS of the linear fit
    int samples = 0;
};

/**
 * @brief Ordinary least squares of P0 against t over samples with t <= t_max; k = -slope.
 * @throws ArgumentError with fewer than three samples in the window.
 */
RateResult extract_rate(const std::vector<double>& times, const std::vector<double>& p0, double t_max = 100.0);
RateResult extract_rate(const PopulationTrace& trace, double t_max = 100.0);

struct ScanRow {
    double dG = 0.0;
    Mode mode = Mode::Explicit;
    double tau = 1.0;
    RateResult rate;
};

struct ScanRequest {
    std::vector<double> dG_values;
    std::vector<Mode> modes{Mode::Explicit};
    double tau = 1.0;
    double t_max = 100.0;
    CompressionSettings compression;
    /// Used instead of compressing when set.
    std::optional<CompressedOperators> operators;
    unsigned workers = 0;
};

/// Runs simulate + extract_rate for every (mode, dG); rows ordered by mode, then dG.
std::vector<ScanRow> rate_scan(const MarcusParams& p, const ScanRequest& request);

struct MarcusRateParams {
    double v_coup_sq = 1e-4;
    double lambda = 0.135;
    double kT = 0.01;
};

/// 2 pi |V|^2 / sqrt(4 pi lambda kT) exp(-(dG + lambda)^2 / (4 lambda kT)); dG is the reaction free energy.
double marcus_rate_theory(const MarcusRateParams& params, double dG);

struct FcRate {
    double rate = 0.0;
    double e0 = 0.0;                 ///< ground energy on surface 0
    double window = 0.0;             ///< Gaussian width (local level spacing of surface 1)
    RealVector energies;             ///< surface-1 eigenvalues
    RealVector overlaps;             ///< |<chi_0^(0)|chi_v^(1)>|^2
    int bound_states = 0;
};

/**
 * @brief Zero-temperature golden-rule rate from Franck-Condon overlaps on the grid.
 *
 * rate = 2 pi v_coup_sq sum_v |<chi_0|chi_v>|^2 g(E_v - E_0), g a normalized Gaussian whose width
 * is the surface-1 level spacing next to E_0 unless `window` is positive.
 * @throws DomainError when either surface holds fewer than three bound states.
 */
FcRate fc_rate_low_temperature(const MarcusParams& p, double v_coup_sq, double window = 0.0);

}  // namespace vffc

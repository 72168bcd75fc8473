// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_DUALITY_HPP
#define PRELOG_DUALITY_HPP

#include <span>
#include <string>
#include <vector>

#include "prelog/channel.hpp"
#include "prelog/output_density.hpp"
#include "prelog/rng.hpp"

namespace prelog {

/// Monte Carlo evaluation of the duality upper bound on the mutual
/// information of the unit-rank channel at one SNR, with the diagnostic
/// expectations that the bound's bookkeeping terms are made of.
struct DualityEstimate {
    double rho_db = 0.0;
    double rho = 0.0;            // linear SNR
    double mi_upper_block = 0.0; // nats per block
    double per_use = 0.0;        // nats per channel use (mi_upper_block / n)
    double c1 = 0.0;             // E[sigma1^2]/(m n rho) + E[sum_{i>=2} sigma_i^2]
    double c2 = 0.0;             // E[log sigma1^2] - E[log(1 + ||x||^2)]
    double std_err = 0.0;        // standard error of mi_upper_block
    long samples = 0;            // accepted samples
    long rejected_collisions = 0;

    // Component means and their standard errors, for the cap checks.
    double c2_std_err = 0.0;
    double sigma1_sq_mean = 0.0;
    double sigma1_sq_std_err = 0.0;
    double tail_energy_mean = 0.0;
    double tail_energy_std_err = 0.0;
    double log_sigma1_sq_mean = 0.0;
    double log_sigma1_sq_std_err = 0.0;
    double expected_log_1p_norm2 = 0.0;
};

/// Draws `samples` blocks y = s x^T + w under the given input law and
/// averages -log r(y) - h(y|x). Work is cut into fixed-size chunks, each
/// with a stream derived from (stream, chunk index), so the result is
/// bit-identical for every worker count. Samples with colliding singular
/// values are rejected and counted; a rejected fraction above 0.1% throws
/// DegenerateSampleError (collisions have probability zero, so that
/// signals a bug). Requires samples >= 1000.
DualityEstimate estimate_duality_bound(InputKind kind, const OutputDensityParams &params,
                                       long samples, const RngStream &stream);

/// Ordinary least squares y = slope * x + intercept.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Bound values over an SNR grid plus the fitted high-SNR slope, which
/// estimates the pre-log of the evaluated bound.
struct BoundCurve {
    std::vector<DualityEstimate> grid;
    double fitted_slope = 0.0;
    double fit_residual = 0.0;
};

/// Runs estimate_duality_bound on every grid point (grid in dB, strictly
/// increasing, at least 3 points spanning >= 20 dB, all at or above 30 dB)
/// and fits per-use bound values against log of the linear SNR.
BoundCurve sweep_and_fit(InputKind kind, int m, int n, std::span<const double> rho_grid_db,
                         long samples, const RngStream &stream);

/// CSV rows: rho_db, rho_linear, mi_upper_nats_per_block, per_use_nats,
/// c1, c2, std_err, samples, rejected_collisions.
std::string bound_curve_csv(const BoundCurve &curve);

/// JSON summary with fitted_slope, fit_residual and the full grid.
std::string bound_curve_json(const BoundCurve &curve);

} // namespace prelog

#endif // PRELOG_DUALITY_HPP

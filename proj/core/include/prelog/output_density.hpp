// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_OUTPUT_DENSITY_HPP
#define PRELOG_OUTPUT_DENSITY_HPP

#include <algorithm>
#include <span>

#include "prelog/complex_matrix.hpp"

namespace prelog {

/// Shape and SNR of the engineered output distribution for the unit-rank
/// (q = 1) channel with m receive antennas and block length n.
struct OutputDensityParams {
    int m = 1;        // receive antennas
    int n = 1;        // block length
    double rho = 1.0; // SNR, linear

    int p() const noexcept { return std::min(m, n); }
    int l() const noexcept { return std::max(m, n); }

    /// Two singular values closer than collision_eps * sigma1^2 (squared
    /// scale) make the SVD Jacobian blow up; such samples are rejected.
    double collision_eps = 1e-12;

    void validate() const; // throws ValidationError
};

/// Log density of the leading singular value: a Rayleigh-type law with
/// scale matched to the signal energy, r(s) = (2s/(m*n*rho)) *
/// exp(-s^2/(m*n*rho)) for s > 0.
double log_r_sigma1(double sigma1, const OutputDensityParams &params);

/// Log joint density of the trailing singular values (sigma_2 ... sigma_P,
/// passed strictly descending and positive): the law of the ordered
/// singular values of an (m-1) x (n-1) i.i.d. CN(0,1) matrix. Returns 0
/// (empty product) when p == 1.
double log_r_tail(std::span<const double> sigmas, const OutputDensityParams &params);

/// Log of the SVD volume element J(sigma_1 ... sigma_P) =
/// prod_i sigma_i^(2(L-P)+1) * prod_{i<j} (sigma_i^2 - sigma_j^2)^2.
/// Throws DegenerateSampleError on singular-value collisions (see
/// OutputDensityParams::collision_eps).
double log_jacobian(std::span<const double> sigmas, const OutputDensityParams &params);

/// Log volume of the manifold of complex n_dim x m_dim matrices with
/// orthonormal columns: prod_{i=n-m+1}^{n} 2 pi^i / (i-1)!.
double stiefel_log_volume(int n_dim, int m_dim);

/// Log of the engineered output density evaluated at y (an m x n matrix with
/// distinct positive singular values): the singular-value factors above,
/// Haar-uniform factors for the two orthonormal frames, divided by the SVD
/// Jacobian. The left frame lives on the phase-fixed submanifold (first row
/// real nonnegative), which quotients out p independent phases and scales
/// its Haar constant by (2 pi)^p; the Haar constants shift the bound's
/// intercept only, never its slope.
double log_r_output(const ComplexMatrix &y, const OutputDensityParams &params);

/// log_r_output evaluated from precomputed singular values (descending,
/// length p); the singular-vector frames only contribute the constant Haar
/// factors, so the matrix itself is not needed.
double log_r_output_from_sigmas(std::span<const double> sigmas, const OutputDensityParams &params);

/// Differential entropy of the output given the input, per block:
/// m * E[log(1 + ||x||^2)] + m * n * log(pi e).
double h_y_given_x(double expected_log_1_plus_norm2, int m, int n);

} // namespace prelog

#endif // PRELOG_OUTPUT_DENSITY_HPP

// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/output_density.hpp"

#include <cmath>
#include <numbers>

#include "prelog/errors.hpp"
#include "prelog/svd.hpp"

namespace prelog {

namespace {

constexpr double kLog2Pi = 1.8378770664093453; // log(2*pi)

double log_factorial(int k) {
    return std::lgamma(static_cast<double>(k) + 1.0);
}

void require_strictly_descending_positive(std::span<const double> sigmas, const char *who) {
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        if (!(sigmas[i] > 0.0)) {
            throw ValidationError(std::string(who) + ": singular values must be positive");
        }
        if (i > 0 && !(sigmas[i - 1] > sigmas[i])) {
            throw ValidationError(std::string(who) + ": singular values must be strictly descending");
        }
    }
}

} // namespace

void OutputDensityParams::validate() const {
    if (m < 1 || n < 1) {
        throw ValidationError("output density: m and n must be >= 1");
    }
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw ValidationError("output density: rho must be positive and finite");
    }
    if (!(collision_eps > 0.0)) {
        throw ValidationError("output density: collision_eps must be positive");
    }
}

double log_r_sigma1(double sigma1, const OutputDensityParams &params) {
    params.validate();
    if (!(sigma1 > 0.0)) {
        throw ValidationError("log_r_sigma1: sigma1 must be positive");
    }
    const double scale = static_cast<double>(params.m) * static_cast<double>(params.n) * params.rho;
    return std::log(2.0) + std::log(sigma1) - std::log(scale) - sigma1 * sigma1 / scale;
}

double log_r_tail(std::span<const double> sigmas, const OutputDensityParams &params) {
    params.validate();
    const int p = params.p();
    const int l = params.l();
    if (sigmas.size() != static_cast<std::size_t>(p - 1)) {
        throw ValidationError("log_r_tail: expected p - 1 trailing singular values");
    }
    if (p == 1) {
        return 0.0;
    }
    require_strictly_descending_positive(sigmas, "log_r_tail");

    // Indices run i = 2 .. p in the block's numbering; sigmas[k] is sigma_{k+2}.
    double acc = static_cast<double>(p - 1) * std::log(2.0);
    const double power = 2.0 * static_cast<double>(l - p) + 1.0;
    for (int k = 0; k < p - 1; ++k) {
        const int i = k + 2;
        const double s = sigmas[k];
        acc += -s * s + power * std::log(s) - log_factorial(l - i) - log_factorial(p - i);
    }
    for (int a = 0; a + 1 < p - 1; ++a) {
        for (int b = a + 1; b < p - 1; ++b) {
            const double gap = sigmas[a] * sigmas[a] - sigmas[b] * sigmas[b];
            acc += 2.0 * std::log(gap);
        }
    }
    return acc;
}

double log_jacobian(std::span<const double> sigmas, const OutputDensityParams &params) {
    params.validate();
    const int p = params.p();
    const int l = params.l();
    if (sigmas.size() != static_cast<std::size_t>(p)) {
        throw ValidationError("log_jacobian: expected p singular values");
    }
    require_strictly_descending_positive(sigmas, "log_jacobian");

    const double s1_sq = sigmas[0] * sigmas[0];
    for (int i = 0; i + 1 < p; ++i) {
        if (sigmas[i] * sigmas[i] - sigmas[i + 1] * sigmas[i + 1] < params.collision_eps * s1_sq) {
            throw DegenerateSampleError("log_jacobian: coincident singular values");
        }
    }

    const double power = 2.0 * static_cast<double>(l - p) + 1.0;
    double acc = 0.0;
    for (int i = 0; i < p; ++i) {
        acc += power * std::log(sigmas[i]);
    }
    for (int a = 0; a + 1 < p; ++a) {
        for (int b = a + 1; b < p; ++b) {
            const double gap = sigmas[a] * sigmas[a] - sigmas[b] * sigmas[b];
            acc += 2.0 * std::log(gap);
        }
    }
    return acc;
}

double stiefel_log_volume(int n_dim, int m_dim) {
    if (m_dim < 1 || n_dim < m_dim) {
        throw ValidationError("stiefel_log_volume: need n_dim >= m_dim >= 1");
    }
    double acc = 0.0;
    for (int i = n_dim - m_dim + 1; i <= n_dim; ++i) {
        acc += std::log(2.0) + static_cast<double>(i) * std::log(std::numbers::pi) - log_factorial(i - 1);
    }
    return acc;
}

double log_r_output_from_sigmas(std::span<const double> sigmas, const OutputDensityParams &params) {
    params.validate();
    const int p = params.p();
    if (sigmas.size() != static_cast<std::size_t>(p)) {
        throw ValidationError("log_r_output_from_sigmas: expected p singular values");
    }
    if (!(sigmas.back() > 0.0)) {
        throw DegenerateSampleError("log_r_output: zero singular value");
    }

    const double log_r_v = -stiefel_log_volume(params.n, p);
    const double log_r_u = -(stiefel_log_volume(params.m, p) - static_cast<double>(p) * kLog2Pi);

    return log_r_u + log_r_v + log_r_sigma1(sigmas[0], params) +
           log_r_tail(sigmas.subspan(1), params) - log_jacobian(sigmas, params);
}

double log_r_output(const ComplexMatrix &y, const OutputDensityParams &params) {
    params.validate();
    if (y.rows() != static_cast<std::size_t>(params.m) || y.cols() != static_cast<std::size_t>(params.n)) {
        throw ValidationError("log_r_output: y must be m x n");
    }
    if (!y.is_finite()) {
        throw ValidationError("log_r_output: y has non-finite entries");
    }
    return log_r_output_from_sigmas(singular_values(y), params);
}

double h_y_given_x(double expected_log_1_plus_norm2, int m, int n) {
    if (m < 1 || n < 1) {
        throw ValidationError("h_y_given_x: m and n must be >= 1");
    }
    if (!(expected_log_1_plus_norm2 >= 0.0)) {
        throw ValidationError("h_y_given_x: E[log(1 + ||x||^2)] must be nonnegative");
    }
    const double log_pi_e = std::log(std::numbers::pi) + 1.0;
    return static_cast<double>(m) * expected_log_1_plus_norm2 +
           static_cast<double>(m) * static_cast<double>(n) * log_pi_e;
}

} // namespace prelog

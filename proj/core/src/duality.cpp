// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/duality.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "prelog/errors.hpp"
#include "prelog/parallel.hpp"
#include "prelog/svd.hpp"

namespace prelog {

namespace {

constexpr long kChunkSize = 4096;

// Accumulator layout for one Monte Carlo chunk.
enum AccIndex : std::size_t {
    kSumT = 0, // t = -log r(y) - m*log(1 + ||x||^2)
    kSumT2,
    kSumS1Sq,
    kSumS1Sq2,
    kSumTail,
    kSumTail2,
    kSumLogS1Sq,
    kSumLogS1Sq2,
    kSumLog1pX,
    kSumLog1pX2,
    kSumDiff, // log sigma1^2 - log(1 + ||x||^2)
    kSumDiff2,
    kAccepted,
    kRejected,
    kAccWidth
};

struct MeanErr {
    double mean = 0.0;
    double std_err = 0.0;
};

MeanErr mean_err(double sum, double sum_sq, double count) {
    MeanErr out;
    out.mean = sum / count;
    if (count > 1.5) {
        const double var = std::max(0.0, (sum_sq - sum * sum / count) / (count - 1.0));
        out.std_err = std::sqrt(var / count);
    }
    return out;
}

} // namespace

DualityEstimate estimate_duality_bound(InputKind kind, const OutputDensityParams &params,
                                       long samples, const RngStream &stream) {
    params.validate();
    if (samples < 1000) {
        throw ValidationError("estimate_duality_bound: need at least 1000 samples");
    }
    const int m = params.m;
    const int n = params.n;

    auto chunk_work = [&](long chunk_index, long chunk_samples) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk_index));
        std::vector<double> acc(kAccWidth, 0.0);
        for (long i = 0; i < chunk_samples; ++i) {
            const std::vector<cplx> x =
                sample_power_input(static_cast<std::size_t>(n), params.rho, kind, rng);
            const ComplexMatrix s = sample_gaussian_matrix(static_cast<std::size_t>(m), 1, rng);
            ComplexMatrix y =
                sample_gaussian_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), rng);
            for (int a = 0; a < m; ++a) {
                for (int k = 0; k < n; ++k) {
                    y(static_cast<std::size_t>(a), static_cast<std::size_t>(k)) +=
                        s(static_cast<std::size_t>(a), 0) * x[static_cast<std::size_t>(k)];
                }
            }

            double log_r;
            std::vector<double> sigmas;
            try {
                sigmas = singular_values(y);
                log_r = log_r_output_from_sigmas(sigmas, params);
            } catch (const DegenerateSampleError &) {
                acc[kRejected] += 1.0;
                continue;
            }

            double norm_sq = 0.0;
            for (const cplx &z : x) {
                norm_sq += std::norm(z);
            }
            const double log1px = std::log1p(norm_sq);
            const double t = -log_r - static_cast<double>(m) * log1px;

            const double s1_sq = sigmas[0] * sigmas[0];
            double tail = 0.0;
            for (std::size_t j = 1; j < sigmas.size(); ++j) {
                tail += sigmas[j] * sigmas[j];
            }
            const double log_s1_sq = std::log(s1_sq);
            const double diff = log_s1_sq - log1px;

            acc[kSumT] += t;
            acc[kSumT2] += t * t;
            acc[kSumS1Sq] += s1_sq;
            acc[kSumS1Sq2] += s1_sq * s1_sq;
            acc[kSumTail] += tail;
            acc[kSumTail2] += tail * tail;
            acc[kSumLogS1Sq] += log_s1_sq;
            acc[kSumLogS1Sq2] += log_s1_sq * log_s1_sq;
            acc[kSumLog1pX] += log1px;
            acc[kSumLog1pX2] += log1px * log1px;
            acc[kSumDiff] += diff;
            acc[kSumDiff2] += diff * diff;
            acc[kAccepted] += 1.0;
        }
        return acc;
    };

    const std::vector<double> acc = run_chunked(samples, kChunkSize, chunk_work);

    const double accepted = acc[kAccepted];
    const double rejected = acc[kRejected];
    if (rejected > 1e-3 * static_cast<double>(samples)) {
        throw DegenerateSampleError(
            "estimate_duality_bound: implausibly many singular-value collisions");
    }
    if (accepted < 2.0) {
        throw DegenerateSampleError("estimate_duality_bound: no usable samples");
    }

    const double log_pi_e = std::log(std::numbers::pi) + 1.0;

    DualityEstimate est;
    est.rho = params.rho;
    est.rho_db = 10.0 * std::log10(params.rho);
    est.samples = static_cast<long>(accepted);
    est.rejected_collisions = static_cast<long>(rejected);

    const MeanErr t_stats = mean_err(acc[kSumT], acc[kSumT2], accepted);
    est.mi_upper_block =
        t_stats.mean - static_cast<double>(m) * static_cast<double>(n) * log_pi_e;
    est.per_use = est.mi_upper_block / static_cast<double>(n);
    est.std_err = t_stats.std_err;

    const MeanErr s1 = mean_err(acc[kSumS1Sq], acc[kSumS1Sq2], accepted);
    const MeanErr tail = mean_err(acc[kSumTail], acc[kSumTail2], accepted);
    const MeanErr log_s1 = mean_err(acc[kSumLogS1Sq], acc[kSumLogS1Sq2], accepted);
    const MeanErr diff = mean_err(acc[kSumDiff], acc[kSumDiff2], accepted);

    est.sigma1_sq_mean = s1.mean;
    est.sigma1_sq_std_err = s1.std_err;
    est.tail_energy_mean = tail.mean;
    est.tail_energy_std_err = tail.std_err;
    est.log_sigma1_sq_mean = log_s1.mean;
    est.log_sigma1_sq_std_err = log_s1.std_err;
    est.expected_log_1p_norm2 = acc[kSumLog1pX] / accepted;

    est.c1 = s1.mean / (static_cast<double>(m) * static_cast<double>(n) * params.rho) + tail.mean;
    est.c2 = diff.mean;
    est.c2_std_err = diff.std_err;
    return est;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ValidationError("fit_line: need matching x/y with at least 2 points");
    }
    const double count = static_cast<double>(x.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= count;
    mean_y /= count;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (!(sxx > 0.0)) {
        throw ValidationError("fit_line: x values are all equal");
    }

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / count);
    return fit;
}

BoundCurve sweep_and_fit(InputKind kind, int m, int n, std::span<const double> rho_grid_db,
                         long samples, const RngStream &stream) {
    if (rho_grid_db.size() < 3) {
        throw ValidationError("sweep_and_fit: need at least 3 SNR points");
    }
    for (std::size_t i = 1; i < rho_grid_db.size(); ++i) {
        if (!(rho_grid_db[i] > rho_grid_db[i - 1])) {
            throw ValidationError("sweep_and_fit: SNR grid must be strictly increasing");
        }
    }
    if (rho_grid_db.back() - rho_grid_db.front() < 20.0) {
        throw ValidationError("sweep_and_fit: SNR grid must span at least 20 dB");
    }
    if (rho_grid_db.front() < 30.0) {
        throw ValidationError("sweep_and_fit: slope extraction needs all points at or above 30 dB");
    }

    BoundCurve curve;
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t g = 0; g < rho_grid_db.size(); ++g) {
        OutputDensityParams params;
        params.m = m;
        params.n = n;
        params.rho = std::pow(10.0, rho_grid_db[g] / 10.0);
        DualityEstimate est =
            estimate_duality_bound(kind, params, samples, stream.substream(g));
        est.rho_db = rho_grid_db[g];
        xs.push_back(std::log(params.rho));
        ys.push_back(est.per_use);
        curve.grid.push_back(est);
    }

    const LineFit fit = fit_line(xs, ys);
    curve.fitted_slope = fit.slope;
    curve.fit_residual = fit.rms_residual;
    return curve;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json estimate_to_json(const DualityEstimate &est) {
    return nlohmann::json{{"rho_db", est.rho_db},
                          {"rho", est.rho},
                          {"mi_upper_block", est.mi_upper_block},
                          {"per_use", est.per_use},
                          {"c1", est.c1},
                          {"c2", est.c2},
                          {"std_err", est.std_err},
                          {"samples", est.samples},
                          {"rejected_collisions", est.rejected_collisions},
                          {"c2_std_err", est.c2_std_err},
                          {"sigma1_sq_mean", est.sigma1_sq_mean},
                          {"sigma1_sq_std_err", est.sigma1_sq_std_err},
                          {"tail_energy_mean", est.tail_energy_mean},
                          {"tail_energy_std_err", est.tail_energy_std_err},
                          {"log_sigma1_sq_mean", est.log_sigma1_sq_mean},
                          {"log_sigma1_sq_std_err", est.log_sigma1_sq_std_err},
                          {"expected_log_1p_norm2", est.expected_log_1p_norm2}};
}

} // namespace

std::string bound_curve_csv(const BoundCurve &curve) {
    std::string out = "rho_db,rho_linear,mi_upper_nats_per_block,per_use_nats,c1,c2,std_err,"
                      "samples,rejected_collisions\n";
    for (const DualityEstimate &est : curve.grid) {
        out += format_double(est.rho_db);
        out += ',';
        out += format_double(est.rho);
        out += ',';
        out += format_double(est.mi_upper_block);
        out += ',';
        out += format_double(est.per_use);
        out += ',';
        out += format_double(est.c1);
        out += ',';
        out += format_double(est.c2);
        out += ',';
        out += format_double(est.std_err);
        out += ',';
        out += std::to_string(est.samples);
        out += ',';
        out += std::to_string(est.rejected_collisions);
        out += '\n';
    }
    return out;
}

std::string bound_curve_json(const BoundCurve &curve) {
    nlohmann::json j{{"fitted_slope", curve.fitted_slope},
                     {"fit_residual", curve.fit_residual},
                     {"grid", nlohmann::json::array()}};
    for (const DualityEstimate &est : curve.grid) {
        j["grid"].push_back(estimate_to_json(est));
    }
    return j.dump(2);
}

} // namespace prelog

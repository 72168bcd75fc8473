// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/checks.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <nlohmann/json.hpp>

#include "prelog/errors.hpp"
#include "prelog/output_density.hpp"
#include "prelog/parallel.hpp"
#include "prelog/svd.hpp"

namespace prelog {

namespace {

constexpr long kChunkSize = 4096;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Chunk accumulators that carry (trials, violations, worst_margin) in their
// last three slots; everything before is summed.
void merge_with_min_tail(std::vector<double> &acc, const std::vector<double> &part) {
    const std::size_t last = acc.size() - 1;
    for (std::size_t i = 0; i + 1 < acc.size(); ++i) {
        acc[i] += part[i];
    }
    acc[last] = std::min(acc[last], part[last]);
}

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

// Two-sided normal critical value: solves P(|Z| > z) = alpha.
double normal_critical_value(double alpha) {
    double lo = 0.0;
    double hi = 40.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (std::erfc(mid / std::numbers::sqrt2) > alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

CheckReport weyl_check(const ComplexMatrix &a, const ComplexMatrix &b, double abs_tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("weyl_check: shapes disagree");
    }
    const std::vector<double> sa = singular_values(a);
    const std::vector<double> sb = singular_values(b);
    const std::vector<double> sab = singular_values(a + b);
    const int p = static_cast<int>(sa.size());

    CheckReport report;
    report.name = "weyl";
    report.worst_margin = kInf;
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; i + j <= p + 1; ++j) {
            const double slack = sa[i - 1] + sb[j - 1] - sab[i + j - 2];
            ++report.trials;
            if (slack < -abs_tol) {
                ++report.violations;
            }
            report.worst_margin = std::min(report.worst_margin, slack);
        }
    }
    return report;
}

CheckReport weyl_random_suite(long pairs, int max_dim, double abs_tol, const RngStream &stream) {
    if (pairs < 1 || max_dim < 1) {
        throw ValidationError("weyl_random_suite: need pairs >= 1 and max_dim >= 1");
    }
    auto work = [&](long chunk, long count) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk));
        std::vector<double> acc{0.0, 0.0, kInf};
        for (long i = 0; i < count; ++i) {
            const std::size_t rows = 1 + rng.next_u64() % static_cast<std::uint64_t>(max_dim);
            const std::size_t cols = 1 + rng.next_u64() % static_cast<std::uint64_t>(max_dim);
            const ComplexMatrix a = sample_gaussian_matrix(rows, cols, rng);
            const ComplexMatrix b = sample_gaussian_matrix(rows, cols, rng);
            const CheckReport one = weyl_check(a, b, abs_tol);
            acc[0] += static_cast<double>(one.trials);
            acc[1] += static_cast<double>(one.violations);
            acc[2] = std::min(acc[2], one.worst_margin);
        }
        return acc;
    };
    const std::vector<double> acc = run_chunked(pairs, kChunkSize, work, merge_with_min_tail);

    CheckReport report;
    report.name = "weyl_random_pairs";
    report.trials = static_cast<long>(acc[0]);
    report.violations = static_cast<long>(acc[1]);
    report.worst_margin = acc[2];
    return report;
}

CheckReport sigma_bound_check(std::span<const cplx> x, std::span<const cplx> s,
                              const ComplexMatrix &w, double abs_tol) {
    const std::size_t n = x.size();
    const std::size_t m = s.size();
    if (w.rows() != m || w.cols() != n) {
        throw ValidationError("sigma_bound_check: w must be m x n");
    }

    ComplexMatrix y = w;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t k = 0; k < n; ++k) {
            y(a, k) += s[a] * x[k];
        }
    }
    const std::vector<double> sy = singular_values(y);
    const std::vector<double> sw = singular_values(w);
    const int p = static_cast<int>(sy.size());

    CheckReport report;
    report.name = "sigma_bound";
    report.worst_margin = kInf;
    auto record = [&](double slack) {
        ++report.trials;
        if (slack < -abs_tol) {
            ++report.violations;
        }
        report.worst_margin = std::min(report.worst_margin, slack);
    };
    record(norm2(s) * norm2(x) + sw[0] - sy[0]);
    for (int i = 2; i <= p; ++i) {
        record(sw[i - 2] - sy[i - 1]);
    }
    return report;
}

CheckReport sigma_bound_random_suite(long draws, int m, int n, double rho, double abs_tol,
                                     const RngStream &stream) {
    if (draws < 1 || m < 1 || n < 1 || !(rho > 0.0)) {
        throw ValidationError("sigma_bound_random_suite: bad arguments");
    }
    auto work = [&](long chunk, long count) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk));
        std::vector<double> acc{0.0, 0.0, kInf};
        for (long i = 0; i < count; ++i) {
            const std::vector<cplx> x =
                sample_power_input(static_cast<std::size_t>(n), rho, InputKind::sphere, rng);
            const ComplexMatrix s = sample_gaussian_matrix(static_cast<std::size_t>(m), 1, rng);
            const ComplexMatrix w =
                sample_gaussian_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), rng);
            std::vector<cplx> s_vec(static_cast<std::size_t>(m));
            for (int a = 0; a < m; ++a) {
                s_vec[static_cast<std::size_t>(a)] = s(static_cast<std::size_t>(a), 0);
            }
            const CheckReport one = sigma_bound_check(x, s_vec, w, abs_tol);
            acc[0] += static_cast<double>(one.trials);
            acc[1] += static_cast<double>(one.violations);
            acc[2] = std::min(acc[2], one.worst_margin);
        }
        return acc;
    };
    const std::vector<double> acc = run_chunked(draws, kChunkSize, work, merge_with_min_tail);

    CheckReport report;
    report.name = "sigma_bound_rank1";
    report.trials = static_cast<long>(acc[0]);
    report.violations = static_cast<long>(acc[1]);
    report.worst_margin = acc[2];
    return report;
}

CheckReport tail_energy_check(int m, int n, double rho, long samples, const RngStream &stream) {
    if (samples < 100) {
        throw ValidationError("tail_energy_check: need at least 100 samples");
    }
    auto work = [&](long chunk, long count) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk));
        std::vector<double> acc(4, 0.0); // tail, tail^2, s1sq, s1sq^2
        for (long i = 0; i < count; ++i) {
            const std::vector<cplx> x =
                sample_power_input(static_cast<std::size_t>(n), rho, InputKind::sphere, rng);
            const ComplexMatrix s = sample_gaussian_matrix(static_cast<std::size_t>(m), 1, rng);
            ComplexMatrix y =
                sample_gaussian_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), rng);
            for (int a = 0; a < m; ++a) {
                for (int k = 0; k < n; ++k) {
                    y(static_cast<std::size_t>(a), static_cast<std::size_t>(k)) +=
                        s(static_cast<std::size_t>(a), 0) * x[static_cast<std::size_t>(k)];
                }
            }
            const std::vector<double> sv = singular_values(y);
            const double s1_sq = sv[0] * sv[0];
            double tail = 0.0;
            for (std::size_t j = 1; j < sv.size(); ++j) {
                tail += sv[j] * sv[j];
            }
            acc[0] += tail;
            acc[1] += tail * tail;
            acc[2] += s1_sq;
            acc[3] += s1_sq * s1_sq;
        }
        return acc;
    };
    const std::vector<double> acc = run_chunked(samples, kChunkSize, work);
    const double count = static_cast<double>(samples);
    const MeanErr tail = mean_err(acc[0], acc[1], count);
    const MeanErr s1 = mean_err(acc[2], acc[3], count);

    const double mn = static_cast<double>(m) * static_cast<double>(n);
    const double slack_tail = mn + 3.0 * tail.std_err - tail.mean;
    const double slack_s1 = mn * (rho + 1.0) + 3.0 * s1.std_err - s1.mean;

    CheckReport report;
    report.name = "tail_energy";
    report.trials = 2;
    report.violations = (slack_tail < 0.0 ? 1 : 0) + (slack_s1 < 0.0 ? 1 : 0);
    report.worst_margin = std::min(slack_tail, slack_s1);
    return report;
}

CheckReport log_sigma1_check(int m, int n, double rho, long samples, const RngStream &stream,
                             bool zero_input) {
    if (samples < 100) {
        throw ValidationError("log_sigma1_check: need at least 100 samples");
    }
    auto work = [&](long chunk, long count) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk));
        std::vector<double> acc(2, 0.0);
        for (long i = 0; i < count; ++i) {
            std::vector<cplx> x(static_cast<std::size_t>(n), cplx{0.0, 0.0});
            if (!zero_input) {
                x = sample_power_input(static_cast<std::size_t>(n), rho, InputKind::sphere, rng);
            }
            const ComplexMatrix s = sample_gaussian_matrix(static_cast<std::size_t>(m), 1, rng);
            ComplexMatrix y =
                sample_gaussian_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n), rng);
            for (int a = 0; a < m; ++a) {
                for (int k = 0; k < n; ++k) {
                    y(static_cast<std::size_t>(a), static_cast<std::size_t>(k)) +=
                        s(static_cast<std::size_t>(a), 0) * x[static_cast<std::size_t>(k)];
                }
            }
            const std::vector<double> sv = singular_values(y);
            const double log_s1_sq = 2.0 * std::log(sv[0]);
            acc[0] += log_s1_sq;
            acc[1] += log_s1_sq * log_s1_sq;
        }
        return acc;
    };
    const std::vector<double> acc = run_chunked(samples, kChunkSize, work);
    const MeanErr stats = mean_err(acc[0], acc[1], static_cast<double>(samples));

    // Jensen: E[log sigma_1^2] <= log E[tr(Y^H Y)]; the trace expectation is
    // m*n*(1+rho) for sphere input (unit-norm fading rows) and m*n for noise.
    const double mn = static_cast<double>(m) * static_cast<double>(n);
    const double cap = zero_input ? std::log(mn) : std::log(mn * (1.0 + rho));
    const double slack = cap + 3.0 * stats.std_err - stats.mean;

    CheckReport report;
    report.name = zero_input ? "log_sigma1_noise_only" : "log_sigma1";
    report.trials = 1;
    report.violations = slack < 0.0 ? 1 : 0;
    report.worst_margin = slack;
    return report;
}

CheckReport noise_identity_check(const CorrelationRoot &root, int m, long samples,
                                 const RngStream &stream) {
    if (samples < 100) {
        throw ValidationError("noise_identity_check: need at least 100 samples");
    }
    const std::size_t n = root.n();
    const std::size_t q = root.q();
    const std::size_t d = 2 * static_cast<std::size_t>(m) * n; // real dimension

    auto work = [&](long chunk, long count) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk));
        std::vector<double> acc(d * d, 0.0);
        std::vector<double> v(d);
        for (long i = 0; i < count; ++i) {
            ComplexMatrix z(static_cast<std::size_t>(m), n);
            for (std::size_t c = 0; c < q; ++c) {
                const ComplexMatrix w =
                    sample_gaussian_matrix(static_cast<std::size_t>(m), n, rng);
                for (std::size_t a = 0; a < static_cast<std::size_t>(m); ++a) {
                    for (std::size_t k = 0; k < n; ++k) {
                        z(a, k) += w(a, k) * root.mat(k, c);
                    }
                }
            }
            std::size_t idx = 0;
            for (const cplx &entry : z.entries()) {
                v[idx++] = entry.real();
                v[idx++] = entry.imag();
            }
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) {
                    acc[r * d + c] += v[r] * v[c];
                }
            }
        }
        return acc;
    };
    const std::vector<double> acc = run_chunked(samples, kChunkSize, work);

    // Relative Frobenius deviation of the sample covariance from I/2.
    const double count = static_cast<double>(samples);
    double dev_sq = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const double target = (r == c) ? 0.5 : 0.0;
            const double diff = acc[r * d + c] / count - target;
            dev_sq += diff * diff;
        }
    }
    const double rel_dev = std::sqrt(dev_sq) / (0.5 * std::sqrt(static_cast<double>(d)));

    // Calibrated to the 0.02 figure at 10^5 samples for real dimension 16;
    // the statistical floor keeps the check fair at other sizes.
    const double rms_floor = 1.53 * std::sqrt((static_cast<double>(d) + 1.0) / count);
    const double threshold = std::max(0.02 * std::sqrt(100000.0 / count), rms_floor);

    CheckReport report;
    report.name = "noise_identity";
    report.trials = 1;
    report.violations = rel_dev > threshold ? 1 : 0;
    report.worst_margin = threshold - rel_dev;
    return report;
}

CheckReport data_processing_consistency(const CorrelationRoot &root, int m,
                                        std::span<const cplx> x, long samples,
                                        const RngStream &stream) {
    if (samples < 100) {
        throw ValidationError("data_processing_consistency: need at least 100 samples");
    }
    if (x.size() != root.n()) {
        throw ValidationError("data_processing_consistency: x must have n entries");
    }
    const std::size_t n = root.n();
    const std::size_t q = root.q();
    const std::size_t d = 2 * static_cast<std::size_t>(m) * n;

    // Per pipeline: sum v, sum v_r v_c, sum (v_r v_c)^2.
    const std::size_t per_pipeline = d + 2 * d * d;
    const std::vector<cplx> x_copy(x.begin(), x.end());

    auto work = [&](long chunk, long count) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk));
        std::vector<double> acc(2 * per_pipeline, 0.0);
        std::vector<double> v(d);
        auto accumulate = [&](const ComplexMatrix &y, std::size_t base) {
            std::size_t idx = 0;
            for (const cplx &entry : y.entries()) {
                v[idx++] = entry.real();
                v[idx++] = entry.imag();
            }
            for (std::size_t r = 0; r < d; ++r) {
                acc[base + r] += v[r];
            }
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) {
                    const double prod = v[r] * v[c];
                    acc[base + d + r * d + c] += prod;
                    acc[base + d + d * d + r * d + c] += prod * prod;
                }
            }
        };
        for (long i = 0; i < count; ++i) {
            const BlockSample direct =
                simulate_block(root, x_copy, static_cast<std::size_t>(m), rng);
            accumulate(direct.y, 0);
            const std::vector<ComplexMatrix> stack =
                rank1_stack(x_copy, q, static_cast<std::size_t>(m), rng);
            accumulate(recombine(stack, root), per_pipeline);
        }
        return acc;
    };
    const std::vector<double> acc = run_chunked(samples, kChunkSize, work);
    const double count = static_cast<double>(samples);

    // Familywise 3-sigma band: Sidak-corrected two-sided normal quantile
    // across all mean and second-moment comparisons.
    const long comparisons = static_cast<long>(d + d * (d + 1) / 2);
    const double alpha_family = 0.0026997960632601866; // P(|Z| > 3)
    const double alpha_each = 1.0 - std::pow(1.0 - alpha_family, 1.0 / static_cast<double>(comparisons));
    const double z_crit = normal_critical_value(alpha_each);

    CheckReport report;
    report.name = "rank_reduction_consistency";
    report.worst_margin = kInf;
    auto compare = [&](double mean_a, double se_a, double mean_b, double se_b) {
        const double se = std::sqrt(se_a * se_a + se_b * se_b);
        const double delta = std::abs(mean_a - mean_b);
        const double slack = (se > 0.0) ? z_crit * se - delta : -delta;
        ++report.trials;
        if (slack < 0.0) {
            ++report.violations;
        }
        report.worst_margin = std::min(report.worst_margin, slack);
    };

    const std::size_t base_b = per_pipeline;
    for (std::size_t r = 0; r < d; ++r) {
        // mean of coordinate r; its variance estimate comes from the
        // second-moment diagonal.
        const double mean_a = acc[r] / count;
        const double mean_b = acc[base_b + r] / count;
        const double var_a =
            std::max(0.0, acc[d + r * d + r] / count - mean_a * mean_a);
        const double var_b =
            std::max(0.0, acc[base_b + d + r * d + r] / count - mean_b * mean_b);
        compare(mean_a, std::sqrt(var_a / count), mean_b, std::sqrt(var_b / count));
    }
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r; c < d; ++c) {
            const MeanErr a =
                mean_err(acc[d + r * d + c], acc[d + d * d + r * d + c], count);
            const MeanErr b = mean_err(acc[base_b + d + r * d + c],
                                       acc[base_b + d + d * d + r * d + c], count);
            compare(a.mean, a.std_err, b.mean, b.std_err);
        }
    }
    return report;
}

CheckReport change_of_variables_check(long trials, const RngStream &stream,
                                      int jacobian_exponent_bias) {
    if (trials < 1) {
        throw ValidationError("change_of_variables_check: need trials >= 1");
    }
    constexpr double kLog2Pi = 1.8378770664093453;
    auto work = [&](long chunk, long count) {
        RngStream rng = stream.substream(static_cast<std::uint64_t>(chunk));
        std::vector<double> acc{0.0, 0.0, kInf};
        for (long i = 0; i < count; ++i) {
            OutputDensityParams params;
            params.m = 1;
            params.n = 1;
            params.rho = std::pow(10.0, 5.0 * rng.next_unit());
            const double scale = std::pow(10.0, 4.0 * rng.next_unit() - 2.0);
            ComplexMatrix y(1, 1);
            y(0, 0) = scale * rng.next_cgauss();
            const double sigma1 = std::abs(y(0, 0));
            if (!(sigma1 > 0.0)) {
                continue;
            }
            const double expected = log_r_sigma1(sigma1, params) - std::log(sigma1) - kLog2Pi;
            const double actual = log_r_output(y, params) -
                                  static_cast<double>(jacobian_exponent_bias) * std::log(sigma1);
            const double slack = 1e-12 - std::abs(actual - expected);
            acc[0] += 1.0;
            if (slack < 0.0) {
                acc[1] += 1.0;
            }
            acc[2] = std::min(acc[2], slack);
        }
        return acc;
    };
    const std::vector<double> acc = run_chunked(trials, kChunkSize, work, merge_with_min_tail);

    CheckReport report;
    report.name = "change_of_variables_m1n1";
    report.trials = static_cast<long>(acc[0]);
    report.violations = static_cast<long>(acc[1]);
    report.worst_margin = acc[2];
    return report;
}

std::vector<CheckReport> run_verify_suite(const VerifyOptions &opts) {
    if (opts.samples < 100) {
        throw ValidationError("run_verify_suite: need at least 100 samples");
    }
    const RngStream base(opts.master_seed, 0);
    const long draws = std::max<long>(100, opts.samples / 10);

    const double angles[] = {0.0, std::numbers::pi / 5.0, 2.0 * std::numbers::pi / 5.0,
                             3.0 * std::numbers::pi / 5.0};
    const CorrelationRoot trig = trig_root(4, angles);
    const CorrelationRoot constant4 = constant_fading_root(4);
    const CorrelationRoot constant3 = constant_fading_root(3);

    std::vector<CheckReport> reports;
    reports.push_back(weyl_random_suite(draws, 8, 1e-9, base.substream(1)));
    reports.push_back(sigma_bound_random_suite(draws, 4, 4, 100.0, 1e-9, base.substream(2)));

    CheckReport tail_a = tail_energy_check(2, 3, 100.0, opts.samples, base.substream(3));
    tail_a.name = "tail_energy_m2_n3";
    reports.push_back(tail_a);
    CheckReport tail_b = tail_energy_check(2, 2, 1e4, opts.samples, base.substream(4));
    tail_b.name = "tail_energy_m2_n2_high_snr";
    reports.push_back(tail_b);

    CheckReport ls_a = log_sigma1_check(1, 1, 100.0, opts.samples, base.substream(5));
    ls_a.name = "log_sigma1_m1_n1";
    reports.push_back(ls_a);
    CheckReport ls_b = log_sigma1_check(2, 3, 1e4, opts.samples, base.substream(6));
    ls_b.name = "log_sigma1_m2_n3_high_snr";
    reports.push_back(ls_b);
    reports.push_back(log_sigma1_check(2, 2, 100.0, opts.samples, base.substream(7), true));

    CheckReport ni_a = noise_identity_check(constant4, 2, opts.samples, base.substream(8));
    ni_a.name = "noise_identity_constant_root";
    reports.push_back(ni_a);
    CheckReport ni_b = noise_identity_check(trig, 2, opts.samples, base.substream(9));
    ni_b.name = "noise_identity_trig_root";
    reports.push_back(ni_b);

    {
        RngStream xrng = base.substream(10);
        const std::vector<cplx> x = sample_power_input(4, 10.0, InputKind::sphere, xrng);
        CheckReport dp = data_processing_consistency(trig, 2, x, opts.samples, base.substream(11));
        dp.name = "rank_reduction_consistency_trig_root";
        reports.push_back(dp);
    }
    {
        RngStream xrng = base.substream(12);
        const std::vector<cplx> x = sample_power_input(3, 10.0, InputKind::sphere, xrng);
        CheckReport dp =
            data_processing_consistency(constant3, 2, x, opts.samples, base.substream(13));
        dp.name = "rank_reduction_consistency_q1";
        reports.push_back(dp);
    }

    reports.push_back(
        change_of_variables_check(1000, base.substream(14), opts.jacobian_exponent_bias));
    return reports;
}

bool any_violation(std::span<const CheckReport> reports) {
    for (const CheckReport &report : reports) {
        if (report.violations > 0) {
            return true;
        }
    }
    return false;
}

std::string check_reports_json(std::span<const CheckReport> reports) {
    nlohmann::json j = nlohmann::json::array();
    for (const CheckReport &report : reports) {
        j.push_back({{"name", report.name},
                     {"trials", report.trials},
                     {"violations", report.violations},
                     {"worst_margin", report.worst_margin}});
    }
    return j.dump(2);
}

} // namespace prelog

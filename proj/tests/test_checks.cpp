// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "prelog/checks.hpp"
#include "prelog/errors.hpp"
#include "prelog/svd.hpp"

using namespace prelog;

namespace {

CorrelationRoot vandermonde_like_root() {
    const double angles[] = {0.0, std::numbers::pi / 5.0, 2.0 * std::numbers::pi / 5.0,
                             3.0 * std::numbers::pi / 5.0};
    return trig_root(4, angles);
}

} // namespace

TEST_CASE("weyl check: additive identity and equal matrices") {
    RngStream rng(1, 0);
    const ComplexMatrix a = sample_gaussian_matrix(4, 4, rng);
    const ComplexMatrix zero(4, 4);
    const CheckReport vs_zero = weyl_check(a, zero, 1e-9);
    CHECK(vs_zero.violations == 0);
    CHECK(vs_zero.worst_margin >= 0.0);
    CHECK(vs_zero.worst_margin < 1e-12); // equality at j = 1

    const ComplexMatrix eye = ComplexMatrix::identity(3);
    const CheckReport doubled = weyl_check(eye, eye, 1e-9);
    CHECK(doubled.violations == 0);
    CHECK(doubled.worst_margin == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(weyl_check(a, ComplexMatrix(2, 2), 1e-9), ValidationError);
}

TEST_CASE("weyl check counts the inequality family") {
    RngStream rng(2, 0);
    const ComplexMatrix a = sample_gaussian_matrix(3, 5, rng);
    const ComplexMatrix b = sample_gaussian_matrix(3, 5, rng);
    const CheckReport report = weyl_check(a, b, 1e-9);
    CHECK(report.trials == 6); // p = 3: (1,1),(1,2),(1,3),(2,1),(2,2),(3,1)
    CHECK(report.violations == 0);
}

TEST_CASE("weyl random suite stays violation free") {
    const CheckReport report = weyl_random_suite(1000, 8, 1e-9, RngStream(3, 0));
    CHECK(report.violations == 0);
    CHECK(report.worst_margin > -1e-9);
}

TEST_CASE("spectral perturbation bounds on constructed cases") {
    RngStream rng(4, 0);
    std::vector<cplx> x{cplx{1.0, 2.0}, cplx{0.0, -1.0}, cplx{0.5, 0.5}};
    std::vector<cplx> s{cplx{0.3, -0.7}, cplx{1.1, 0.2}};

    // Zero noise: sigma_1 equals ||s|| ||x|| exactly, the rest vanish.
    const CheckReport noiseless = sigma_bound_check(x, s, ComplexMatrix(2, 3), 1e-9);
    CHECK(noiseless.violations == 0);
    CHECK(noiseless.worst_margin < 1e-10);

    // Zero input: the bounds follow from the ordering of noise singular values.
    const ComplexMatrix w = sample_gaussian_matrix(2, 3, rng);
    const CheckReport noise_only =
        sigma_bound_check(std::vector<cplx>(3, cplx{0.0, 0.0}), s, w, 1e-9);
    CHECK(noise_only.violations == 0);
}

TEST_CASE("sigma bound random suite stays violation free") {
    const CheckReport report = sigma_bound_random_suite(1000, 4, 4, 100.0, 1e-9, RngStream(5, 0));
    CHECK(report.violations == 0);
}

TEST_CASE("tail energy caps hold") {
    const CheckReport low = tail_energy_check(2, 3, 100.0, 10'000, RngStream(6, 0));
    CHECK(low.trials == 2);
    CHECK(low.violations == 0);

    const CheckReport single = tail_energy_check(1, 2, 50.0, 5'000, RngStream(7, 0));
    CHECK(single.violations == 0); // p = 1: empty tail is trivially below the cap

    const CheckReport high = tail_energy_check(2, 2, 1e4, 10'000, RngStream(8, 0));
    CHECK(high.violations == 0);
}

TEST_CASE("log sigma1 cap matches the scalar closed form") {
    // For m = n = 1 the received power is (1+rho) Exp(1), so
    // E[log sigma_1^2] = log(1+rho) - EulerGamma and the margin sits near
    // EulerGamma (up to the 3-sigma allowance).
    const double rho = 100.0;
    const CheckReport report = log_sigma1_check(1, 1, rho, 20'000, RngStream(9, 0));
    CHECK(report.violations == 0);
    constexpr double kEulerGamma = 0.5772156649015329;
    CHECK(report.worst_margin > kEulerGamma - 0.1);
    CHECK(report.worst_margin < kEulerGamma + 0.1);

    const CheckReport noise_only = log_sigma1_check(2, 2, 1.0, 20'000, RngStream(10, 0), true);
    CHECK(noise_only.violations == 0);
}

TEST_CASE("noise identity: constant and correlated roots") {
    const CheckReport trivial =
        noise_identity_check(constant_fading_root(4), 2, 20'000, RngStream(11, 0));
    CHECK(trivial.violations == 0);

    const CheckReport trig = noise_identity_check(vandermonde_like_root(), 2, 20'000,
                                                  RngStream(12, 0));
    CHECK(trig.violations == 0);
}

TEST_CASE("recombined noise keeps variance 1/2 per real component") {
    const CorrelationRoot root = vandermonde_like_root();
    const std::size_t m = 2;
    RngStream rng(18, 0);
    std::vector<double> diag(2 * m * root.n(), 0.0);
    const int draws = 100'000;
    for (int i = 0; i < draws; ++i) {
        ComplexMatrix z(m, root.n());
        for (std::size_t c = 0; c < root.q(); ++c) {
            const ComplexMatrix w = sample_gaussian_matrix(m, root.n(), rng);
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t k = 0; k < root.n(); ++k) {
                    z(a, k) += w(a, k) * root.mat(k, c);
                }
            }
        }
        std::size_t idx = 0;
        for (const cplx &entry : z.entries()) {
            diag[idx++] += entry.real() * entry.real();
            diag[idx++] += entry.imag() * entry.imag();
        }
    }
    for (double sum : diag) {
        const double variance = sum / draws;
        CHECK(variance > 0.5 * 0.98);
        CHECK(variance < 0.5 * 1.02);
    }
}

TEST_CASE("rank-reduction moment consistency") {
    RngStream xrng(13, 0);
    const CorrelationRoot root = vandermonde_like_root();
    const std::vector<cplx> x = sample_power_input(4, 10.0, InputKind::sphere, xrng);

    const CheckReport trig = data_processing_consistency(root, 2, x, 20'000, RngStream(14, 0));
    CHECK(trig.violations == 0);
    CHECK(trig.trials > 100); // means plus the full second-moment family

    const CheckReport zero_input = data_processing_consistency(
        root, 2, std::vector<cplx>(4, cplx{0.0, 0.0}), 10'000, RngStream(15, 0));
    CHECK(zero_input.violations == 0);

    const CheckReport unit_rank = data_processing_consistency(
        constant_fading_root(3), 2, std::vector<cplx>(3, cplx{1.0, 0.0}), 10'000,
        RngStream(16, 0));
    CHECK(unit_rank.violations == 0);
}

TEST_CASE("change-of-variables check and its fault injection") {
    const CheckReport clean = change_of_variables_check(1000, RngStream(17, 0));
    CHECK(clean.violations == 0);
    CHECK(clean.worst_margin > 0.0);

    const CheckReport broken = change_of_variables_check(1000, RngStream(17, 0), 1);
    CHECK(broken.violations == broken.trials);
}

TEST_CASE("verify suite passes, serializes and reacts to injection") {
    VerifyOptions opts;
    opts.master_seed = 99;
    opts.samples = 2000;
    const std::vector<CheckReport> reports = run_verify_suite(opts);
    CHECK_FALSE(any_violation(reports));
    const std::string json = check_reports_json(reports);
    CHECK(json.find("weyl_random_pairs") != std::string::npos);
    CHECK(json.find("rank_reduction_consistency_trig_root") != std::string::npos);

    VerifyOptions broken = opts;
    broken.jacobian_exponent_bias = 1;
    CHECK(any_violation(run_verify_suite(broken)));
}

TEST_CASE("verify suite is deterministic across runs and worker counts") {
    VerifyOptions opts;
    opts.master_seed = 7;
    opts.samples = 2000;

    setenv("PRELOG_BENCH_THREADS", "1", 1);
    const std::string serial = check_reports_json(run_verify_suite(opts));
    setenv("PRELOG_BENCH_THREADS", "3", 1);
    const std::string threaded = check_reports_json(run_verify_suite(opts));
    unsetenv("PRELOG_BENCH_THREADS");
    const std::string unconstrained = check_reports_json(run_verify_suite(opts));

    CHECK(serial == threaded);
    CHECK(serial == unconstrained);
}

// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_CHECKS_HPP
#define PRELOG_CHECKS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prelog/channel.hpp"
#include "prelog/complex_matrix.hpp"
#include "prelog/rng.hpp"

namespace prelog {

/// Outcome of one numerical verification. Each check tests a family of
/// inequalities; a trial is one inequality instance, slack is its margin
/// (bound minus tested quantity, so nonnegative means satisfied), a
/// violation is slack below -abs_tol, and worst_margin is the smallest
/// slack seen. For Monte Carlo expectation checks a trial is one
/// inequality with its 3-sigma allowance already folded into the slack.
struct CheckReport {
    std::string name;
    long trials = 0;
    long violations = 0;
    double worst_margin = 0.0;
};

/// Singular-value perturbation (Weyl-type) inequalities
/// sigma_{i+j-1}(a+b) <= sigma_i(a) + sigma_j(b) for i+j <= p+1.
CheckReport weyl_check(const ComplexMatrix &a, const ComplexMatrix &b, double abs_tol);

/// weyl_check over random Gaussian pairs with i.i.d. random shapes up to
/// max_dim x max_dim.
CheckReport weyl_random_suite(long pairs, int max_dim, double abs_tol, const RngStream &stream);

/// For y = s x^T + w: sigma_1(y) <= ||s|| ||x|| + sigma_1(w) and
/// sigma_i(y) <= sigma_{i-1}(w) for 2 <= i <= p.
CheckReport sigma_bound_check(std::span<const cplx> x, std::span<const cplx> s,
                              const ComplexMatrix &w, double abs_tol);

/// sigma_bound_check over random draws (sphere input at the given SNR).
CheckReport sigma_bound_random_suite(long draws, int m, int n, double rho, double abs_tol,
                                     const RngStream &stream);

/// Monte Carlo caps on the unit-rank output spectrum under sphere input:
/// E[sum_{i>=2} sigma_i^2] <= m*n and E[sigma_1^2] <= m*n*(rho+1),
/// each with a 3-sigma allowance.
CheckReport tail_energy_check(int m, int n, double rho, long samples, const RngStream &stream);

/// Jensen-type cap on the leading singular value, sphere input:
/// E[log sigma_1^2] <= log(m*n*(1+rho)) + 3 sigma. With zero_input the
/// block is pure noise and the cap is log(m*n) + 3 sigma.
CheckReport log_sigma1_check(int m, int n, double rho, long samples, const RngStream &stream,
                             bool zero_input = false);

/// Distributional identity sum_k W_k diag(p_k) = W: compares the covariance
/// of the real vectorization against I/2. The slack is a relative Frobenius
/// deviation threshold calibrated to 0.02 at 10^5 samples minus the
/// observed deviation.
CheckReport noise_identity_check(const CorrelationRoot &root, int m, long samples,
                                 const RngStream &stream);

/// Moment agreement between the direct block simulation and the
/// recombined unit-rank stack for a fixed input x: every mean and
/// second-moment entry must agree within a familywise 3-sigma band
/// (Sidak-corrected per-entry thresholds).
CheckReport data_processing_consistency(const CorrelationRoot &root, int m,
                                        std::span<const cplx> x, long samples,
                                        const RngStream &stream);

/// Closed-form consistency of the output density in the scalar (1 x 1)
/// case: log r(y) = log r_sigma1(|y|) - log|y| - log(2 pi) within 1e-12.
/// jacobian_exponent_bias is a fault-injection hook used by the mutation
/// test: a nonzero bias perturbs the Jacobian exponent and must make this
/// check fail.
CheckReport change_of_variables_check(long trials, const RngStream &stream,
                                      int jacobian_exponent_bias = 0);

struct VerifyOptions {
    std::uint64_t master_seed = 1;
    long samples = 100'000;
    int jacobian_exponent_bias = 0; // fault injection; 0 in normal runs
};

/// The full verification suite with fixed configurations; deterministic in
/// (master_seed, samples) and independent of worker count.
std::vector<CheckReport> run_verify_suite(const VerifyOptions &opts);

bool any_violation(std::span<const CheckReport> reports);
std::string check_reports_json(std::span<const CheckReport> reports);

} // namespace prelog

#endif // PRELOG_CHECKS_HPP

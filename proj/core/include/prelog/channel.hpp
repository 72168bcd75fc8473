// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_CHANNEL_HPP
#define PRELOG_CHANNEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prelog/complex_matrix.hpp"
#include "prelog/rng.hpp"

namespace prelog {

/// N x Q square root of the within-block fading correlation. Rows have unit
/// norm (so the faded signal keeps unit per-entry variance) and the columns
/// are linearly independent.
struct CorrelationRoot {
    ComplexMatrix mat;

    std::size_t n() const noexcept { return mat.rows(); } // block length
    std::size_t q() const noexcept { return mat.cols(); } // correlation rank

    /// Column q as a vector (the per-tap gain profile across the block).
    std::vector<cplx> column(std::size_t q_index) const;
};

/// Checks row norms (within rel_tol of 1) and full column rank; throws
/// ValidationError naming the worst row or the estimated rank on failure.
CorrelationRoot validate_correlation_root(ComplexMatrix mat, double rel_tol = 1e-10);

/// All-ones N x 1 root: fading constant across the block.
CorrelationRoot constant_fading_root(std::size_t n);

/// Rows (cos t_k, sin t_k) with distinct angles in (0, pi/2); a convenient
/// rank-2 root whose row subsets are generically independent.
CorrelationRoot trig_root(std::size_t n, std::span<const double> angles);

/// Block simulation parameter bundle.
struct ChannelConfig {
    std::size_t n = 1;  // block length
    std::size_t q = 1;  // correlation rank
    std::size_t m = 1;  // receive antennas
    double rho = 1.0;   // SNR, linear

    void validate() const; // throws ValidationError
};

/// One simulated block: y = s * root^T * diag(x) + w.
struct BlockSample {
    std::vector<cplx> x; // inputs, length N
    ComplexMatrix s;     // whitened fading, M x Q
    ComplexMatrix w;     // noise, M x N
    ComplexMatrix y;     // received, M x N
};

/// Deterministic block assembly from given fading and noise realizations.
ComplexMatrix assemble_block(const CorrelationRoot &root, std::span<const cplx> x,
                             const ComplexMatrix &s, const ComplexMatrix &w);

/// Draws fresh i.i.d. CN(0,1) fading and noise and assembles the block.
BlockSample simulate_block(const CorrelationRoot &root, std::vector<cplx> x, std::size_t m,
                           RngStream &rng);

enum class InputKind { sphere, gaussian };

InputKind parse_input_kind(const std::string &name); // "sphere" | "gaussian"

/// Length-N input under the average-power constraint E||x||^2 <= N*rho:
/// sphere puts ||x||^2 = N*rho exactly, gaussian draws i.i.d. CN(0, rho).
std::vector<cplx> sample_power_input(std::size_t n, double rho, InputKind kind, RngStream &rng);

/// q independent unit-rank blocks Y_k = s_k * x^T + W_k, each M x N.
std::vector<ComplexMatrix> rank1_stack(std::span<const cplx> x, std::size_t q, std::size_t m,
                                       RngStream &rng);

/// sum_k Y_k * diag(root column k): maps a unit-rank stack back to the
/// correlated-fading output law.
ComplexMatrix recombine(std::span<const ComplexMatrix> y_list, const CorrelationRoot &root);

} // namespace prelog

#endif // PRELOG_CHANNEL_HPP

// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_SVD_HPP
#define PRELOG_SVD_HPP

#include <vector>

#include "prelog/complex_matrix.hpp"

namespace prelog {

/// Canonical thin SVD: a = u * diag(sigma) * v^H with p = min(rows, cols).
///
/// Canonical means:
///   - sigma descending, nonnegative;
///   - u (m x p) and v (n x p) have orthonormal columns;
///   - the first row of u is real and nonnegative (per-column phases are
///     fixed by rotating each u/v column pair; columns whose first-row
///     magnitude is below 1e-14 keep their computed phase).
struct SvdTriple {
    ComplexMatrix u;
    std::vector<double> sigma;
    ComplexMatrix v;

    /// u * diag(sigma) * v^H.
    ComplexMatrix reconstruct() const;
};

struct SvdOptions {
    int max_sweeps = 60;
    double rel_tol = 1e-14; // off-diagonal threshold, relative to column norms
};

/// One-sided Jacobi SVD, run on the side with the smaller Gram matrix.
/// Accurate at the tiny sizes this toolkit needs (<= 16 per side).
/// Throws ConvergenceError if the sweep cap is hit (pathological scaling;
/// rescale the input and retry).
SvdTriple svd(const ComplexMatrix &a, const SvdOptions &opts = {});

/// Singular values only, descending.
std::vector<double> singular_values(const ComplexMatrix &a, const SvdOptions &opts = {});

/// Number of singular values exceeding rel_tol * sigma_max; 0 for the zero
/// matrix. rel_tol must lie in (0, 1).
int rank_estimate(const ComplexMatrix &a, double rel_tol);

} // namespace prelog

#endif // PRELOG_SVD_HPP

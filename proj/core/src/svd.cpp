// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/svd.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>

#include "prelog/errors.hpp"

namespace prelog {

namespace {

// One-sided Jacobi on a tall (or square) matrix: orthogonalizes the columns
// of b in place while accumulating the right factor in v. Requires
// b.rows() >= b.cols().
void jacobi_orthogonalize(ComplexMatrix &b, ComplexMatrix &v, const SvdOptions &opts) {
    const std::size_t m = b.rows();
    const std::size_t n = b.cols();

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        // Columns at the roundoff floor of the whole matrix are spurious
        // (cancellation residue); rotations against large columns would keep
        // re-polluting them and stall convergence. Flush them to exact zero.
        double frob_sq = 0.0;
        std::vector<double> col_sq(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                col_sq[j] += std::norm(b(k, j));
            }
            frob_sq += col_sq[j];
        }
        const double eps = std::numeric_limits<double>::epsilon();
        const double cutoff_sq = (32.0 * eps) * (32.0 * eps) * frob_sq;
        for (std::size_t j = 0; j < n; ++j) {
            if (col_sq[j] > 0.0 && col_sq[j] <= cutoff_sq) {
                for (std::size_t k = 0; k < m; ++k) {
                    b(k, j) = cplx{0.0, 0.0};
                }
            }
        }

        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double nii = 0.0;
                double njj = 0.0;
                cplx nij{0.0, 0.0};
                for (std::size_t k = 0; k < m; ++k) {
                    nii += std::norm(b(k, i));
                    njj += std::norm(b(k, j));
                    nij += std::conj(b(k, i)) * b(k, j);
                }
                const double off = std::abs(nij);
                if (off <= opts.rel_tol * std::sqrt(nii * njj)) {
                    continue; // also skips pairs with a zero column
                }
                rotated = true;

                const cplx phase = nij / off;
                double t;
                if (std::abs(njj - nii) <= 1e-300) {
                    t = 1.0; // equal norms: 45 degree rotation
                } else {
                    const double zeta = (njj - nii) / (2.0 * off);
                    t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = phase * (c * t);

                for (std::size_t k = 0; k < m; ++k) {
                    const cplx bi = c * b(k, i) - std::conj(s) * b(k, j);
                    const cplx bj = s * b(k, i) + c * b(k, j);
                    b(k, i) = bi;
                    b(k, j) = bj;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vi = c * v(k, i) - std::conj(s) * v(k, j);
                    const cplx vj = s * v(k, i) + c * v(k, j);
                    v(k, i) = vi;
                    v(k, j) = vj;
                }
            }
        }
        if (!rotated) {
            return;
        }
    }
    throw ConvergenceError("svd: Jacobi sweep cap reached; rescale the input");
}

// Fills the columns of u listed in empty_slots with unit vectors orthogonal
// to every other column (needed when the input is rank deficient).
void complete_basis(ComplexMatrix &u, const std::vector<std::size_t> &empty_slots) {
    const std::size_t m = u.rows();
    const std::size_t p = u.cols();
    std::vector<bool> filled(p, true);
    for (std::size_t slot : empty_slots) {
        filled[slot] = false;
    }

    for (std::size_t slot : empty_slots) {
        std::vector<cplx> best;
        double best_norm = -1.0;
        for (std::size_t cand = 0; cand < m; ++cand) {
            std::vector<cplx> r(m, cplx{0.0, 0.0});
            r[cand] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t c = 0; c < p; ++c) {
                    if (!filled[c]) {
                        continue;
                    }
                    cplx coef{0.0, 0.0};
                    for (std::size_t k = 0; k < m; ++k) {
                        coef += std::conj(u(k, c)) * r[k];
                    }
                    for (std::size_t k = 0; k < m; ++k) {
                        r[k] -= coef * u(k, c);
                    }
                }
            }
            const double nrm = norm2(r);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(r);
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            u(k, slot) = best[k] / best_norm;
        }
        filled[slot] = true;
    }
}

// SVD of a tall (or square) matrix without the phase convention applied.
SvdTriple svd_tall(const ComplexMatrix &a, const SvdOptions &opts) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    ComplexMatrix b = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_orthogonalize(b, v, opts);

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            acc += std::norm(b(k, j));
        }
        sigma[j] = std::sqrt(acc);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&sigma](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdTriple out;
    out.u = ComplexMatrix(m, n);
    out.v = ComplexMatrix(n, n);
    out.sigma.resize(n);
    std::vector<std::size_t> empty_slots;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = sigma[src];
        for (std::size_t k = 0; k < n; ++k) {
            out.v(k, j) = v(k, src);
        }
        if (sigma[src] > 0.0) {
            for (std::size_t k = 0; k < m; ++k) {
                out.u(k, j) = b(k, src) / sigma[src];
            }
        } else {
            empty_slots.push_back(j);
        }
    }
    if (!empty_slots.empty()) {
        complete_basis(out.u, empty_slots);
    }
    return out;
}

void canonicalize_phases(SvdTriple &t) {
    const std::size_t p = t.sigma.size();
    for (std::size_t j = 0; j < p; ++j) {
        const cplx z = t.u(0, j);
        const double mag = std::abs(z);
        if (mag < 1e-14) {
            continue; // measure-zero ambiguity: keep the computed phase
        }
        const cplx phase = std::conj(z) / mag;
        for (std::size_t k = 0; k < t.u.rows(); ++k) {
            t.u(k, j) *= phase;
        }
        for (std::size_t k = 0; k < t.v.rows(); ++k) {
            t.v(k, j) *= phase;
        }
    }
}

} // namespace

ComplexMatrix SvdTriple::reconstruct() const {
    ComplexMatrix scaled = u;
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        for (std::size_t k = 0; k < scaled.rows(); ++k) {
            scaled(k, j) *= sigma[j];
        }
    }
    return scaled * v.adjoint();
}

SvdTriple svd(const ComplexMatrix &a, const SvdOptions &opts) {
    if (a.size() == 0) {
        throw ValidationError("svd: empty matrix");
    }
    if (!a.is_finite()) {
        throw ValidationError("svd: input has non-finite entries");
    }

    SvdTriple t;
    if (a.rows() >= a.cols()) {
        t = svd_tall(a, opts);
    } else {
        // a = (a^H)^H = v' S u'^H, so the factors swap roles.
        SvdTriple tt = svd_tall(a.adjoint(), opts);
        t.u = std::move(tt.v);
        t.sigma = std::move(tt.sigma);
        t.v = std::move(tt.u);
    }
    canonicalize_phases(t);
    return t;
}

std::vector<double> singular_values(const ComplexMatrix &a, const SvdOptions &opts) {
    return svd(a, opts).sigma;
}

int rank_estimate(const ComplexMatrix &a, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw ValidationError("rank_estimate: rel_tol must lie in (0, 1)");
    }
    const std::vector<double> s = singular_values(a);
    if (s.empty() || s.front() <= 0.0) {
        return 0;
    }
    const double cut = rel_tol * s.front();
    int rank = 0;
    for (double value : s) {
        if (value > cut) {
            ++rank;
        }
    }
    return rank;
}

} // namespace prelog

// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/channel.hpp"

#include <cmath>
#include <sstream>

#include "prelog/errors.hpp"
#include "prelog/svd.hpp"

namespace prelog {

std::vector<cplx> CorrelationRoot::column(std::size_t q_index) const {
    std::vector<cplx> out(n());
    for (std::size_t k = 0; k < n(); ++k) {
        out[k] = mat(k, q_index);
    }
    return out;
}

CorrelationRoot validate_correlation_root(ComplexMatrix mat, double rel_tol) {
    const std::size_t n = mat.rows();
    const std::size_t q = mat.cols();
    if (q > n) {
        std::ostringstream msg;
        msg << "correlation root: rank " << q << " exceeds block length " << n;
        throw ValidationError(msg.str());
    }

    double worst_dev = 0.0;
    std::size_t worst_row = 0;
    double worst_norm = 1.0;
    for (std::size_t r = 0; r < n; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < q; ++c) {
            acc += std::norm(mat(r, c));
        }
        const double row_norm = std::sqrt(acc);
        const double dev = std::abs(row_norm - 1.0);
        if (dev > worst_dev) {
            worst_dev = dev;
            worst_row = r;
            worst_norm = row_norm;
        }
    }
    if (worst_dev > rel_tol) {
        std::ostringstream msg;
        msg << "correlation root: row " << worst_row << " has norm " << worst_norm
            << " (expected 1 within " << rel_tol << ")";
        throw ValidationError(msg.str());
    }

    const int rank = rank_estimate(mat, rel_tol);
    if (rank != static_cast<int>(q)) {
        std::ostringstream msg;
        msg << "correlation root: estimated column rank " << rank << " but " << q
            << " columns; the root must have full column rank";
        throw ValidationError(msg.str());
    }
    return CorrelationRoot{std::move(mat)};
}

CorrelationRoot constant_fading_root(std::size_t n) {
    ComplexMatrix mat(n, 1);
    for (std::size_t r = 0; r < n; ++r) {
        mat(r, 0) = 1.0;
    }
    return CorrelationRoot{std::move(mat)};
}

CorrelationRoot trig_root(std::size_t n, std::span<const double> angles) {
    if (angles.size() != n) {
        throw ValidationError("trig_root: need one angle per row");
    }
    ComplexMatrix mat(n, 2);
    for (std::size_t r = 0; r < n; ++r) {
        mat(r, 0) = std::cos(angles[r]);
        mat(r, 1) = std::sin(angles[r]);
    }
    return validate_correlation_root(std::move(mat));
}

void ChannelConfig::validate() const {
    if (n < 1 || q < 1 || q > n || m < 1) {
        throw ValidationError("channel config: need n >= 1, 1 <= q <= n, m >= 1");
    }
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw ValidationError("channel config: rho must be positive and finite");
    }
}

ComplexMatrix assemble_block(const CorrelationRoot &root, std::span<const cplx> x,
                             const ComplexMatrix &s, const ComplexMatrix &w) {
    const std::size_t n = root.n();
    const std::size_t q = root.q();
    const std::size_t m = s.rows();
    if (x.size() != n || s.cols() != q || w.rows() != m || w.cols() != n) {
        throw ValidationError("assemble_block: dimension mismatch");
    }

    // y(a,k) = (sum_c s(a,c) * root(k,c)) * x(k) + w(a,k)
    ComplexMatrix y = w;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t k = 0; k < n; ++k) {
            cplx fade{0.0, 0.0};
            for (std::size_t c = 0; c < q; ++c) {
                fade += s(a, c) * root.mat(k, c);
            }
            y(a, k) += fade * x[k];
        }
    }
    return y;
}

BlockSample simulate_block(const CorrelationRoot &root, std::vector<cplx> x, std::size_t m,
                           RngStream &rng) {
    if (m < 1) {
        throw ValidationError("simulate_block: m must be >= 1");
    }
    BlockSample sample;
    sample.s = sample_gaussian_matrix(m, root.q(), rng);
    sample.w = sample_gaussian_matrix(m, root.n(), rng);
    sample.y = assemble_block(root, x, sample.s, sample.w);
    sample.x = std::move(x);
    return sample;
}

InputKind parse_input_kind(const std::string &name) {
    if (name == "sphere") {
        return InputKind::sphere;
    }
    if (name == "gaussian") {
        return InputKind::gaussian;
    }
    throw ValidationError("input kind must be 'sphere' or 'gaussian'");
}

std::vector<cplx> sample_power_input(std::size_t n, double rho, InputKind kind, RngStream &rng) {
    if (!(rho > 0.0)) {
        throw ValidationError("sample_power_input: rho must be positive");
    }
    if (kind == InputKind::sphere) {
        return sample_sphere(n, std::sqrt(static_cast<double>(n) * rho), rng);
    }
    std::vector<cplx> x(n);
    const double scale = std::sqrt(rho);
    for (cplx &z : x) {
        z = scale * rng.next_cgauss();
    }
    return x;
}

std::vector<ComplexMatrix> rank1_stack(std::span<const cplx> x, std::size_t q, std::size_t m,
                                       RngStream &rng) {
    if (q < 1 || m < 1) {
        throw ValidationError("rank1_stack: q and m must be >= 1");
    }
    const std::size_t n = x.size();
    std::vector<ComplexMatrix> out;
    out.reserve(q);
    for (std::size_t c = 0; c < q; ++c) {
        const ComplexMatrix s = sample_gaussian_matrix(m, 1, rng);
        ComplexMatrix y = sample_gaussian_matrix(m, n, rng); // starts as the noise
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t k = 0; k < n; ++k) {
                y(a, k) += s(a, 0) * x[k];
            }
        }
        out.push_back(std::move(y));
    }
    return out;
}

ComplexMatrix recombine(std::span<const ComplexMatrix> y_list, const CorrelationRoot &root) {
    if (y_list.size() != root.q()) {
        throw ValidationError("recombine: list length must equal the root rank");
    }
    const std::size_t n = root.n();
    const std::size_t m = y_list.empty() ? 0 : y_list.front().rows();
    for (const ComplexMatrix &y : y_list) {
        if (y.rows() != m || y.cols() != n) {
            throw ValidationError("recombine: every block must be M x N");
        }
    }
    ComplexMatrix out(m, n);
    for (std::size_t c = 0; c < root.q(); ++c) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t k = 0; k < n; ++k) {
                out(a, k) += y_list[c](a, k) * root.mat(k, c);
            }
        }
    }
    return out;
}

} // namespace prelog

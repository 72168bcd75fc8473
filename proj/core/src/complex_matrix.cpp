// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/complex_matrix.hpp"

#include <cmath>

#include "prelog/errors.hpp"

namespace prelog {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw ValidationError("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

bool ComplexMatrix::is_finite() const noexcept {
    for (const cplx &z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double acc = 0.0;
    for (const cplx &z : data_) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double ComplexMatrix::max_abs() const noexcept {
    double best = 0.0;
    for (const cplx &z : data_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ValidationError("matrix product: inner dimensions disagree");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("matrix sum: shapes disagree");
    }
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.entries()[i] += b.entries()[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("matrix difference: shapes disagree");
    }
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.entries()[i] -= b.entries()[i];
    }
    return out;
}

ComplexMatrix operator*(cplx scalar, const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (cplx &z : out.entries()) {
        z *= scalar;
    }
    return out;
}

ComplexMatrix scale_columns(const ComplexMatrix &a, std::span<const cplx> d) {
    if (d.size() != a.cols()) {
        throw ValidationError("scale_columns: diagonal length must equal column count");
    }
    ComplexMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) *= d[c];
        }
    }
    return out;
}

double norm2(std::span<const cplx> v) {
    double acc = 0.0;
    for (const cplx &z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

} // namespace prelog

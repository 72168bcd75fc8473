// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_COMPLEX_MATRIX_HPP
#define PRELOG_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace prelog {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the tiny dimensions this
/// toolkit works with (blocks and antenna counts, typically <= 16 per side).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    /// rows x cols, zero-filled.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<cplx> entries() noexcept { return data_; }
    std::span<const cplx> entries() const noexcept { return data_; }

    /// Conjugate transpose.
    ComplexMatrix adjoint() const;

    bool is_finite() const noexcept;
    double frobenius_norm() const noexcept;
    double max_abs() const noexcept;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx scalar, const ComplexMatrix &a);

/// a * diag(d); d must have a.cols() entries.
ComplexMatrix scale_columns(const ComplexMatrix &a, std::span<const cplx> d);

double norm2(std::span<const cplx> v);

} // namespace prelog

#endif // PRELOG_COMPLEX_MATRIX_HPP

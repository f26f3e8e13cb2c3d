#pragma once

#include <complex>
#include <vector>

#include "negbounds/errors.hpp"

namespace negbounds::linalg {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. The workhorse for density matrices
/// and coefficient matrices; everything here stays well below 10^4 entries.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static Matrix identity(std::size_t n);
    static Matrix diag(const std::vector<double>& values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<cplx>& entries() const { return entries_; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// Max entrywise deviation |M - M^dagger|.
    double hermiticity_deviation() const;
    bool is_hermitian(double tol = 1e-10) const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator*(cplx scale) const;

    void check_finite() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

/// Real eigenvalue list of a Hermitian matrix, sorted ascending.
struct Spectrum {
    std::vector<double> values;  // ascending
    double tolerance = 1e-10;    // clip window used on PSD inputs

    double min() const { return values.front(); }
    double max() const { return values.back(); }
    double sum() const;
};

/// Eigenvalues of a Hermitian matrix via cyclic Jacobi with complex plane
/// rotations. Converges when the off-diagonal Frobenius norm drops below
/// 1e-12 times the matrix Frobenius norm; errors after 100 sweeps.
///
/// With clip_psd set, eigenvalues in [-1e-10, 0) are clipped to 0 and
/// anything more negative raises NotPositiveSemidefinite: the input was
/// claimed PSD and a large negative eigenvalue means a bug upstream.
Spectrum hermitian_eigenvalues(const Matrix& H, bool clip_psd = false);

/// Singular values, descending. Computed as square roots of the eigenvalues
/// of the smaller Gram matrix (MM^dagger or M^dagger M).
std::vector<double> singular_values(const Matrix& M);

/// Trace norm ||M|| = sum of singular values.
double trace_norm(const Matrix& M);

}  // namespace negbounds::linalg

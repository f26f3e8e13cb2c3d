#include "negbounds/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace negbounds::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("entry count does not match rows*cols");
    }
    check_finite();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<double>& values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

Matrix Matrix::conj() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
    return out;
}

cplx Matrix::trace() const {
    if (rows_ != cols_) throw NonSquare("trace of non-square matrix");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double Matrix::hermiticity_deviation() const {
    if (rows_ != cols_) throw NonSquare("hermiticity check on non-square matrix");
    double dev = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return dev;
}

bool Matrix::is_hermitian(double tol) const { return hermiticity_deviation() <= tol; }

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix add");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix subtract");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix multiply");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx a = (*this)(r, k);
            if (a == cplx{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    }
    return out;
}

Matrix Matrix::operator*(cplx scale) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scale;
    return out;
}

void Matrix::check_finite() const {
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw Error("matrix entry is not finite");
    }
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating A(p,q). The 2x2 pivot block is
// phase-rotated to a real symmetric block, then a classical Givens rotation
// is applied. Only eigenvalues are tracked, so any unitary that zeroes the
// pivot is acceptable.
void jacobi_rotate(Matrix& a, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double h = std::abs(apq);
    if (h == 0.0) return;
    const cplx phase = apq / h;  // a(p,q) = h * phase

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * h);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // U restricted to (p,q): column p = (c, -s*conj(phase)), column q = (s*phase, c).
    const cplx upp = c;
    const cplx upq = s * phase;
    const cplx uqp = -s * std::conj(phase);
    const cplx uqq = c;

    const std::size_t n = a.rows();
    // A <- A U
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    // A <- U^dagger A
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    // Clean up roundoff where the rotation is exact by construction.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

Spectrum hermitian_eigenvalues(const Matrix& H, bool clip_psd) {
    if (H.empty()) throw EmptyMatrix("eigenvalues of empty matrix");
    if (H.rows() != H.cols()) throw NonSquare("eigenvalues of non-square matrix");
    if (const double dev = H.hermiticity_deviation(); dev > 1e-10) {
        throw NonHermitian("hermiticity deviation " + std::to_string(dev) + " exceeds 1e-10");
    }

    const std::size_t n = H.rows();
    Matrix a = H;
    // Symmetrize so roundoff in the input cannot bias the iteration.
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }

    const double total = a.frobenius_norm();
    const double threshold = 1e-12 * total;
    constexpr int kMaxSweeps = 100;

    if (total > 0.0) {
        int sweep = 0;
        while (off_diagonal_norm(a) > threshold) {
            if (++sweep > kMaxSweeps) throw NoConvergence("Jacobi failed to converge in 100 sweeps");
            for (std::size_t p = 0; p + 1 < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, p, q);
        }
    }

    Spectrum sp;
    sp.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) sp.values[i] = a(i, i).real();
    std::sort(sp.values.begin(), sp.values.end());

    if (clip_psd) {
        for (double& v : sp.values) {
            if (v < 0.0) {
                if (v < -1e-10)
                    throw NotPositiveSemidefinite("eigenvalue " + std::to_string(v) +
                                                  " below PSD clip window");
                v = 0.0;
            }
        }
    }
    return sp;
}

std::vector<double> singular_values(const Matrix& M) {
    if (M.empty()) throw EmptyMatrix("singular values of empty matrix");
    // One-sided Jacobi: orthogonalize the columns of the side with fewer
    // columns. Unlike the Gram-matrix route this keeps full relative accuracy
    // for small singular values (forming MM* squares the condition number and
    // caps absolute accuracy of sqrt(mu) near 1e-8 for mu ~ machine epsilon).
    Matrix a = (M.cols() <= M.rows()) ? M : M.adjoint();
    const std::size_t rows = a.rows();
    const std::size_t ncol = a.cols();
    constexpr double kTol = 1e-15;
    constexpr int kMaxSweeps = 100;

    bool rotated = true;
    for (int sweep = 0; rotated; ++sweep) {
        if (sweep >= kMaxSweeps)
            throw NoConvergence("one-sided Jacobi failed to converge in 100 sweeps");
        rotated = false;
        for (std::size_t p = 0; p + 1 < ncol; ++p) {
            for (std::size_t q = p + 1; q < ncol; ++q) {
                double app = 0.0, aqq = 0.0;
                cplx apq{0.0, 0.0};
                for (std::size_t k = 0; k < rows; ++k) {
                    app += std::norm(a(k, p));
                    aqq += std::norm(a(k, q));
                    apq += std::conj(a(k, p)) * a(k, q);
                }
                const double h = std::abs(apq);
                if (h <= kTol * std::sqrt(app * aqq) || h == 0.0) continue;
                rotated = true;
                const cplx phase = apq / h;
                const double tau = (aqq - app) / (2.0 * h);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Same rotation as jacobi_rotate, applied to columns only.
                for (std::size_t k = 0; k < rows; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
            }
        }
    }

    std::vector<double> sv(ncol);
    for (std::size_t j = 0; j < ncol; ++j) {
        double nrm = 0.0;
        for (std::size_t k = 0; k < rows; ++k) nrm += std::norm(a(k, j));
        sv[j] = std::sqrt(nrm);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;  // descending
}

double trace_norm(const Matrix& M) {
    const auto sv = singular_values(M);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

}  // namespace negbounds::linalg

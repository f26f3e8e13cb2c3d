#include "negbounds/measures.hpp"

#include <cmath>

namespace negbounds::measures {

namespace {

double entropy_bits(const std::vector<double>& probs) {
    double e = 0.0;
    for (double p : probs) {
        if (p > 0.0) e -= p * std::log2(p);
    }
    return std::max(e, 0.0);
}

double clamp_negativity(double n) {
    if (n < 0.0 && n >= -1e-9) return 0.0;
    return n;
}

std::vector<double> reduced_spectrum(const PureState& s) {
    return linalg::hermitian_eigenvalues(states::reduced_density_a(s), /*clip_psd=*/true).values;
}

}  // namespace

double entropy_of_entanglement(const PureState& s) { return entropy_bits(reduced_spectrum(s)); }

double entropy_from_spectrum(const Spectrum& sp) { return entropy_bits(sp.values); }

double concurrence(const PureState& s) {
    double purity = 0.0;
    for (double mu : reduced_spectrum(s)) purity += mu * mu;
    return std::sqrt(std::max(2.0 * (1.0 - purity), 0.0));
}

double concurrence_sq_from_spectrum(const Spectrum& sp) {
    double sum = 0.0;
    double purity = 0.0;
    for (double mu : sp.values) {
        if (mu < 0.0) throw SpectrumNotNormalized("spectrum has a negative entry");
        sum += mu;
        purity += mu * mu;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw SpectrumNotNormalized("spectrum does not sum to 1");
    return 2.0 * (1.0 - purity);
}

Matrix partial_transpose_a(const Matrix& rho, std::size_t m, std::size_t n) {
    if (rho.rows() != m * n || rho.cols() != m * n)
        throw DimensionMismatch("density matrix is not (m*n) x (m*n)");
    if (rho.hermiticity_deviation() > 1e-10)
        throw NonHermitian("partial transpose input must be Hermitian");
    Matrix out(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    out(i * n + j, k * n + l) = rho(k * n + j, i * n + l);
    return out;
}

Matrix density_matrix(const PureState& s) {
    const std::size_t dim = s.dim_a() * s.dim_b();
    Matrix rho(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            rho(r, c) = s.amplitudes()[r] * std::conj(s.amplitudes()[c]);
    return rho;
}

double negativity_pt(const PureState& s) {
    const Matrix pt = partial_transpose_a(density_matrix(s), s.dim_a(), s.dim_b());
    return clamp_negativity(0.5 * (linalg::trace_norm(pt) - 1.0));
}

double negativity_schmidt(const PureState& s) {
    double sum = 0.0;
    for (double c : states::schmidt(s).coefficients) sum += c;
    return clamp_negativity(0.5 * (sum * sum - 1.0));
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || rho.rows() != rho.cols())
        throw DimensionMismatch("trace distance requires equal square dimensions");
    if (rho.hermiticity_deviation() > 1e-10 || sigma.hermiticity_deviation() > 1e-10)
        throw NonHermitian("trace distance inputs must be Hermitian");
    return linalg::trace_norm(rho - sigma);
}

double trace_distance_halved(const Matrix& rho, const Matrix& sigma) {
    return 0.5 * trace_distance(rho, sigma);
}

std::size_t schmidt_rank(const PureState& s, double tol) { return states::schmidt(s, tol).rank; }

}  // namespace negbounds::measures

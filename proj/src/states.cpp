#include "negbounds/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace negbounds::states {

namespace {

double vector_norm_sq(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return s;
}

}  // namespace

PureState::PureState(std::size_t dim_a, std::size_t dim_b, std::vector<cplx> amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
    if (dim_a_ == 0 || dim_b_ == 0) throw DimensionMismatch("state dimensions must be positive");
    if (amplitudes_.size() != dim_a_ * dim_b_)
        throw DimensionMismatch("amplitude count does not match dim_a*dim_b");
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error("amplitude is not finite");
    }
    const double n2 = vector_norm_sq(amplitudes_);
    if (n2 < 1e-12) throw DegenerateSuperposition("state vector has near-zero norm");
    if (std::abs(n2 - 1.0) > 1e-9) {
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : amplitudes_) a *= inv;
    }
}

SuperpositionSpec::SuperpositionSpec(cplx a, cplx b) : alpha(a), beta(b) {
    const double s = std::norm(alpha) + std::norm(beta);
    if (std::abs(s - 1.0) > 1e-9)
        throw Error("superposition amplitudes must satisfy |alpha|^2+|beta|^2=1");
}

Matrix coefficient_matrix(const PureState& s) {
    return Matrix(s.dim_a(), s.dim_b(), s.amplitudes());
}

Matrix reduced_density_a(const PureState& s) {
    const Matrix phi = coefficient_matrix(s);
    return phi * phi.adjoint();
}

SchmidtData schmidt(const PureState& s, double rank_tolerance) {
    SchmidtData data;
    data.coefficients = linalg::singular_values(coefficient_matrix(s));
    data.rank_tolerance = rank_tolerance;
    data.rank = static_cast<std::size_t>(
        std::count_if(data.coefficients.begin(), data.coefficients.end(),
                      [&](double c) { return c > rank_tolerance; }));
    return data;
}

double fidelity(const PureState& s1, const PureState& s2) {
    if (!s1.same_dims(s2)) throw DimensionMismatch("fidelity requires equal dimensions");
    cplx ip{0.0, 0.0};
    for (std::size_t k = 0; k < s1.amplitudes().size(); ++k)
        ip += std::conj(s1.amplitudes()[k]) * s2.amplitudes()[k];
    return std::norm(ip);
}

Superposition superpose(const SuperpositionSpec& spec, const PureState& phi,
                        const PureState& psi) {
    if (!phi.same_dims(psi)) throw DimensionMismatch("superpose requires equal dimensions");
    std::vector<cplx> v(phi.amplitudes().size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = spec.alpha * phi.amplitudes()[k] + spec.beta * psi.amplitudes()[k];
    const double n2 = vector_norm_sq(v);
    if (n2 < 1e-12)
        throw DegenerateSuperposition("superposition cancels: norm^2 below 1e-12");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : v) a *= inv;
    return Superposition{n2, PureState(phi.dim_a(), phi.dim_b(), std::move(v))};
}

bool is_biorthogonal(const PureState& phi, const PureState& psi, double tol) {
    if (!phi.same_dims(psi)) throw DimensionMismatch("biorthogonality requires equal dimensions");
    const Matrix p = coefficient_matrix(phi);
    const Matrix q = coefficient_matrix(psi);
    return (p * q.adjoint()).max_abs() <= tol && (q * p.adjoint()).max_abs() <= tol;
}

bool is_a_side_orthogonal(const PureState& phi, const PureState& psi, double tol) {
    if (!phi.same_dims(psi)) throw DimensionMismatch("orthogonality requires equal dimensions");
    const Matrix p = coefficient_matrix(phi);
    const Matrix q = coefficient_matrix(psi);
    return (p.adjoint() * q).max_abs() <= tol && (q.adjoint() * p).max_abs() <= tol;
}

std::pair<PureState, PureState> epsilon_family(double epsilon, std::size_t d) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0) || !std::isfinite(epsilon))
        throw InvalidEpsilon("epsilon must lie in [0, 1]");
    if (d < 1) throw InvalidEpsilon("d must be at least 1");
    const std::size_t dim = d + 1;
    if (dim * dim > kMaxDenseAmplitudes)
        throw DimensionTooLarge("dense epsilon-family state exceeds the memory cap; "
                                "use epsilon_family_spectrum");

    std::vector<cplx> phi_amp(dim * dim, cplx{0.0, 0.0});
    phi_amp[0] = 1.0;
    std::vector<cplx> psi_amp(dim * dim, cplx{0.0, 0.0});
    psi_amp[0] = std::sqrt(1.0 - epsilon);
    const double tail = std::sqrt(epsilon / static_cast<double>(d));
    for (std::size_t i = 1; i <= d; ++i) psi_amp[i * dim + i] = tail;

    return {PureState(dim, dim, std::move(phi_amp)), PureState(dim, dim, std::move(psi_amp))};
}

Spectrum epsilon_family_spectrum(double epsilon, std::size_t d) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0) || !std::isfinite(epsilon))
        throw InvalidEpsilon("epsilon must lie in [0, 1]");
    if (d < 1) throw InvalidEpsilon("d must be at least 1");
    Spectrum sp;
    sp.values.assign(d + 1, epsilon / static_cast<double>(d));
    sp.values.back() = 1.0 - epsilon;
    std::sort(sp.values.begin(), sp.values.end());
    return sp;
}

PureState maximally_entangled(std::size_t dim_a, std::size_t dim_b,
                              const std::vector<std::size_t>& a_indices,
                              const std::vector<std::size_t>& b_indices) {
    if (a_indices.size() != b_indices.size() || a_indices.empty())
        throw DimensionMismatch("index lists must have equal nonzero length");
    const std::size_t k = a_indices.size();
    std::set<std::size_t> seen_a(a_indices.begin(), a_indices.end());
    std::set<std::size_t> seen_b(b_indices.begin(), b_indices.end());
    if (seen_a.size() != k || seen_b.size() != k)
        throw DuplicateIndex("index lists must be distinct");
    for (std::size_t t = 0; t < k; ++t) {
        if (a_indices[t] >= dim_a || b_indices[t] >= dim_b)
            throw IndexOutOfRange("basis index exceeds dimension");
    }
    std::vector<cplx> amp(dim_a * dim_b, cplx{0.0, 0.0});
    const double w = 1.0 / std::sqrt(static_cast<double>(k));
    for (std::size_t t = 0; t < k; ++t) amp[a_indices[t] * dim_b + b_indices[t]] = w;
    return PureState(dim_a, dim_b, std::move(amp));
}

}  // namespace negbounds::states

#include "negbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace negbounds::bounds {

namespace {

constexpr double kAmpFloor = 1e-6;

double mu_max_reduced(const PureState& s) {
    return linalg::hermitian_eigenvalues(states::reduced_density_a(s), /*clip_psd=*/true)
        .values.back();
}

double schmidt_coefficient_sum(const PureState& s) {
    double sum = 0.0;
    for (double c : states::schmidt(s).coefficients) sum += c;
    return sum;
}

}  // namespace

BoundReport BoundReport::make(std::optional<double> lower, double value, double upper) {
    BoundReport r;
    r.lower = lower;
    r.value = value;
    r.upper = upper;
    r.slack_upper = upper - value;
    bool ok = value <= upper + kCheckTol;
    if (lower) {
        r.slack_lower = value - *lower;
        ok = ok && (*lower - kCheckTol <= value);
    }
    r.holds = ok;
    return r;
}

BoundReport fannes_concurrence_check(const PureState& s1, const PureState& s2) {
    if (!s1.same_dims(s2)) throw DimensionMismatch("continuity check requires equal dimensions");
    const double c1 = measures::concurrence(s1);
    const double c2 = measures::concurrence(s2);
    const double value = std::abs(c1 * c1 - c2 * c2);
    const double t =
        measures::trace_distance(states::reduced_density_a(s1), states::reduced_density_a(s2));
    BoundReport r = BoundReport::make(std::nullopt, value, 4.0 * t);
    r.terms["concurrence_sq_1"] = c1 * c1;
    r.terms["concurrence_sq_2"] = c2 * c2;
    r.terms["trace_distance"] = t;
    return r;
}

BoundReport sorted_eigenvalue_l1_check(const Matrix& rho, const Matrix& sigma) {
    const double t = measures::trace_distance(rho, sigma);  // validates dims and hermiticity
    auto r_eigs = linalg::hermitian_eigenvalues(rho).values;
    auto s_eigs = linalg::hermitian_eigenvalues(sigma).values;
    // Both ascending; pairing i-th largest with i-th largest is the same
    // as pairing ascending entries.
    double l1 = 0.0;
    for (std::size_t i = 0; i < r_eigs.size(); ++i) l1 += std::abs(r_eigs[i] - s_eigs[i]);
    BoundReport rep = BoundReport::make(std::nullopt, l1, t);
    rep.terms["trace_distance"] = t;
    return rep;
}

double n_tilde(double n_base, double mu_max_other, double amp_num, double amp_den,
               std::size_t r) {
    if (amp_den < kAmpFloor)
        throw AmplitudeTooSmall("denominator amplitude below 1e-6; the bound diverges");
    if (mu_max_other < 0.0 || mu_max_other > 1.0 + kCheckTol)
        throw Error("mu_max must lie in [0, 1]");
    if (n_base < 0.0) throw Error("base negativity must be nonnegative");
    const double rr = static_cast<double>(r);
    const double ratio = amp_num / amp_den;
    return n_base + rr * ratio * std::sqrt(mu_max_other * (2.0 * n_base + 1.0)) +
           rr * rr * ratio * ratio * mu_max_other / 2.0;
}

namespace {

struct SuperposedQuantities {
    double abs_a, abs_b;
    double n_phi, n_psi;
    double mu_phi, mu_psi;  // largest reduced eigenvalue of each input
};

SuperposedQuantities gather(const SuperpositionSpec& spec, const PureState& phi,
                            const PureState& psi) {
    if (!phi.same_dims(psi)) throw DimensionMismatch("superposition bound: unequal dimensions");
    SuperposedQuantities q;
    q.abs_a = std::abs(spec.alpha);
    q.abs_b = std::abs(spec.beta);
    if (std::min(q.abs_a, q.abs_b) < kAmpFloor)
        throw AmplitudeTooSmall("superposition amplitude below 1e-6");
    q.n_phi = measures::negativity_schmidt(phi);
    q.n_psi = measures::negativity_schmidt(psi);
    q.mu_phi = mu_max_reduced(phi);
    q.mu_psi = mu_max_reduced(psi);
    return q;
}

}  // namespace

BoundReport theorem2_bounds(const SuperpositionSpec& spec, const PureState& phi,
                            const PureState& psi) {
    if (!states::is_biorthogonal(phi, psi, 1e-10))
        throw NotBiorthogonal("inputs are not biorthogonal at tolerance 1e-10");
    const SuperposedQuantities q = gather(spec, phi, psi);
    const double a2 = q.abs_a * q.abs_a;
    const double b2 = q.abs_b * q.abs_b;
    const std::size_t n = std::min(phi.dim_a(), phi.dim_b());

    const auto gamma = states::superpose(spec, phi, psi);
    const double value = measures::negativity_schmidt(gamma.gamma);

    const double nt_phi = n_tilde(q.n_phi, q.mu_psi, q.abs_b, q.abs_a, n);
    const double nt_psi = n_tilde(q.n_psi, q.mu_phi, q.abs_a, q.abs_b, n);

    const double raw_lower = (2.0 * a2 * q.n_phi + 2.0 * b2 * q.n_psi - 1.0) / 4.0;
    const double upper = (2.0 * a2 * nt_phi + 2.0 * b2 * nt_psi - 1.0) / 4.0;

    BoundReport r = BoundReport::make(std::max(raw_lower, 0.0), value, upper);
    r.terms["raw_lower"] = raw_lower;
    r.terms["n_phi"] = q.n_phi;
    r.terms["n_psi"] = q.n_psi;
    r.terms["mu_max_phi"] = q.mu_phi;
    r.terms["mu_max_psi"] = q.mu_psi;
    r.terms["n_tilde_phi"] = nt_phi;
    r.terms["n_tilde_psi"] = nt_psi;
    r.terms["n"] = static_cast<double>(n);
    r.terms["norm_sq"] = gamma.norm_sq;
    // One-sided bounds the sandwich averages.
    r.terms["phi_side_lower"] = a2 * q.n_phi + (a2 - 1.0) / 2.0;
    r.terms["phi_side_upper"] = a2 * nt_phi + (a2 - 1.0) / 2.0;
    r.terms["psi_side_lower"] = b2 * q.n_psi + (b2 - 1.0) / 2.0;
    r.terms["psi_side_upper"] = b2 * nt_psi + (b2 - 1.0) / 2.0;
    // Schmidt-sum lemma behind the upper bound:
    //   sum sqrt(mu_i(GG+)) <= |a| sum sqrt(mu_i(PP+)) + n |b| sqrt(mu_max(QQ+)).
    r.terms["schmidt_sum_lhs"] = schmidt_coefficient_sum(gamma.gamma);
    r.terms["schmidt_sum_rhs"] = q.abs_a * schmidt_coefficient_sum(phi) +
                          static_cast<double>(n) * q.abs_b * std::sqrt(q.mu_psi);
    return r;
}

BoundReport theorem3_upper(const SuperpositionSpec& spec, const PureState& phi,
                           const PureState& psi) {
    const SuperposedQuantities q = gather(spec, phi, psi);
    const double a2 = q.abs_a * q.abs_a;
    const double b2 = q.abs_b * q.abs_b;

    const auto gamma = states::superpose(spec, phi, psi);
    const double n_gamma = measures::negativity_schmidt(gamma.gamma);

    const std::size_t r1 = measures::schmidt_rank(phi);
    const std::size_t r2 = measures::schmidt_rank(psi);
    const std::size_t r3 = measures::schmidt_rank(gamma.gamma);
    const std::size_t r = std::max({r1, r2, r3});

    const double nt_phi = n_tilde(q.n_phi, q.mu_psi, q.abs_b, q.abs_a, r);
    const double nt_psi = n_tilde(q.n_psi, q.mu_phi, q.abs_a, q.abs_b, r);

    const double lhs = 2.0 * gamma.norm_sq * n_gamma;
    const double rhs = 2.0 * a2 * nt_phi + 2.0 * b2 * nt_psi - gamma.norm_sq + 1.0;

    BoundReport rep = BoundReport::make(std::nullopt, lhs, rhs);
    rep.terms["negativity_gamma"] = n_gamma;
    rep.terms["norm_sq"] = gamma.norm_sq;
    rep.terms["rank_phi"] = static_cast<double>(r1);
    rep.terms["rank_psi"] = static_cast<double>(r2);
    rep.terms["rank_gamma"] = static_cast<double>(r3);
    rep.terms["r"] = static_cast<double>(r);
    rep.terms["rank_tolerance"] = 1e-10;
    rep.terms["n_phi"] = q.n_phi;
    rep.terms["n_psi"] = q.n_psi;
    rep.terms["mu_max_phi"] = q.mu_phi;
    rep.terms["mu_max_psi"] = q.mu_psi;
    rep.terms["n_tilde_phi"] = nt_phi;
    rep.terms["n_tilde_psi"] = nt_psi;
    return rep;
}

BoundReport horn_check(const Matrix& H, const Matrix& K) {
    if (H.rows() != K.rows() || H.cols() != K.cols() || H.rows() != H.cols())
        throw DimensionMismatch("interlacing check requires equal square dimensions");
    const auto h = linalg::hermitian_eigenvalues(H).values;
    const auto k = linalg::hermitian_eigenvalues(K).values;
    const auto hk = linalg::hermitian_eigenvalues(H + K).values;

    const double k_min = k.front();
    const double k_max = k.back();
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < h.size(); ++i) {
        worst = std::max(worst, h[i] + k_min - hk[i]);  // lower chain
        worst = std::max(worst, hk[i] - (h[i] + k_max));  // upper chain
    }

    const bool h_psd = h.front() >= -kCheckTol;
    const bool k_psd = k_min >= -kCheckTol;
    double worst_sqrt = -std::numeric_limits<double>::infinity();
    if (h_psd && k_psd) {
        const double sk = std::sqrt(std::max(k_max, 0.0));
        for (std::size_t i = 0; i < h.size(); ++i) {
            const double sh = std::sqrt(std::max(h[i], 0.0));
            const double shk = std::sqrt(std::max(hk[i], 0.0));
            worst_sqrt = std::max(worst_sqrt, sh - shk);
            worst_sqrt = std::max(worst_sqrt, shk - (sh + sk));
        }
        worst = std::max(worst, worst_sqrt);
    }

    BoundReport rep = BoundReport::make(std::nullopt, worst, 0.0);
    rep.terms["k_min"] = k_min;
    rep.terms["k_max"] = k_max;
    rep.terms["sqrt_chain_checked"] = (h_psd && k_psd) ? 1.0 : 0.0;
    if (h_psd && k_psd) rep.terms["worst_sqrt_violation"] = worst_sqrt;
    return rep;
}

double mixture_identity_residual(const SuperpositionSpec& spec, const PureState& phi,
                                 const PureState& psi) {
    const auto plus = states::superpose(spec, phi, psi);
    const SuperpositionSpec minus_spec(spec.alpha, -spec.beta);
    const auto minus = states::superpose(minus_spec, phi, psi);

    const Matrix p = states::coefficient_matrix(phi);
    const Matrix q = states::coefficient_matrix(psi);
    const Matrix m = p * p.adjoint() * std::norm(spec.alpha) +
                     q * q.adjoint() * std::norm(spec.beta);

    const Matrix gp = states::coefficient_matrix(plus.gamma);
    const Matrix gm = states::coefficient_matrix(minus.gamma);
    const Matrix mixture =
        gp * gp.adjoint() * (plus.norm_sq / 2.0) + gm * gm.adjoint() * (minus.norm_sq / 2.0);

    return (m - mixture).max_abs();
}

}  // namespace negbounds::bounds

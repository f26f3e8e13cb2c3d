#pragma once

#include <map>
#include <optional>
#include <string>

#include "negbounds/measures.hpp"

namespace negbounds::bounds {

using linalg::Matrix;
using states::PureState;
using states::SuperpositionSpec;

inline constexpr double kCheckTol = 1e-9;

/// One evaluated inequality: lower <= value <= upper (lower may be absent),
/// with slacks and the named intermediate quantities that went into it.
struct BoundReport {
    std::optional<double> lower;
    double value = 0.0;
    double upper = 0.0;
    std::optional<double> slack_lower;
    double slack_upper = 0.0;
    bool holds = false;
    std::map<std::string, double> terms;

    static BoundReport make(std::optional<double> lower, double value, double upper);
};

/// Fannes-type continuity of the squared concurrence:
/// |C^2(s1) - C^2(s2)| <= 4 Tr|rho_A - sigma_A|.
BoundReport fannes_concurrence_check(const PureState& s1, const PureState& s2);

/// sum_i |r_i - s_i| <= Tr|rho - sigma| with both spectra sorted descending.
BoundReport sorted_eigenvalue_l1_check(const Matrix& rho, const Matrix& sigma);

/// The corrected negativity term
///   N~ = n_base + r*amp_num*sqrt(mu*(2 n_base + 1))/amp_den
///               + r^2*amp_num^2*mu/(2 amp_den^2),
/// where mu is the LARGEST reduced eigenvalue of the other state and r is
/// the dimension multiplier (min(m,n) in the biorthogonal bound, the max
/// Schmidt rank in the general one). Diverges as amp_den -> 0, so amplitudes
/// below 1e-6 are rejected.
double n_tilde(double n_base, double mu_max_other, double amp_num, double amp_den,
               std::size_t r);

/// Biorthogonal superposition sandwich:
///   (2|a|^2 N(phi) + 2|b|^2 N(psi) - 1)/4 <= N(gamma) <= same with N~.
/// The lower bound is floored at 0; the raw value and the one-sided bounds
/// are kept in terms (keys phi_side_lower/phi_side_upper/psi_side_lower/psi_side_upper, raw_lower,
/// schmidt_sum_lhs/schmidt_sum_rhs, n_tilde_phi/n_tilde_psi, mu_max_phi/mu_max_psi, n).
BoundReport theorem2_bounds(const SuperpositionSpec& spec, const PureState& phi,
                            const PureState& psi);

/// General (possibly nonorthogonal) superposition upper bound:
///   2||aP+bQ||^2 N(gamma) <= 2|a|^2 N~(phi) + 2|b|^2 N~(psi) - ||aP+bQ||^2 + 1,
/// with r = max of the three Schmidt ranks. No lower bound exists here.
BoundReport theorem3_upper(const SuperpositionSpec& spec, const PureState& phi,
                           const PureState& psi);

/// Eigenvalue interlacing for Hermitian H, K:
///   mu_i(H) + mu_min(K) <= mu_i(H+K) <= mu_i(H) + mu_max(K)  for every i;
/// when H and K are PSD also the square-root chain
///   sqrt(mu_i(H)) <= sqrt(mu_i(H+K)) <= sqrt(mu_i(H)) + sqrt(mu_max(K)).
/// value is the worst violation across all constraints (<= 0 when all hold).
BoundReport horn_check(const Matrix& H, const Matrix& K);

/// Max elementwise residual of
///   |a|^2 P P^+ + |b|^2 Q Q^+
///     = (||G||^2/2) G^ G^+ + (||G-||^2/2) G-^ (G-^)+,
/// with G = aP+bQ, G- = aP-bQ, hats normalized. Exact algebraic identity;
/// anything above 1e-10 indicates a bug.
double mixture_identity_residual(const SuperpositionSpec& spec, const PureState& phi,
                                 const PureState& psi);

}  // namespace negbounds::bounds

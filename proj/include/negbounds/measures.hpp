#pragma once

#include "negbounds/states.hpp"

namespace negbounds::measures {

using linalg::Matrix;
using linalg::Spectrum;
using states::PureState;

/// Entropy of entanglement in bits: -sum mu_i log2 mu_i over the reduced
/// spectrum, with 0 log 0 := 0. Base 2 throughout this library.
double entropy_of_entanglement(const PureState& s);

/// Same entropy evaluated on an explicit reduced spectrum (the analytic
/// large-d path).
double entropy_from_spectrum(const Spectrum& sp);

/// Pure-state concurrence sqrt(2(1 - Tr rho_A^2)).
double concurrence(const PureState& s);

/// Squared concurrence 2(1 - sum mu_i^2) from an explicit reduced spectrum.
/// Entries must be nonnegative and sum to 1 within 1e-9.
double concurrence_sq_from_spectrum(const Spectrum& sp);

/// Partial transpose on subsystem A: (rho^T_A)_{ij,kl} = rho_{kj,il}.
/// rho must be (m*n) x (m*n) and Hermitian within 1e-10. Involution.
Matrix partial_transpose_a(const Matrix& rho, std::size_t m, std::size_t n);

/// Negativity via the partial transpose: (||rho^T_A|| - 1) / 2.
/// Values in [-1e-9, 0) are clamped to 0.
double negativity_pt(const PureState& s);

/// Negativity via Schmidt coefficients: ((sum sqrt(mu_i))^2 - 1) / 2.
/// Agrees with negativity_pt within 1e-8 on pure states.
double negativity_schmidt(const PureState& s);

/// Trace distance Tr|rho - sigma| WITHOUT the conventional 1/2 factor;
/// the continuity bound's constant 4 is calibrated to this form.
double trace_distance(const Matrix& rho, const Matrix& sigma);

/// The conventional (1/2) Tr|rho - sigma|, offered as a convenience only.
double trace_distance_halved(const Matrix& rho, const Matrix& sigma);

/// Number of Schmidt coefficients above tol.
std::size_t schmidt_rank(const PureState& s, double tol = 1e-10);

/// Projector |s><s| as a dense (m*n) x (m*n) matrix.
Matrix density_matrix(const PureState& s);

}  // namespace negbounds::measures

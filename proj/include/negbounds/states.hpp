#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "negbounds/linalg.hpp"

namespace negbounds::states {

using linalg::cplx;
using linalg::Matrix;
using linalg::Spectrum;

/// Largest dense state: (dim_a * dim_b) amplitudes must fit in 2^26.
inline constexpr std::size_t kMaxDenseAmplitudes = std::size_t{1} << 26;

/// Normalized bipartite pure state on an m x n product basis.
/// Amplitude index i*n + j corresponds to |i>_A |j>_B.
class PureState {
   public:
    PureState(std::size_t dim_a, std::size_t dim_b, std::vector<cplx> amplitudes);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    cplx amplitude(std::size_t i, std::size_t j) const { return amplitudes_[i * dim_b_ + j]; }

    bool same_dims(const PureState& other) const {
        return dim_a_ == other.dim_a_ && dim_b_ == other.dim_b_;
    }

   private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    std::vector<cplx> amplitudes_;
};

/// Schmidt coefficients sqrt(mu_i), descending, with numerical rank.
struct SchmidtData {
    std::vector<double> coefficients;  // descending
    std::size_t rank = 0;              // count of coefficients > rank_tolerance
    double rank_tolerance = 1e-10;
};

/// Superposition amplitudes with |alpha|^2 + |beta|^2 = 1.
struct SuperpositionSpec {
    cplx alpha;
    cplx beta;

    SuperpositionSpec(cplx a, cplx b);
};

/// Reshape the amplitude vector into the m x n coefficient matrix Phi.
Matrix coefficient_matrix(const PureState& s);

/// Reduced density matrix of subsystem A: Phi Phi^dagger. Hermitian, PSD, trace 1.
Matrix reduced_density_a(const PureState& s);

SchmidtData schmidt(const PureState& s, double rank_tolerance = 1e-10);

/// |<s1|s2>|^2.
double fidelity(const PureState& s1, const PureState& s2);

struct Superposition {
    double norm_sq;   // ||alpha*Phi + beta*Psi||^2 before normalization
    PureState gamma;  // the normalized superposition
};

/// alpha applies to phi, beta to psi. Errors if the terms cancel to norm^2 < 1e-12.
Superposition superpose(const SuperpositionSpec& spec, const PureState& phi,
                        const PureState& psi);

/// True iff Phi Psi^dagger and Psi Phi^dagger both vanish entrywise within tol.
/// This is the exact hypothesis the superposition bounds use; the A-side
/// condition Phi^dagger Psi = 0 is a separate, stronger statement (see
/// is_a_side_orthogonal).
bool is_biorthogonal(const PureState& phi, const PureState& psi, double tol = 1e-10);

/// Informational companion check: Phi^dagger Psi = Psi^dagger Phi = 0 within tol.
bool is_a_side_orthogonal(const PureState& phi, const PureState& psi, double tol = 1e-10);

/// The continuity-contrast family in (d+1) x (d+1) dimensions:
///   phi = |00>,  psi = sqrt(1-eps)|00> + sqrt(eps/d) (|11> + ... + |dd>).
/// fidelity(phi, psi) = 1 - eps.
std::pair<PureState, PureState> epsilon_family(double epsilon, std::size_t d);

/// Analytic reduced spectrum {1-eps, eps/d x d} of the epsilon-family psi.
/// No state vector is built, so d can be astronomically large.
Spectrum epsilon_family_spectrum(double epsilon, std::size_t d);

/// (1/sqrt(k)) sum_t |a_t b_t> over k distinct index pairs.
PureState maximally_entangled(std::size_t dim_a, std::size_t dim_b,
                              const std::vector<std::size_t>& a_indices,
                              const std::vector<std::size_t>& b_indices);

}  // namespace negbounds::states

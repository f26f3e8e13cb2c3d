#include <doctest.h>

#include <cmath>

#include "negbounds/harness.hpp"
#include "negbounds/state_io.hpp"
#include "negbounds/states.hpp"

using namespace negbounds;
using linalg::cplx;
using states::PureState;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState bell22() { return states::maximally_entangled(2, 2, {0, 1}, {0, 1}); }

PureState basis_state(std::size_t m, std::size_t n, std::size_t i, std::size_t j) {
    std::vector<cplx> amp(m * n, cplx{0.0, 0.0});
    amp[i * n + j] = 1.0;
    return PureState(m, n, std::move(amp));
}

}  // namespace

TEST_CASE("coefficient matrix layout") {
    auto m = states::coefficient_matrix(basis_state(2, 2, 0, 0));
    CHECK(m(0, 0) == cplx{1.0, 0.0});
    CHECK(m(1, 1) == cplx{0.0, 0.0});

    auto b = states::coefficient_matrix(bell22());
    CHECK(b(0, 0).real() == doctest::Approx(kInvSqrt2));
    CHECK(b(1, 1).real() == doctest::Approx(kInvSqrt2));
    CHECK(std::abs(b(0, 1)) == 0.0);

    // sqrt(0.8)|01> + sqrt(0.2)|10>
    std::vector<cplx> amp(4, cplx{0.0, 0.0});
    amp[1] = std::sqrt(0.8);
    amp[2] = std::sqrt(0.2);
    auto c = states::coefficient_matrix(PureState(2, 2, amp));
    CHECK(c(0, 1).real() == doctest::Approx(std::sqrt(0.8)));
    CHECK(c(1, 0).real() == doctest::Approx(std::sqrt(0.2)));
    CHECK(std::abs(c(0, 0)) == 0.0);
}

TEST_CASE("reduced density matrix") {
    auto rho = states::reduced_density_a(basis_state(2, 2, 0, 0));
    CHECK(rho(0, 0).real() == doctest::Approx(1.0));
    CHECK(rho(1, 1).real() == doctest::Approx(0.0));

    rho = states::reduced_density_a(bell22());
    CHECK(rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(rho(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(rho(0, 1)) == doctest::Approx(0.0));

    // sqrt(0.8)|00> + sqrt(0.2)|11>; oracle: explicit partial-trace sums.
    std::vector<cplx> amp(4, cplx{0.0, 0.0});
    amp[0] = std::sqrt(0.8);
    amp[3] = std::sqrt(0.2);
    PureState s(2, 2, amp);
    rho = states::reduced_density_a(s);
    for (std::size_t i = 0; i < 2; ++i) {
        cplx diag{0.0, 0.0};
        for (std::size_t j = 0; j < 2; ++j)
            diag += s.amplitude(i, j) * std::conj(s.amplitude(i, j));
        CHECK(rho(i, i).real() == doctest::Approx(diag.real()).epsilon(1e-12));
    }
    CHECK(rho(0, 0).real() == doctest::Approx(0.8));
    CHECK(rho(1, 1).real() == doctest::Approx(0.2));
    CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rho.hermiticity_deviation() <= 1e-12);
}

TEST_CASE("schmidt decomposition") {
    auto sd = states::schmidt(basis_state(2, 2, 0, 0));
    CHECK(sd.rank == 1);
    CHECK(sd.coefficients[0] == doctest::Approx(1.0));

    sd = states::schmidt(bell22());
    CHECK(sd.rank == 2);
    CHECK(sd.coefficients[0] == doctest::Approx(kInvSqrt2));
    CHECK(sd.coefficients[1] == doctest::Approx(kInvSqrt2));

    // The published 4x4 superposition: four coefficients 1/2, rank 4.
    auto phi = states::maximally_entangled(4, 4, {0, 1}, {0, 1});
    auto psi = states::maximally_entangled(4, 4, {2, 3}, {2, 3});
    states::SuperpositionSpec spec(cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0});
    auto gamma = states::superpose(spec, phi, psi);
    sd = states::schmidt(gamma.gamma);
    REQUIRE(sd.coefficients.size() == 4);
    CHECK(sd.rank == 4);
    for (double c : sd.coefficients) CHECK(c == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fidelity") {
    auto bell = bell22();
    CHECK(states::fidelity(bell, bell) == doctest::Approx(1.0));

    auto [phi, psi] = states::epsilon_family(0.3, 5);
    CHECK(states::fidelity(phi, psi) == doctest::Approx(0.7).epsilon(1e-12));

    auto b1 = states::maximally_entangled(4, 4, {0, 1}, {0, 1});
    auto b2 = states::maximally_entangled(4, 4, {2, 3}, {2, 3});
    CHECK(states::fidelity(b1, b2) == doctest::Approx(0.0));

    CHECK_THROWS_AS(states::fidelity(bell, b1), DimensionMismatch);
}

TEST_CASE("superpose") {
    auto bell = bell22();
    auto p00 = basis_state(2, 2, 0, 0);

    states::SuperpositionSpec ident(cplx{1.0, 0.0}, cplx{0.0, 0.0});
    auto r = states::superpose(ident, bell, p00);
    CHECK(r.norm_sq == doctest::Approx(1.0));
    CHECK(states::fidelity(r.gamma, bell) == doctest::Approx(1.0));

    // Biorthogonal terms with |a|^2+|b|^2=1 keep unit norm.
    states::SuperpositionSpec half(cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0});
    auto b1 = states::maximally_entangled(4, 4, {0, 1}, {0, 1});
    auto b2 = states::maximally_entangled(4, 4, {2, 3}, {2, 3});
    CHECK(states::superpose(half, b1, b2).norm_sq == doctest::Approx(1.0).epsilon(1e-12));

    // Identical terms: ||(a+b) phi||^2 = 2 at a = b = 1/sqrt(2).
    CHECK(states::superpose(half, bell, bell).norm_sq == doctest::Approx(2.0).epsilon(1e-12));

    // Cancellation errors.
    states::SuperpositionSpec cancel(cplx{kInvSqrt2, 0}, cplx{-kInvSqrt2, 0});
    CHECK_THROWS_AS(states::superpose(cancel, bell, bell), DegenerateSuperposition);
    CHECK_THROWS_AS(states::superpose(half, bell, b1), DimensionMismatch);
}

TEST_CASE("biorthogonality") {
    auto b1 = states::maximally_entangled(4, 4, {0, 1}, {0, 1});
    auto b2 = states::maximally_entangled(4, 4, {2, 3}, {2, 3});
    CHECK(states::is_biorthogonal(b1, b2, 1e-10));
    CHECK(states::is_a_side_orthogonal(b1, b2, 1e-10));

    CHECK_FALSE(states::is_biorthogonal(b1, b1, 1e-10));

    CHECK(states::is_biorthogonal(basis_state(2, 2, 0, 0), basis_state(2, 2, 1, 1), 1e-10));
}

TEST_CASE("epsilon family") {
    auto [phi0, psi0] = states::epsilon_family(0.0, 3);
    CHECK(states::fidelity(phi0, psi0) == doctest::Approx(1.0));

    auto [phi, psi] = states::epsilon_family(0.1, 4);
    auto sp = linalg::hermitian_eigenvalues(states::reduced_density_a(psi), true);
    REQUIRE(sp.values.size() == 5);
    CHECK(sp.values.back() == doctest::Approx(0.9).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < sp.values.size(); ++i)
        CHECK(sp.values[i] == doctest::Approx(0.025).epsilon(1e-12));

    CHECK_THROWS_AS(states::epsilon_family(-0.1, 4), InvalidEpsilon);
    CHECK_THROWS_AS(states::epsilon_family(1.5, 4), InvalidEpsilon);
    CHECK_THROWS_AS(states::epsilon_family(0.5, 10000), DimensionTooLarge);
}

TEST_CASE("epsilon family spectrum matches the dense path") {
    auto analytic = states::epsilon_family_spectrum(0.1, 4);
    auto [phi, psi] = states::epsilon_family(0.1, 4);
    auto dense = linalg::hermitian_eigenvalues(states::reduced_density_a(psi), true);
    REQUIRE(analytic.values.size() == dense.values.size());
    for (std::size_t i = 0; i < analytic.values.size(); ++i)
        CHECK(analytic.values[i] == doctest::Approx(dense.values[i]).epsilon(1e-12));

    auto bell_point = states::epsilon_family_spectrum(0.5, 1);
    CHECK(bell_point.values[0] == doctest::Approx(0.5));
    CHECK(bell_point.values[1] == doctest::Approx(0.5));
    CHECK_THROWS_AS(states::epsilon_family_spectrum(2.0, 4), InvalidEpsilon);
}

TEST_CASE("maximally entangled constructor") {
    auto bell = states::maximally_entangled(2, 2, {0, 1}, {0, 1});
    auto sd = states::schmidt(bell);
    for (double c : sd.coefficients) CHECK(c == doctest::Approx(kInvSqrt2));

    auto single = states::maximally_entangled(3, 3, {2}, {1});
    CHECK(states::schmidt(single).rank == 1);

    CHECK_THROWS_AS(states::maximally_entangled(2, 2, {0, 2}, {0, 1}), IndexOutOfRange);
    CHECK_THROWS_AS(states::maximally_entangled(3, 3, {0, 0}, {0, 1}), DuplicateIndex);
}

TEST_CASE("Haar property campaign: normalization, trace, spectrum cross-path") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto s = harness::haar_state(3, 4, seed);
        auto sd = states::schmidt(s);
        double sum_sq = 0.0;
        for (double c : sd.coefficients) sum_sq += c * c;
        CHECK(sum_sq == doctest::Approx(1.0).epsilon(1e-9));

        auto rho = states::reduced_density_a(s);
        CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-9));

        // Two independent code paths: rho_A eigenvalues vs squared Schmidt.
        auto sp = linalg::hermitian_eigenvalues(rho, true);
        for (std::size_t i = 0; i < sd.coefficients.size(); ++i) {
            const double mu = sp.values[sp.values.size() - 1 - i];
            CHECK(sd.coefficients[i] * sd.coefficients[i] == doctest::Approx(mu).epsilon(1e-9));
        }
    }
}

TEST_CASE("mixture rule for biorthogonal superpositions (elementwise)") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto [phi, psi] = harness::random_biorthogonal_pair(4, 4, 2, 2, seed);
        auto spec = harness::random_amplitudes(seed + 77, 0.05);
        auto gamma = states::superpose(spec, phi, psi);
        CHECK(gamma.norm_sq == doctest::Approx(1.0).epsilon(1e-9));

        auto p = states::coefficient_matrix(phi);
        auto q = states::coefficient_matrix(psi);
        auto g = states::coefficient_matrix(gamma.gamma);
        auto expected = p * p.adjoint() * std::norm(spec.alpha) +
                        q * q.adjoint() * std::norm(spec.beta);
        CHECK((g * g.adjoint() - expected).max_abs() <= 1e-10);
    }
}

TEST_CASE("state file round trip and validation") {
    auto bell = bell22();
    auto text = io::serialize_state(bell);
    auto back = io::parse_state(text);
    CHECK(states::fidelity(bell, back) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(io::parse_state("{not json"), BadStateFile);
    CHECK_THROWS_AS(io::parse_state(R"({"dim_a": 2, "dim_b": 2})"), BadStateFile);

    // Norm off by more than 1e-6: rejected unless renormalize is requested.
    const std::string off_norm =
        R"({"dim_a": 1, "dim_b": 2, "amplitudes": [[1.001, 0], [0, 0]]})";
    CHECK_THROWS_AS(io::parse_state(off_norm), BadStateFile);
    auto fixed = io::parse_state(off_norm, true);
    CHECK(std::abs(fixed.amplitudes()[0]) == doctest::Approx(1.0).epsilon(1e-12));
}

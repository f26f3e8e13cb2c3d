#include <doctest.h>

#include <cmath>

#include "negbounds/linalg.hpp"
#include "negbounds/rng.hpp"

using namespace negbounds;
using linalg::cplx;
using linalg::Matrix;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    rng::CounterRng gen(seed);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            auto [re, im] = gen.next_gaussian_pair();
            m(r, c) = cplx{re, im};
        }
    return m;
}

Matrix random_hermitian(std::size_t n, std::uint64_t seed) {
    Matrix g = random_matrix(n, n, seed);
    return (g + g.adjoint()) * 0.5;
}

// Gram-Schmidt columns of a random matrix: a Haar-ish unitary, good enough
// for invariance checks.
Matrix random_unitary(std::size_t n, std::uint64_t seed) {
    Matrix g = random_matrix(n, n, seed);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx ip{0.0, 0.0};
            for (std::size_t r = 0; r < n; ++r) ip += std::conj(g(r, prev)) * g(r, c);
            for (std::size_t r = 0; r < n; ++r) g(r, c) -= ip * g(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(g(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) g(r, c) /= norm;
    }
    return g;
}

// Independent 2x2 Hermitian eigenvalue oracle: roots of the characteristic
// polynomial.
std::pair<double, double> char_poly_eigs_2x2(const Matrix& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double off = std::abs(h(0, 1));
    const double mean = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    return {mean - disc, mean + disc};
}

}  // namespace

TEST_CASE("hermitian eigenvalues: pinned small cases") {
    Matrix pauli_x(2, 2, {0.0, 1.0, 1.0, 0.0});
    auto sp = linalg::hermitian_eigenvalues(pauli_x);
    REQUIRE(sp.values.size() == 2);
    CHECK(sp.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sp.values[1] == doctest::Approx(1.0).epsilon(1e-12));

    auto id = linalg::hermitian_eigenvalues(Matrix::identity(3));
    for (double v : id.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

    // [[2, i], [-i, 2]] -> {1, 3} by the characteristic polynomial.
    Matrix h(2, 2, {cplx{2, 0}, cplx{0, 1}, cplx{0, -1}, cplx{2, 0}});
    auto [lo, hi] = char_poly_eigs_2x2(h);
    CHECK(lo == doctest::Approx(1.0));
    CHECK(hi == doctest::Approx(3.0));
    auto got = linalg::hermitian_eigenvalues(h);
    CHECK(got.values[0] == doctest::Approx(lo).epsilon(1e-12));
    CHECK(got.values[1] == doctest::Approx(hi).epsilon(1e-12));
}

TEST_CASE("hermitian eigenvalues: random 2x2 against characteristic polynomial") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Matrix h = random_hermitian(2, seed);
        auto [lo, hi] = char_poly_eigs_2x2(h);
        auto sp = linalg::hermitian_eigenvalues(h);
        CHECK(sp.values[0] == doctest::Approx(lo).epsilon(1e-10));
        CHECK(sp.values[1] == doctest::Approx(hi).epsilon(1e-10));
    }
}

TEST_CASE("hermitian eigenvalues: errors and clipping") {
    CHECK_THROWS_AS(linalg::hermitian_eigenvalues(Matrix(2, 3)), NonSquare);
    CHECK_THROWS_AS(linalg::hermitian_eigenvalues(Matrix(0, 0)), EmptyMatrix);
    Matrix skew(2, 2, {cplx{0, 0}, cplx{1, 0}, cplx{2, 0}, cplx{0, 0}});
    CHECK_THROWS_AS(linalg::hermitian_eigenvalues(skew), NonHermitian);

    // Clip window: -1e-11 clips to zero, -1e-8 on a claimed-PSD input errors.
    Matrix tiny = Matrix::diag({-1e-11, 1.0});
    auto sp = linalg::hermitian_eigenvalues(tiny, true);
    CHECK(sp.values[0] == 0.0);
    Matrix bad = Matrix::diag({-1e-8, 1.0});
    CHECK_THROWS_AS(linalg::hermitian_eigenvalues(bad, true), NotPositiveSemidefinite);
}

TEST_CASE("eigenvalue sum equals trace") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Matrix h = random_hermitian(6, 1000 + seed);
        auto sp = linalg::hermitian_eigenvalues(h);
        CHECK(sp.sum() == doctest::Approx(h.trace().real()).epsilon(1e-10));
    }
}

TEST_CASE("singular values: pinned cases") {
    auto sv = linalg::singular_values(Matrix::diag({3.0, 4.0}));
    CHECK(sv[0] == doctest::Approx(4.0));
    CHECK(sv[1] == doctest::Approx(3.0));

    Matrix nilpotent(2, 2, {0.0, 2.0, 0.0, 0.0});
    sv = linalg::singular_values(nilpotent);
    CHECK(sv[0] == doctest::Approx(2.0));
    CHECK(sv[1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(linalg::singular_values(Matrix(0, 0)), EmptyMatrix);
}

TEST_CASE("singular values: squares match Gram eigenvalues") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Matrix m = random_matrix(3, 4, 2000 + seed);
        auto sv = linalg::singular_values(m);
        REQUIRE(sv.size() == 3);
        auto gram = linalg::hermitian_eigenvalues(m * m.adjoint(), true);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(sv[i] * sv[i] == doctest::Approx(gram.values[2 - i]).epsilon(1e-10));
    }
}

TEST_CASE("singular values: unitary invariance") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Matrix m = random_matrix(4, 4, 3000 + seed);
        Matrix u = random_unitary(4, 4000 + seed);
        Matrix v = random_unitary(4, 5000 + seed);
        auto sv = linalg::singular_values(m);
        auto sv2 = linalg::singular_values(u * m * v);
        for (std::size_t i = 0; i < sv.size(); ++i)
            CHECK(sv[i] == doctest::Approx(sv2[i]).epsilon(1e-9));
    }
}

TEST_CASE("trace norm: pinned and properties") {
    CHECK(linalg::trace_norm(Matrix::diag({1.0, -1.0})) == doctest::Approx(2.0));
    CHECK(linalg::trace_norm(random_unitary(2, 99)) == doctest::Approx(2.0).epsilon(1e-10));

    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Matrix m = random_matrix(3, 3, 6000 + seed);
        CHECK(linalg::trace_norm(m) ==
              doctest::Approx(linalg::trace_norm(m.adjoint())).epsilon(1e-10));
    }
}

TEST_CASE("trace norm of a Hermitian matrix is the absolute eigenvalue sum") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Matrix h = random_hermitian(5, 7000 + seed);
        double abs_sum = 0.0;
        for (double v : linalg::hermitian_eigenvalues(h).values) abs_sum += std::abs(v);
        CHECK(linalg::trace_norm(h) == doctest::Approx(abs_sum).epsilon(1e-9));
    }
}

TEST_CASE("determinism: identical input gives identical spectrum") {
    Matrix h = random_hermitian(8, 123);
    auto a = linalg::hermitian_eigenvalues(h);
    auto b = linalg::hermitian_eigenvalues(h);
    CHECK(a.values == b.values);
}

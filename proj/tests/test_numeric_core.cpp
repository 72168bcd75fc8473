// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "prelog/complex_matrix.hpp"
#include "prelog/errors.hpp"
#include "prelog/rng.hpp"
#include "prelog/svd.hpp"

using namespace prelog;

namespace {

double orthonormality_error(const ComplexMatrix &u) {
    const ComplexMatrix gram = u.adjoint() * u;
    ComplexMatrix eye = ComplexMatrix::identity(u.cols());
    return (gram - eye).max_abs();
}

double first_row_convention_error(const ComplexMatrix &u) {
    double worst = 0.0;
    for (std::size_t j = 0; j < u.cols(); ++j) {
        worst = std::max(worst, std::abs(u(0, j).imag()));
        worst = std::max(worst, std::max(0.0, -u(0, j).real()));
    }
    return worst;
}

} // namespace

TEST_CASE("svd of the identity") {
    const SvdTriple t = svd(ComplexMatrix::identity(2));
    CHECK(t.sigma.size() == 2);
    CHECK(t.sigma[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t.sigma[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((t.u - ComplexMatrix::identity(2)).max_abs() < 1e-12);
    CHECK((t.v - ComplexMatrix::identity(2)).max_abs() < 1e-12);
}

TEST_CASE("svd of a singular diagonal matrix") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 3.0;
    const SvdTriple t = svd(a);
    CHECK(t.sigma[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(t.sigma[1] == 0.0);
    CHECK(orthonormality_error(t.u) < 1e-10);
    CHECK(orthonormality_error(t.v) < 1e-10);
    CHECK((t.reconstruct() - a).frobenius_norm() < 1e-12);
}

TEST_CASE("svd reconstructs a random 4x3 matrix") {
    RngStream rng(11, 0);
    const ComplexMatrix a = sample_gaussian_matrix(4, 3, rng);
    const SvdTriple t = svd(a);
    CHECK((t.reconstruct() - a).frobenius_norm() / a.frobenius_norm() < 1e-10);
}

TEST_CASE("svd invariants over 10^4 random shapes up to 8x8") {
    RngStream rng(123, 0);
    for (int trial = 0; trial < 10'000; ++trial) {
        const std::size_t rows = 1 + rng.next_u64() % 8;
        const std::size_t cols = 1 + rng.next_u64() % 8;
        const ComplexMatrix a = sample_gaussian_matrix(rows, cols, rng);
        const SvdTriple t = svd(a);

        REQUIRE(t.sigma.size() == std::min(rows, cols));
        for (std::size_t i = 0; i + 1 < t.sigma.size(); ++i) {
            REQUIRE(t.sigma[i] >= t.sigma[i + 1]);
        }
        REQUIRE(t.sigma.back() >= 0.0);
        REQUIRE(orthonormality_error(t.u) < 1e-10);
        REQUIRE(orthonormality_error(t.v) < 1e-10);
        REQUIRE(first_row_convention_error(t.u) < 1e-10);
        REQUIRE((t.reconstruct() - a).frobenius_norm() / a.frobenius_norm() < 1e-10);
    }
}

TEST_CASE("svd is bit-deterministic") {
    RngStream rng(7, 3);
    const ComplexMatrix a = sample_gaussian_matrix(5, 4, rng);
    const SvdTriple t1 = svd(a);
    const SvdTriple t2 = svd(a);
    CHECK(t1.u == t2.u);
    CHECK(t1.v == t2.v);
    CHECK(t1.sigma == t2.sigma);
}

TEST_CASE("svd rejects non-finite input") {
    ComplexMatrix a(2, 2);
    a(1, 1) = cplx{std::nan(""), 0.0};
    CHECK_THROWS_AS(svd(a), ValidationError);
}

TEST_CASE("rank_estimate basics") {
    CHECK(rank_estimate(ComplexMatrix::identity(3), 1e-10) == 3);

    ComplexMatrix dup(2, 2);
    dup(0, 0) = dup(1, 0) = 1.0;
    dup(0, 1) = dup(1, 1) = 2.0;
    CHECK(rank_estimate(dup, 1e-10) == 1);

    RngStream rng(5, 0);
    const ComplexMatrix g = sample_gaussian_matrix(4, 2, rng);
    CHECK(rank_estimate(g, 1e-10) == 2);

    ComplexMatrix zero(3, 2);
    CHECK(rank_estimate(zero, 1e-10) == 0);

    CHECK_THROWS_AS(rank_estimate(zero, 0.0), ValidationError);
    CHECK_THROWS_AS(rank_estimate(zero, 1.0), ValidationError);
}

TEST_CASE("rank_estimate is scale invariant") {
    RngStream rng(17, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 2 + rng.next_u64() % 5;
        const std::size_t cols = 2 + rng.next_u64() % 5;
        ComplexMatrix a = sample_gaussian_matrix(rows, cols, rng);
        if (trial % 2 == 0 && rows >= 2) {
            for (std::size_t c = 0; c < cols; ++c) {
                a(1, c) = a(0, c); // force a deficient case half the time
            }
        }
        const cplx scale = (1e-3 + 10.0 * rng.next_unit()) *
                           std::polar(1.0, 6.28 * rng.next_unit());
        CHECK(rank_estimate(scale * a, 1e-9) == rank_estimate(a, 1e-9));
    }
}

TEST_CASE("gaussian sampling is deterministic per (seed, stream)") {
    RngStream a(42, 9);
    RngStream b(42, 9);
    CHECK(sample_gaussian_matrix(2, 2, a) == sample_gaussian_matrix(2, 2, b));

    RngStream c(42, 10);
    CHECK(sample_gaussian_matrix(2, 2, c) != sample_gaussian_matrix(2, 2, b));
}

TEST_CASE("gaussian moments match CN(0,1)") {
    RngStream rng(2024, 0);
    double power = 0.0;
    cplx mean{0.0, 0.0};
    const int draws = 100'000;
    for (int i = 0; i < draws; ++i) {
        const cplx w = rng.next_cgauss();
        power += std::norm(w);
        mean += w;
    }
    power /= draws;
    mean /= static_cast<double>(draws);
    CHECK(power > 0.98);
    CHECK(power < 1.02);
    CHECK(std::abs(mean) < 0.02);
}

TEST_CASE("sphere samples have exact norm") {
    RngStream rng(3, 1);
    const std::vector<cplx> x1 = sample_sphere(1, 2.0, rng);
    CHECK(std::abs(x1[0]) == doctest::Approx(2.0).epsilon(1e-14));

    const std::vector<cplx> x4 = sample_sphere(4, std::sqrt(4.0 * 100.0), rng);
    double nrm_sq = 0.0;
    for (const cplx &z : x4) {
        nrm_sq += std::norm(z);
    }
    CHECK(std::abs(nrm_sq - 400.0) < 1e-10);

    CHECK_THROWS_AS(sample_sphere(0, 1.0, rng), ValidationError);
    CHECK_THROWS_AS(sample_sphere(2, 0.0, rng), ValidationError);
}

TEST_CASE("sphere directions are uncorrelated across coordinates") {
    RngStream rng(8, 0);
    cplx cross{0.0, 0.0};
    const int draws = 100'000;
    for (int i = 0; i < draws; ++i) {
        const std::vector<cplx> x = sample_sphere(2, 1.0, rng);
        cross += x[0] * std::conj(x[1]);
    }
    cross /= static_cast<double>(draws);
    CHECK(std::abs(cross) < 0.02);
}

TEST_CASE("substreams replay deterministically") {
    const RngStream base(99, 0);
    RngStream s1 = base.substream(5);
    RngStream s2 = base.substream(5);
    for (int i = 0; i < 16; ++i) {
        CHECK(s1.next_u64() == s2.next_u64());
    }
}

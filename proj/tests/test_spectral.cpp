#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oba/algebra.hpp"
#include "oba/rigidity.hpp"
#include "oba/spectral.hpp"
#include "oba/volterra.hpp"
#include "oracles.hpp"

using namespace oba;

namespace {

MatrixOperator mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return MatrixOperator(m);
}

MatrixOperator gaussian(std::uint64_t seed, std::size_t dim) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = Complex(g(rng), g(rng));
    return MatrixOperator(m);
}

double max_modulus(const std::vector<Complex>& eigs) {
    double r = 0.0;
    for (auto e : eigs) r = std::max(r, std::abs(e));
    return r;
}

}  // namespace

TEST_CASE("spectral_norm closed forms") {
    CHECK(spectral_norm(mat2(3, 0, 0, -4)) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(spectral_norm(mat2(0, 2, 0, 0)) == doctest::Approx(2.0).epsilon(1e-14));

    const auto jordan = mat2(1, 1, 0, 1);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    Eigen::Matrix2cd j2 = jordan.entries();
    CHECK(oracle::spectral_norm_2x2(j2) == doctest::Approx(golden).epsilon(1e-15));
    CHECK(std::abs(spectral_norm(jordan) - golden) <= 1e-10 * golden);
    CHECK(std::abs(spectral_norm(jordan) - 1.6180339887) < 1e-10);
}

TEST_CASE("spectral_norm agrees with the Gram eigenvalue oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto a = gaussian(seed, 1 + seed % 12);
        const double expected = oracle::gram_spectral_norm(a.entries());
        CHECK(std::abs(spectral_norm(a) - expected) <= 1e-10 * expected);
    }
}

TEST_CASE("Lanczos path matches full SVD") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = gaussian(100 + seed, 40);
        const double svd = spectral_norm(a);
        const double lanczos = spectral_norm_lanczos(a);
        CHECK(lanczos <= svd * (1.0 + 1e-14));
        CHECK(std::abs(lanczos - svd) <= 1e-10 * svd);
    }
    CHECK(spectral_norm_lanczos(MatrixOperator::zero(5)) == 0.0);
    CHECK(spectral_norm_lanczos(MatrixOperator::identity(1)) == doctest::Approx(1.0));

    // Above the SVD threshold the power path is used; compare with the
    // Gram oracle on a resolvent matrix of that size.
    const auto t = resolvent_at_identity(volterra_matrix(600, QuadratureRule::LeftEndpoint));
    const double expected = oracle::gram_spectral_norm(t.entries());
    CHECK(std::abs(spectral_norm(t) - expected) <= 1e-10 * expected);
}

TEST_CASE("Lanczos path on n = 1024 resolvents") {
    // Reference norms from LAPACK full SVD (numpy.linalg.norm(T, 2)).
    const auto trap = resolvent_at_identity(volterra_matrix(1024, QuadratureRule::Trapezoid));
    CHECK(std::abs(spectral_norm(trap) - 0.9999999999997196) <= 1e-10);
    const auto left = resolvent_at_identity(volterra_matrix(1024, QuadratureRule::LeftEndpoint));
    CHECK(std::abs(spectral_norm(left) - 1.0004885197847704) <= 1e-10);
}

TEST_CASE("eigenvalues") {
    auto e = eigenvalues(mat2(1, 1, 0, 1));
    CHECK(e == std::vector<Complex>{1.0, 1.0});
    e = eigenvalues(mat2(2, 0, 0, 3));
    CHECK(e == std::vector<Complex>{2.0, 3.0});

    for (std::size_t n : {1u, 5u, 64u}) {
        const double h = 1.0 / static_cast<double>(n);
        for (const auto& lambda : eigenvalues(volterra_matrix(n, QuadratureRule::Trapezoid))) {
            CHECK(lambda == Complex(h / 2.0));
        }
        for (const auto& lambda : eigenvalues(volterra_matrix(n, QuadratureRule::LeftEndpoint))) {
            CHECK(lambda == Complex(0.0));
        }
    }

    // Non-triangular: rotation by 90 degrees has eigenvalues +-i.
    const auto rot = eigenvalues(mat2(0, -1, 1, 0));
    CHECK(multiset_distance(rot, {Complex(0, 1), Complex(0, -1)}) < 1e-14);
}

TEST_CASE("product_spectrum") {
    auto s = product_spectrum({mat2(2, 0, 0, 3), 5.0});
    CHECK(multiset_distance(s, {2.0, 3.0, 5.0}) == 0.0);

    const std::size_t n = 16;
    const double h = 1.0 / n;
    const auto t = resolvent_at_identity(volterra_matrix(n, QuadratureRule::Trapezoid));
    s = product_spectrum({t, 1.0});
    REQUIRE(s.size() == n + 1);
    std::vector<Complex> expected(n, 1.0 / (1.0 + h / 2.0));
    expected.push_back(1.0);
    CHECK(multiset_distance(s, expected) <= 1e-14);

    s = product_spectrum(unit_element(2));
    CHECK(s == std::vector<Complex>{1.0, 1.0, 1.0});
}

TEST_CASE("cluster_radius") {
    CHECK(cluster_radius({1.0, 1.0, 1.0}, 1.0) == 0.0);
    const double h = 1.0 / 1024;
    const double lam = 1.0 / (1.0 + h / 2.0);
    CHECK(cluster_radius({lam}, 1.0) == doctest::Approx((h / 2.0) / (1.0 + h / 2.0)).epsilon(1e-12));
    CHECK(cluster_radius({2.0, 3.0, 5.0}, 1.0) == 4.0);
    CHECK_THROWS_AS(cluster_radius({}, 1.0), UsageError);
}

TEST_CASE("gelfand_radius") {
    auto g = gelfand_radius(mat2(0, 1, 0, 0), 2);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == doctest::Approx(1.0));
    CHECK(g[1] == 0.0);

    for (double v : gelfand_radius(MatrixOperator::identity(2), 10)) CHECK(v == doctest::Approx(1.0));

    ComplexMatrix two(1, 1);
    two << 2.0;
    for (double v : gelfand_radius(MatrixOperator(two), 3)) CHECK(v == doctest::Approx(2.0));

    // Large norms stay finite thanks to the log-scale accumulation.
    const auto big = gelfand_radius(1e200 * MatrixOperator::identity(3), 8);
    CHECK(big.back() == doctest::Approx(1e200));

    CHECK_THROWS_AS(gelfand_radius(MatrixOperator::identity(2), 0), UsageError);

    const std::size_t n = 12;
    const auto v = gelfand_radius(volterra_matrix(n, QuadratureRule::LeftEndpoint), n);
    CHECK(v[n - 1] == 0.0);
    CHECK(v[n - 2] > 0.0);
}

TEST_CASE("multiset_distance") {
    CHECK(multiset_distance({1.0, 2.0}, {2.0, 1.0}) == 0.0);
    CHECK(std::isinf(multiset_distance({1.0}, {1.0, 1.0})));
    CHECK(multiset_distance({1.0, 1.0}, {1.0, 1.5}) == doctest::Approx(0.5));
}

TEST_CASE("property: submultiplicativity and normal matrices") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t dim = 2 + seed % 7;
        const auto a = gaussian(2 * seed, dim);
        const auto b = gaussian(2 * seed + 1, dim);
        CHECK(spectral_norm(a * b) <= spectral_norm(a) * spectral_norm(b) + 1e-9);

        // U D U^H is normal; its norm is the largest |eigenvalue|.
        const auto u = random_unitary(seed, dim);
        ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g;
        for (std::size_t i = 0; i < dim; ++i) d(i, i) = Complex(g(rng), g(rng));
        const auto normal = u * MatrixOperator(d) * u.adjoint();
        CHECK(std::abs(spectral_norm(normal) - max_modulus(eigenvalues(normal))) <= 1e-9);
    }
}

TEST_CASE("property: Gelfand formula at k = 64 on random 8x8 matrices") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto a = gaussian(1000 + seed, 8);
        const double rho = max_modulus(eigenvalues(a));
        const double g64 = gelfand_radius(a, 64).back();
        CHECK(std::abs(g64 - rho) <= 0.1 * rho + 1e-9);
    }
}

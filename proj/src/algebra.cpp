#include "oba/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "oba/spectral.hpp"

namespace oba {

namespace {

void require_same_dim(const ProductElement& x, const ProductElement& y) {
    if (x.dim() != y.dim()) {
        throw UsageError("product elements of different dimension: " + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()));
    }
}

ComplexMatrix gaussian_matrix(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss;
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return m;
}

}  // namespace

ProductElement unit_element(std::size_t dim) {
    return {MatrixOperator::identity(dim), Complex(1.0, 0.0)};
}

ProductElement zero_element(std::size_t dim) {
    return {MatrixOperator::zero(dim), Complex{}};
}

ProductElement operator+(const ProductElement& x, const ProductElement& y) {
    require_same_dim(x, y);
    return {x.op + y.op, x.scalar + y.scalar};
}

ProductElement operator-(const ProductElement& x, const ProductElement& y) {
    require_same_dim(x, y);
    return {x.op - y.op, x.scalar - y.scalar};
}

ProductElement operator-(const ProductElement& x) { return {-x.op, -x.scalar}; }

ProductElement operator*(Complex s, const ProductElement& x) { return {s * x.op, s * x.scalar}; }

ProductElement prod_mul(const ProductElement& x, const ProductElement& y) {
    require_same_dim(x, y);
    return {x.op * y.op, x.scalar * y.scalar};
}

double prod_norm(const ProductElement& x) {
    return std::max(spectral_norm(x.op), std::abs(x.scalar));
}

ProductElement prod_involution(const ProductElement& x) {
    return {x.op.adjoint(), std::conj(x.scalar)};
}

bool cone_contains_norm(double op_norm, Complex scalar, const ToleranceConfig& tol) {
    return std::abs(scalar.imag()) <= tol.abs_tol && op_norm <= scalar.real() + tol.abs_tol;
}

bool cone_contains(const ProductElement& x, const ToleranceConfig& tol) {
    if (std::abs(x.scalar.imag()) > tol.abs_tol) return false;
    return cone_contains_norm(spectral_norm(x.op), x.scalar, tol);
}

bool cone_leq(const ProductElement& x, const ProductElement& y, const ToleranceConfig& tol) {
    return cone_contains(y - x, tol);
}

bool geq_unit(const ProductElement& x, const ToleranceConfig& tol) {
    return cone_leq(unit_element(x.dim()), x, tol);
}

ProductElement random_cone_element(std::uint64_t seed, std::size_t dim, double scale) {
    if (!std::isfinite(scale) || scale < 0.0) {
        throw UsageError("random_cone_element: scale must be finite and >= 0");
    }
    if (dim == 0) throw UsageError("random_cone_element: dim must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    ComplexMatrix m = gaussian_matrix(rng, dim);
    const double target = scale * unit(rng);
    const double raw = spectral_norm(MatrixOperator(m));
    m *= (raw > 0.0) ? target / raw : 0.0;
    MatrixOperator op(std::move(m));

    const double op_norm = spectral_norm(op);
    const bool boundary = unit(rng) < 0.25;
    const double upper = std::max(scale, op_norm);
    const double xi = boundary ? op_norm : op_norm + unit(rng) * (upper - op_norm);
    return {std::move(op), Complex(xi, 0.0)};
}

ProductElement random_product_element(std::uint64_t seed, std::size_t dim, double scale) {
    if (dim == 0) throw UsageError("random_product_element: dim must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    ComplexMatrix m = gaussian_matrix(rng, dim) * (scale / std::sqrt(static_cast<double>(dim)));
    const bool real_scalar = unit(rng) < 0.5;
    const Complex xi(scale * gauss(rng), real_scalar ? 0.0 : scale * gauss(rng));
    return {MatrixOperator(std::move(m)), xi};
}

}  // namespace oba

#include "oba/rigidity.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/QR>

#include "oba/spectral.hpp"

namespace oba {

MatrixOperator random_strict_nilpotent(std::uint64_t seed, std::size_t dim, double scale) {
    if (dim < 2) throw UsageError("random_strict_nilpotent requires dim >= 2");
    if (!std::isfinite(scale) || scale <= 0.0) {
        throw UsageError("random_strict_nilpotent requires a positive finite scale");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 1; j < n; ++j) {
        for (Eigen::Index i = 0; i < j; ++i) m(i, j) = std::polar(scale * unit(rng), phase(rng));
    }
    // Pin one strict position to a modulus in [scale/2, scale] so N != 0.
    const std::size_t positions = dim * (dim - 1) / 2;
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, positions - 1)(rng);
    for (Eigen::Index j = 1; j < n; ++j) {
        if (pick < static_cast<std::size_t>(j)) {
            m(static_cast<Eigen::Index>(pick), j) =
                std::polar(scale * (0.5 + 0.5 * unit(rng)), phase(rng));
            break;
        }
        pick -= static_cast<std::size_t>(j);
    }
    return MatrixOperator(std::move(m));
}

MatrixOperator random_unitary(std::uint64_t seed, std::size_t dim) {
    if (dim == 0) throw UsageError("random_unitary requires dim >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) z(i, j) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < n; ++k) {
        const double mod = std::abs(r(k, k));
        if (mod > 0.0) q.col(k) *= r(k, k) / mod;
    }
    return MatrixOperator(std::move(q));
}

RigidityVerdict rigidity_gap(const MatrixOperator& a, const ToleranceConfig& tol) {
    RigidityVerdict v;
    v.norm_excess = spectral_norm(a) - 1.0;
    v.deviation = spectral_norm(a - MatrixOperator::identity(a.dim()));
    v.is_identity = v.deviation <= tol.abs_tol;
    return v;
}

RigidityVerdict check_rigidity(const MatrixOperator& a, const ToleranceConfig& tol) {
    tol.validate();
    const double radius = cluster_radius(eigenvalues(a), Complex(1.0, 0.0));
    if (radius > tol.abs_tol) {
        std::ostringstream msg;
        msg << "spectrum hypothesis fails: eigenvalues lie up to " << radius << " from 1";
        throw PreconditionError("spectrum", msg.str());
    }
    const double norm = spectral_norm(a);
    if (norm > 1.0 + tol.abs_tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "norm hypothesis fails: ||A|| = " << norm << " > 1";
        throw PreconditionError("norm", msg.str());
    }
    return rigidity_gap(a, tol);
}

}  // namespace oba

#pragma once

#include <cstdint>

#include "oba/matrix.hpp"

namespace oba {

/// How far a matrix is from being the identity, in norm and in distance.
struct RigidityVerdict {
    double norm_excess = 0.0;  // ||A|| - 1
    double deviation = 0.0;    // ||A - I||
    bool is_identity = false;  // deviation <= abs_tol
};

/// Strictly upper-triangular matrix with complex entries of modulus <= scale,
/// at least one of modulus >= scale/2. Throws UsageError if dim < 2 or scale
/// is not a positive finite number.
MatrixOperator random_strict_nilpotent(std::uint64_t seed, std::size_t dim, double scale);

/// Haar-distributed unitary (QR of a complex Gaussian with phase fix-up).
MatrixOperator random_unitary(std::uint64_t seed, std::size_t dim);

RigidityVerdict rigidity_gap(const MatrixOperator& a, const ToleranceConfig& tol = {});

/// Requires sigma(A) within abs_tol of {1} and ||A|| <= 1 + abs_tol; a violated
/// hypothesis throws PreconditionError with clause "spectrum" or "norm".
/// When both hold, a finite-dimensional A must equal I; the returned verdict
/// records the measured gaps and whether that conclusion held numerically.
RigidityVerdict check_rigidity(const MatrixOperator& a, const ToleranceConfig& tol = {});

}  // namespace oba

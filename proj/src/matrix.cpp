#include "oba/matrix.hpp"

#include <cmath>

namespace oba {

namespace {

void require_same_dim(const MatrixOperator& a, const MatrixOperator& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw UsageError(std::string("dimension mismatch in ") + op + ": " +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

void ToleranceConfig::validate() const {
    if (!std::isfinite(abs_tol) || abs_tol < 0.0) {
        throw UsageError("abs_tol must be finite and >= 0");
    }
    if (!std::isfinite(rel_tol) || rel_tol < 0.0) {
        throw UsageError("rel_tol must be finite and >= 0");
    }
}

MatrixOperator::MatrixOperator(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw UsageError("MatrixOperator requires a non-empty square matrix, got " +
                         std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
    }
    if (!entries_.allFinite()) {
        throw UsageError("MatrixOperator entries must be finite");
    }
}

MatrixOperator MatrixOperator::identity(std::size_t dim) {
    if (dim == 0) throw UsageError("dimension must be >= 1");
    const auto n = static_cast<Eigen::Index>(dim);
    return MatrixOperator(ComplexMatrix::Identity(n, n), Unchecked{});
}

MatrixOperator MatrixOperator::zero(std::size_t dim) {
    if (dim == 0) throw UsageError("dimension must be >= 1");
    const auto n = static_cast<Eigen::Index>(dim);
    return MatrixOperator(ComplexMatrix::Zero(n, n), Unchecked{});
}

MatrixOperator MatrixOperator::adjoint() const {
    return MatrixOperator(entries_.adjoint(), Unchecked{});
}

bool MatrixOperator::is_lower_triangular() const {
    const Eigen::Index n = entries_.rows();
    for (Eigen::Index j = 1; j < n; ++j) {
        for (Eigen::Index i = 0; i < j; ++i) {
            if (entries_(i, j) != Complex{}) return false;
        }
    }
    return true;
}

bool MatrixOperator::is_upper_triangular() const {
    const Eigen::Index n = entries_.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j + 1; i < n; ++i) {
            if (entries_(i, j) != Complex{}) return false;
        }
    }
    return true;
}

MatrixOperator operator+(const MatrixOperator& a, const MatrixOperator& b) {
    require_same_dim(a, b, "addition");
    return MatrixOperator(a.entries_ + b.entries_, MatrixOperator::Unchecked{});
}

MatrixOperator operator-(const MatrixOperator& a, const MatrixOperator& b) {
    require_same_dim(a, b, "subtraction");
    return MatrixOperator(a.entries_ - b.entries_, MatrixOperator::Unchecked{});
}

MatrixOperator operator*(const MatrixOperator& a, const MatrixOperator& b) {
    require_same_dim(a, b, "multiplication");
    return MatrixOperator(a.entries_ * b.entries_, MatrixOperator::Unchecked{});
}

MatrixOperator operator*(Complex s, const MatrixOperator& a) {
    return MatrixOperator(s * a.entries_, MatrixOperator::Unchecked{});
}

MatrixOperator operator-(const MatrixOperator& a) {
    return MatrixOperator(-a.entries_, MatrixOperator::Unchecked{});
}

}  // namespace oba

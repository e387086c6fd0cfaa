#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace oba {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Bad arguments from the caller: dimension mismatch, out-of-range sizes.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to produce a result (singular system, no convergence).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical hypothesis required by an operation does not hold.
class PreconditionError : public std::domain_error {
public:
    PreconditionError(std::string clause, const std::string& what)
        : std::domain_error(what), clause_(std::move(clause)) {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

/// Absolute/relative tolerances for order predicates and identities.
struct ToleranceConfig {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;

    /// Throws UsageError unless both tolerances are finite and nonnegative.
    void validate() const;
};

/// Dense complex square matrix; an element of the operator algebra B.
class MatrixOperator {
public:
    /// Throws UsageError for non-square, empty or non-finite input.
    explicit MatrixOperator(ComplexMatrix entries);

    static MatrixOperator identity(std::size_t dim);
    static MatrixOperator zero(std::size_t dim);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const ComplexMatrix& entries() const noexcept { return entries_; }
    Complex operator()(std::size_t i, std::size_t j) const {
        return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    MatrixOperator adjoint() const;

    bool is_lower_triangular() const;
    bool is_upper_triangular() const;

    double frobenius_norm() const { return entries_.norm(); }

    friend MatrixOperator operator+(const MatrixOperator& a, const MatrixOperator& b);
    friend MatrixOperator operator-(const MatrixOperator& a, const MatrixOperator& b);
    friend MatrixOperator operator*(const MatrixOperator& a, const MatrixOperator& b);
    friend MatrixOperator operator*(Complex s, const MatrixOperator& a);
    friend MatrixOperator operator-(const MatrixOperator& a);

    friend bool operator==(const MatrixOperator& a, const MatrixOperator& b) {
        return a.entries_ == b.entries_;
    }

private:
    struct Unchecked {};
    MatrixOperator(ComplexMatrix entries, Unchecked) : entries_(std::move(entries)) {}

    ComplexMatrix entries_;
};

}  // namespace oba

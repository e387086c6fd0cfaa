#pragma once

#include <cstddef>
#include <vector>

#include "oba/algebra.hpp"
#include "oba/matrix.hpp"

namespace oba {

/// Eigenvalues of a matrix together with how tightly they cluster around a point.
struct SpectrumReport {
    std::vector<Complex> eigenvalues;
    Complex center;
    double cluster_radius = 0.0;
};

/// Matrices up to this size use a full SVD; larger ones use Lanczos on the
/// Gram operator A^H A.
inline constexpr std::size_t kFullSvdMaxDim = 512;

/// Largest singular value.
double spectral_norm(const MatrixOperator& a);

/// Lanczos estimate of the largest singular value, exposed for testing the
/// large-dimension path directly. Stops once eight further steps change the
/// top Ritz value of A^H A by at most tol (relative); max_steps = 0 means
/// min(dim, 600).
/// Converges from below.
double spectral_norm_lanczos(const MatrixOperator& a, double tol = 1e-12, std::size_t max_steps = 0);

/// All eigenvalues with algebraic multiplicity. Triangular inputs are read off
/// the diagonal; everything else goes through a Hessenberg/Schur eigensolver.
/// Throws ComputationError if the iteration fails to converge.
std::vector<Complex> eigenvalues(const MatrixOperator& a);

/// sigma((a, xi)) = sigma(a) with xi adjoined.
std::vector<Complex> product_spectrum(const ProductElement& x);

/// diag(a, xi) as a (dim+1)-square matrix; its eigenvalues must match
/// product_spectrum(x).
MatrixOperator block_embedding(const ProductElement& x);

/// max |lambda - center|. Throws UsageError on an empty set.
double cluster_radius(const std::vector<Complex>& eigs, Complex center);

SpectrumReport spectrum_report(const MatrixOperator& a, Complex center);

/// (||A^k||^{1/k}) for k = 1..k_max, accumulated in log scale.
std::vector<double> gelfand_radius(const MatrixOperator& a, std::size_t k_max);

/// Greedy nearest-neighbour pairing of two multisets; returns the largest
/// paired distance, or +inf when the sizes differ.
double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace oba

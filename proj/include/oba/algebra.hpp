#pragma once

// The product algebra B x C: pairs (a, xi) of an operator and a scalar with
// componentwise multiplication, max norm and the ice-cream cone
//   K = { (a, xi) : ||a|| <= xi }.

#include <cstdint>

#include "oba/matrix.hpp"

namespace oba {

struct ProductElement {
    MatrixOperator op;
    Complex scalar;

    std::size_t dim() const noexcept { return op.dim(); }
};

/// The unit (I, 1).
ProductElement unit_element(std::size_t dim);
ProductElement zero_element(std::size_t dim);

ProductElement operator+(const ProductElement& x, const ProductElement& y);
ProductElement operator-(const ProductElement& x, const ProductElement& y);
ProductElement operator-(const ProductElement& x);
ProductElement operator*(Complex s, const ProductElement& x);

/// (a, xi) . (b, eta) = (ab, xi eta). Throws UsageError on mismatched dims.
ProductElement prod_mul(const ProductElement& x, const ProductElement& y);

/// max(||a||, |xi|).
double prod_norm(const ProductElement& x);

/// (a^*, conj(xi)).
ProductElement prod_involution(const ProductElement& x);

/// Membership in K. The scalar must be real up to abs_tol, and
/// ||a|| <= Re xi + abs_tol.
bool cone_contains(const ProductElement& x, const ToleranceConfig& tol = {});

/// The membership test of cone_contains for an element whose operator norm
/// is already known.
bool cone_contains_norm(double op_norm, Complex scalar, const ToleranceConfig& tol = {});

/// x <= y iff y - x in K.
bool cone_leq(const ProductElement& x, const ProductElement& y, const ToleranceConfig& tol = {});

/// (I, 1) <= x.
bool geq_unit(const ProductElement& x, const ToleranceConfig& tol = {});

/// Deterministic generator of cone elements. Entries of `op` are complex
/// Gaussian, rescaled to a norm drawn from [0, scale]; the scalar is drawn
/// from [||op||, scale], and sits exactly on the boundary ||op|| = xi in
/// roughly a quarter of the draws.
ProductElement random_cone_element(std::uint64_t seed, std::size_t dim, double scale);

/// Arbitrary (not necessarily positive) element with Gaussian entries and a
/// complex scalar; real scalar in about half the draws.
ProductElement random_product_element(std::uint64_t seed, std::size_t dim, double scale);

}  // namespace oba

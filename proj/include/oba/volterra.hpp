#pragma once

// Finite-grid rendering of the Volterra operator (Vf)(x) = int_0^x f(y) dy on
// L^2[0,1] and of T = (I + V)^{-1}.
//
// Two quadrature rules are offered and neither is faithful in every respect:
//   LeftEndpoint  strictly lower triangular, so sigma(V_n) = {0} and
//                 sigma(T_n) = {1} exactly, but ||T_n|| > 1.
//   Trapezoid     V_n + V_n^T = h * ones is positive semidefinite, so
//                 ||T_n|| <= 1, but sigma(T_n) = {1/(1 + h/2)}.
// The norm defect of LeftEndpoint and the spectral defect of Trapezoid both
// vanish as n grows.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oba/matrix.hpp"

namespace oba {

enum class QuadratureRule { LeftEndpoint, Trapezoid };

std::string_view to_string(QuadratureRule rule);
/// Accepts "left", "left-endpoint", "leftendpoint", "trapezoid" (case-insensitive).
std::optional<QuadratureRule> parse_rule(std::string_view text);

inline constexpr std::size_t kMaxGridSize = 4096;

struct WitnessReport {
    std::size_t n = 0;
    QuadratureRule rule = QuadratureRule::Trapezoid;
    double h = 0.0;
    double norm_T = 0.0;
    double xi_used = 1.0;
    bool cone_member = false;
    double cluster_radius = 0.0;
    double deviation = 0.0;
    bool geq_unit = true;
    double norm_excess = 0.0;
    /// ||(I + V_n) T_n - I||
    double resolvent_residual = 0.0;
};

struct ConvergenceRow {
    std::size_t n = 0;
    double h = 0.0;
    double norm_T = 0.0;
    double cluster_radius = 0.0;
    double deviation = 0.0;
    double norm_excess = 0.0;
};

/// Real lower-triangular quadrature matrix on nodes x_i = i/n, i = 1..n.
/// Throws UsageError unless 1 <= n <= kMaxGridSize.
MatrixOperator volterra_matrix(std::size_t n, QuadratureRule rule);

/// (I + V)^{-1}. Lower-triangular V is inverted column by column with forward
/// substitution; anything else goes through a pivoted LU solve.
/// Throws ComputationError if I + V is singular.
MatrixOperator resolvent_at_identity(const MatrixOperator& v);

/// ||(I + V) T - I||
double resolvent_residual(const MatrixOperator& v, const MatrixOperator& t);

WitnessReport build_witness(std::size_t n, QuadratureRule rule, const ToleranceConfig& tol = {});

/// One row per distinct n, ascending.
std::vector<ConvergenceRow> convergence_study(const std::vector<std::size_t>& ns, QuadratureRule rule,
                                              const ToleranceConfig& tol = {});

/// 1/(1 + h/2) <= norm_T <= 1 + upper_slack; only meaningful for Trapezoid rows.
bool trapezoid_sandwich_holds(const ConvergenceRow& row, double upper_slack = 1e-10);

/// a_k = k ||(T_n - I)^k||^{1/k}, k = 1..k_max, with T_n built from the
/// LeftEndpoint rule. Throws UsageError unless 1 <= k_max < n.
std::vector<double> growth_diagnostic(std::size_t n, std::size_t k_max);

}  // namespace oba

#include "oba/volterra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <Eigen/LU>

#include "oba/algebra.hpp"
#include "oba/spectral.hpp"

namespace oba {

namespace {

void require_grid_size(std::size_t n) {
    if (n < 1 || n > kMaxGridSize) {
        throw UsageError("grid size n must lie in [1, " + std::to_string(kMaxGridSize) + "], got " +
                         std::to_string(n));
    }
}

ComplexMatrix forward_substitution_inverse(const ComplexMatrix& m) {
    const Eigen::Index n = m.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        if (m(k, k) == Complex{}) {
            throw ComputationError("I + V is singular: zero pivot at row " + std::to_string(k));
        }
    }
    ComplexMatrix inv = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        auto col = inv.col(j);
        col(j) = Complex(1.0, 0.0);
        for (Eigen::Index k = j; k < n; ++k) {
            col(k) /= m(k, k);
            const Eigen::Index rest = n - k - 1;
            if (rest > 0) col.segment(k + 1, rest) -= m.col(k).segment(k + 1, rest) * col(k);
        }
    }
    return inv;
}

}  // namespace

std::string_view to_string(QuadratureRule rule) {
    switch (rule) {
        case QuadratureRule::LeftEndpoint: return "left-endpoint";
        case QuadratureRule::Trapezoid: return "trapezoid";
    }
    return "unknown";
}

std::optional<QuadratureRule> parse_rule(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "left" || lower == "left-endpoint" || lower == "leftendpoint" ||
        lower == "left_endpoint") {
        return QuadratureRule::LeftEndpoint;
    }
    if (lower == "trapezoid" || lower == "trap") return QuadratureRule::Trapezoid;
    return std::nullopt;
}

MatrixOperator volterra_matrix(std::size_t n, QuadratureRule rule) {
    require_grid_size(n);
    const auto size = static_cast<Eigen::Index>(n);
    const double h = 1.0 / static_cast<double>(n);
    ComplexMatrix m = ComplexMatrix::Zero(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
        for (Eigen::Index i = j + 1; i < size; ++i) m(i, j) = h;
    }
    if (rule == QuadratureRule::Trapezoid) {
        m.diagonal().setConstant(Complex(h / 2.0, 0.0));
    }
    return MatrixOperator(std::move(m));
}

MatrixOperator resolvent_at_identity(const MatrixOperator& v) {
    const auto n = static_cast<Eigen::Index>(v.dim());
    const ComplexMatrix m = ComplexMatrix::Identity(n, n) + v.entries();
    if (v.is_lower_triangular()) {
        return MatrixOperator(forward_substitution_inverse(m));
    }
    Eigen::FullPivLU<ComplexMatrix> lu(m);
    if (!lu.isInvertible()) {
        throw ComputationError("I + V is singular (rank " + std::to_string(lu.rank()) + " of " +
                               std::to_string(n) + ")");
    }
    return MatrixOperator(lu.inverse());
}

double resolvent_residual(const MatrixOperator& v, const MatrixOperator& t) {
    const auto id = MatrixOperator::identity(v.dim());
    return spectral_norm((id + v) * t - id);
}

WitnessReport build_witness(std::size_t n, QuadratureRule rule, const ToleranceConfig& tol) {
    tol.validate();
    const MatrixOperator v = volterra_matrix(n, rule);
    const MatrixOperator t = resolvent_at_identity(v);
    const auto id = MatrixOperator::identity(n);

    WitnessReport r;
    r.n = n;
    r.rule = rule;
    r.h = 1.0 / static_cast<double>(n);
    r.norm_T = spectral_norm(t);
    r.xi_used = std::max(1.0, r.norm_T);
    r.cone_member = cone_contains_norm(r.norm_T, r.xi_used, tol);
    r.cluster_radius = cluster_radius(eigenvalues(t), Complex(1.0, 0.0));
    // (T, xi) - (I, 1) = (T - I, xi - 1)
    r.deviation = spectral_norm(t - id);
    r.geq_unit = cone_contains_norm(r.deviation, r.xi_used - 1.0, tol);
    r.norm_excess = r.norm_T - 1.0;
    r.resolvent_residual = resolvent_residual(v, t);
    return r;
}

std::vector<ConvergenceRow> convergence_study(const std::vector<std::size_t>& ns, QuadratureRule rule,
                                              const ToleranceConfig& tol) {
    if (ns.empty()) throw UsageError("convergence_study needs at least one grid size");
    for (std::size_t n : ns) require_grid_size(n);

    std::vector<std::size_t> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<ConvergenceRow> rows;
    rows.reserve(sorted.size());
    for (std::size_t n : sorted) {
        const WitnessReport w = build_witness(n, rule, tol);
        rows.push_back({w.n, w.h, w.norm_T, w.cluster_radius, w.deviation, w.norm_excess});
    }
    return rows;
}

bool trapezoid_sandwich_holds(const ConvergenceRow& row, double upper_slack) {
    const double lower = 1.0 / (1.0 + row.h / 2.0);
    return lower <= row.norm_T && row.norm_T <= 1.0 + upper_slack;
}

std::vector<double> growth_diagnostic(std::size_t n, std::size_t k_max) {
    require_grid_size(n);
    if (k_max < 1 || k_max >= n) {
        throw UsageError("growth_diagnostic requires 1 <= k_max < n (n=" + std::to_string(n) +
                         ", k_max=" + std::to_string(k_max) + ")");
    }
    const MatrixOperator t = resolvent_at_identity(volterra_matrix(n, QuadratureRule::LeftEndpoint));
    std::vector<double> a = gelfand_radius(t - MatrixOperator::identity(n), k_max);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] *= static_cast<double>(k + 1);
    return a;
}

}  // namespace oba

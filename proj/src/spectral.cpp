#include "oba/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace oba {

double spectral_norm(const MatrixOperator& a) {
    if (a.dim() > kFullSvdMaxDim) {
        return spectral_norm_lanczos(a);
    }
    if (a.dim() == 1) return std::abs(a(0, 0));
    Eigen::BDCSVD<ComplexMatrix> svd(a.entries());
    return svd.singularValues()(0);
}

double spectral_norm_lanczos(const MatrixOperator& a, double tol, std::size_t max_steps) {
    const ComplexMatrix& m = a.entries();
    const Eigen::Index n = m.rows();
    if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    if (max_steps == 0) max_steps = std::min<std::size_t>(a.dim(), 600);
    max_steps = std::min<std::size_t>(max_steps, a.dim());
    const auto steps = static_cast<Eigen::Index>(max_steps);

    // Lanczos on the Gram operator G = A^H A with full reorthogonalisation.
    // The top of the singular spectrum of the resolvents is tightly
    // clustered, which plain power iteration cannot resolve.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss;
    ComplexMatrix basis(n, steps);
    ComplexVector q(n);
    for (Eigen::Index i = 0; i < n; ++i) q(i) = Complex(gauss(rng), gauss(rng));
    basis.col(0) = q.normalized();

    std::vector<double> alpha;
    std::vector<double> beta;
    ComplexVector w(n);
    ComplexVector av(n);
    double theta = 0.0;
    for (Eigen::Index k = 0; k < steps; ++k) {
        av.noalias() = m * basis.col(k);
        w.noalias() = m.adjoint() * av;
        alpha.push_back(basis.col(k).dot(w).real());
        for (int pass = 0; pass < 2; ++pass) {
            const auto done = basis.leftCols(k + 1);
            w -= done * (done.adjoint() * w);
        }
        const double b = w.norm();

        const bool last = k + 1 == steps || b == 0.0;
        if (last || (k + 1) % 8 == 0) {
            const auto size = static_cast<Eigen::Index>(alpha.size());
            Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), size);
            Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), size - 1);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
            tri.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
            const double next = tri.eigenvalues()(size - 1);
            // Ritz values increase monotonically towards lambda_max(G); stop
            // once eight more steps no longer move the estimate.
            const bool stalled = std::abs(next - theta) <= tol * next;
            theta = next;
            if (last || stalled) break;
        }
        beta.push_back(b);
        basis.col(k + 1) = w / b;
    }
    return std::sqrt(std::max(0.0, theta));
}

std::vector<Complex> eigenvalues(const MatrixOperator& a) {
    std::vector<Complex> out;
    out.reserve(a.dim());
    if (a.is_lower_triangular() || a.is_upper_triangular()) {
        for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a(i, i));
        return out;
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a.entries(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigenvalue iteration did not converge (dim=" << a.dim()
            << ", max |entry|=" << a.entries().cwiseAbs().maxCoeff() << ")";
        throw ComputationError(msg.str());
    }
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) out.push_back(ev(i));
    return out;
}

std::vector<Complex> product_spectrum(const ProductElement& x) {
    std::vector<Complex> out = eigenvalues(x.op);
    out.push_back(x.scalar);
    return out;
}

MatrixOperator block_embedding(const ProductElement& x) {
    const auto n = static_cast<Eigen::Index>(x.dim());
    ComplexMatrix m = ComplexMatrix::Zero(n + 1, n + 1);
    m.topLeftCorner(n, n) = x.op.entries();
    m(n, n) = x.scalar;
    return MatrixOperator(std::move(m));
}

double cluster_radius(const std::vector<Complex>& eigs, Complex center) {
    if (eigs.empty()) throw UsageError("cluster_radius of an empty eigenvalue set");
    double r = 0.0;
    for (const Complex& lambda : eigs) r = std::max(r, std::abs(lambda - center));
    return r;
}

SpectrumReport spectrum_report(const MatrixOperator& a, Complex center) {
    SpectrumReport report;
    report.eigenvalues = eigenvalues(a);
    report.center = center;
    report.cluster_radius = cluster_radius(report.eigenvalues, center);
    return report;
}

std::vector<double> gelfand_radius(const MatrixOperator& a, std::size_t k_max) {
    if (k_max == 0) throw UsageError("gelfand_radius requires k_max >= 1");
    std::vector<double> out;
    out.reserve(k_max);

    // With A = c B, ||A^k||^{1/k} = c ||B^k||^{1/k}. power holds
    // B^k / exp(log_norm), renormalised each step so nothing overflows.
    const double c = a.entries().cwiseAbs().maxCoeff();
    if (c == 0.0) return std::vector<double>(k_max, 0.0);
    const ComplexMatrix b = a.entries() / c;
    ComplexMatrix power = b;
    double log_norm = 0.0;
    bool vanished = false;
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (k > 1 && !vanished) power = b * power;
        const double s = vanished ? 0.0 : spectral_norm(MatrixOperator(power));
        if (s == 0.0) {
            vanished = true;
            out.push_back(0.0);
            continue;
        }
        log_norm += std::log(s);
        power /= s;
        out.push_back(c * std::exp(log_norm / static_cast<double>(k)));
    }
    return out;
}

double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& x : a) {
        std::size_t best = b.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_dist);
    }
    return worst;
}

}  // namespace oba

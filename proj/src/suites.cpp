#include "oba/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "oba/algebra.hpp"
#include "oba/rigidity.hpp"
#include "oba/spectral.hpp"

namespace oba {

namespace {

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    void check(const std::string& name, std::size_t trial, bool ok,
               const std::function<std::string()>& detail = {}) {
        PropertyResult& p = slot(name);
        ++p.trials;
        if (ok) return;
        if (p.failures++ == 0) {
            std::ostringstream msg;
            msg << "trial " << trial;
            if (detail) msg << ": " << detail();
            p.first_failure = msg.str();
        }
    }

private:
    PropertyResult& slot(const std::string& name) {
        for (auto& p : report_.properties) {
            if (p.name == name) return p;
        }
        report_.properties.push_back({name, 0, 0, {}});
        return report_.properties.back();
    }

    SuiteReport& report_;
};

std::string describe(double lhs, const char* rel, double rhs) {
    std::ostringstream msg;
    msg.precision(17);
    msg << lhs << ' ' << rel << ' ' << rhs;
    return msg.str();
}

}  // namespace

bool SuiteReport::passed() const noexcept {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.passed(); });
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
    for (const auto& p : properties) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SuiteReport run_axiom_suite(std::uint64_t seed, std::size_t trials, const ToleranceConfig& tol) {
    tol.validate();
    SuiteReport report{"axioms", seed, {}};
    Recorder rec(report);

    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        std::uniform_real_distribution<double> scale_dist(0.0, 3.0);
        const auto x = random_cone_element(rng(), dim, scale_dist(rng));
        const auto y = random_cone_element(rng(), dim, scale_dist(rng));
        const auto z = random_cone_element(rng(), dim, scale_dist(rng));
        const double lambda = std::uniform_real_distribution<double>(0.0, 10.0)(rng);

        rec.check("generator_in_cone", t, cone_contains(x, tol) && cone_contains(y, tol));
        rec.check("additivity", t, cone_contains(x + y, tol));
        rec.check("positive_scaling", t, cone_contains(Complex(lambda, 0.0) * x, tol));
        rec.check("multiplicativity", t, cone_contains(prod_mul(x, y), tol));
        rec.check("unit_in_cone", t, cone_contains(unit_element(dim), tol));

        const double nx = prod_norm(x);
        rec.check("properness", t, nx <= tol.abs_tol || !cone_contains(-x, tol),
                  [&] { return "norm " + std::to_string(nx) + " yet -x in K"; });

        // 0 <= x <= x + y, so ||x|| <= ||x + y||.
        const auto upper = x + y;
        const bool premise = cone_leq(zero_element(dim), x, tol) && cone_leq(x, upper, tol);
        const double nu = prod_norm(upper);
        rec.check("normality", t, premise && nx <= nu + tol.abs_tol,
                  [&] { return describe(nx, "<=", nu); });
        // Arbitrary pairs: normality only constrains pairs that satisfy the premise.
        if (cone_leq(zero_element(dim), y, tol) && cone_leq(y, z, tol)) {
            const double ny = prod_norm(y);
            const double nz = prod_norm(z);
            rec.check("normality", t, ny <= nz + tol.abs_tol, [&] { return describe(ny, "<=", nz); });
        }

        const auto w = random_product_element(rng(), dim, scale_dist(rng));
        for (const ProductElement* e : {&x, &w}) {
            const bool expected = std::abs(e->scalar.imag()) <= tol.abs_tol &&
                                  prod_norm(*e) <= e->scalar.real() + tol.abs_tol;
            rec.check("ice_cream_equivalence", t, cone_contains(*e, tol) == expected);
        }

        const double nw = prod_norm(w);
        const double cstar = prod_norm(prod_mul(prod_involution(w), w));
        rec.check("c_star_identity", t, std::abs(cstar - nw * nw) <= tol.rel_tol * nw * nw,
                  [&] { return describe(cstar, "vs", nw * nw); });
        const auto ww = prod_involution(prod_involution(w));
        rec.check("involution_identity", t, ww.op == w.op && ww.scalar == w.scalar);

        const auto u = random_product_element(rng(), dim, scale_dist(rng));
        const auto v = random_product_element(rng(), dim, scale_dist(rng));
        const auto lhs = prod_mul(prod_mul(w, u), v);
        const auto rhs = prod_mul(w, prod_mul(u, v));
        const double assoc_err = prod_norm(lhs - rhs);
        const double assoc_scale = std::max(1.0, prod_norm(w) * prod_norm(u) * prod_norm(v));
        rec.check("associativity", t, assoc_err <= tol.rel_tol * assoc_scale,
                  [&] { return describe(assoc_err, "<=", tol.rel_tol * assoc_scale); });
        const auto e = unit_element(dim);
        const auto left = prod_mul(e, w);
        const auto right = prod_mul(w, e);
        rec.check("unit_two_sided", t,
                  prod_norm(left - w) <= tol.abs_tol && prod_norm(right - w) <= tol.abs_tol);
        const double nwu = prod_norm(prod_mul(w, u));
        const double bound = prod_norm(w) * prod_norm(u);
        rec.check("submultiplicativity", t, nwu <= bound * (1.0 + tol.rel_tol) + tol.abs_tol,
                  [&] { return describe(nwu, "<=", bound); });

        // Closedness, approximated: (a, xi + 1/k) in K converges to (a, xi).
        bool sequence_ok = true;
        for (int k = 1; k <= 64; k *= 2) {
            const ProductElement xk{x.op, x.scalar + Complex(1.0 / k, 0.0)};
            sequence_ok = sequence_ok && cone_contains(xk, tol);
        }
        rec.check("closedness_limit", t, sequence_ok && cone_contains(x, tol));
    }
    return report;
}

SuiteReport run_spectrum_union_suite(std::uint64_t seed, std::size_t trials, double threshold) {
    SuiteReport report{"spectrum_union", seed, {}};
    Recorder rec(report);
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        const std::size_t dim = std::uniform_int_distribution<std::size_t>(2, 16)(rng);
        const double scale = std::uniform_real_distribution<double>(0.1, 4.0)(rng);
        const auto x = random_product_element(rng(), dim, scale);
        const double dist = multiset_distance(product_spectrum(x), eigenvalues(block_embedding(x)));
        rec.check("spectrum_union", t, dist <= threshold,
                  [&] { return "dim " + std::to_string(dim) + ": " + describe(dist, "<=", threshold); });
    }
    return report;
}

SuiteReport run_rigidity_suite(std::uint64_t seed, std::size_t trials, const ToleranceConfig& tol) {
    tol.validate();
    SuiteReport report{"rigidity", seed, {}};
    Recorder rec(report);
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(seed, t));
        const std::size_t dim = std::uniform_int_distribution<std::size_t>(2, 16)(rng);
        const double scale = std::uniform_real_distribution<double>(0.05, 2.0)(rng);
        const auto n = random_strict_nilpotent(rng(), dim, scale);
        const auto id = MatrixOperator::identity(dim);
        const auto a = id + n;

        const double norm = spectral_norm(a);
        const double fro = n.frobenius_norm();
        const double lower = 1.0 + fro * fro / static_cast<double>(dim) - 1e-10;
        rec.check("norm_lower_bound", t, norm * norm >= lower,
                  [&] { return describe(norm * norm, ">=", lower); });

        const RigidityVerdict gap = rigidity_gap(a, tol);
        rec.check("dichotomy", t, gap.deviation == 0.0 || gap.norm_excess > 0.0,
                  [&] { return describe(gap.norm_excess, "> 0 with deviation", gap.deviation); });

        bool rejected = false;
        try {
            check_rigidity(a, tol);
        } catch (const PreconditionError& e) {
            rejected = e.clause() == "norm";
        }
        rec.check("norm_hypothesis_rejected", t, rejected);

        const auto u = random_unitary(rng(), dim);
        const RigidityVerdict conj = rigidity_gap(u * a * u.adjoint(), tol);
        rec.check("unitary_invariance", t,
                  std::abs(conj.norm_excess - gap.norm_excess) <= 1e-9 &&
                      std::abs(conj.deviation - gap.deviation) <= 1e-9,
                  [&] { return describe(conj.deviation, "vs", gap.deviation); });

        const RigidityVerdict ident = rigidity_gap(id, tol);
        rec.check("identity_gap", t,
                  std::abs(ident.norm_excess) <= 1e-15 && ident.deviation == 0.0 && ident.is_identity);
    }
    return report;
}

}  // namespace oba

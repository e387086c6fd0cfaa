#pragma once

// Seeded property suites shared by the CLI and the acceptance tests.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oba/matrix.hpp"

namespace oba {

struct PropertyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;  // empty when failures == 0

    bool passed() const noexcept { return failures == 0; }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool passed() const noexcept;
    const PropertyResult* find(const std::string& name) const;
};

/// splitmix64 step; derives independent per-trial seeds from one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Cone axioms, properness, normality (alpha = 1), ice-cream equivalence,
/// C*-identity, algebra laws and closedness-by-approximation on K.
SuiteReport run_axiom_suite(std::uint64_t seed, std::size_t trials, const ToleranceConfig& tol = {});

/// product_spectrum against the eigenvalues of the block embedding, dims 2..16.
SuiteReport run_spectrum_union_suite(std::uint64_t seed, std::size_t trials, double threshold = 1e-8);

/// Nilpotent perturbations I + N, dims 2..16: norm lower bound, dichotomy,
/// rejected norm hypothesis and unitary invariance.
SuiteReport run_rigidity_suite(std::uint64_t seed, std::size_t trials, const ToleranceConfig& tol = {});

}  // namespace oba

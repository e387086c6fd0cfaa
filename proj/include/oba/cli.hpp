#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oba/matrix.hpp"
#include "oba/volterra.hpp"

namespace oba::cli {

enum class Command { Witness, Converge, Rigidity, Axioms, Growth };
enum class OutputFormat { Json, Csv };

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "OBA_LAB_SEED";

struct RunConfig {
    Command command = Command::Witness;
    std::optional<std::size_t> n;  // per-command default when unset
    std::vector<std::size_t> ns = {16, 32, 64, 128, 256, 512, 1024};
    QuadratureRule rule = QuadratureRule::Trapezoid;
    bool rule_given = false;
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 10000;
    std::size_t k_max = 64;
    ToleranceConfig tol;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> output_path;
    bool timestamp = true;

    /// Throws UsageError on inconsistent settings.
    void validate() const;
};

struct RunResult {
    int exit_code = 0;  // 0 all checks pass, 1 some check failed
    std::string report;
};

/// Executes one suite and serialises its report. Does not write anywhere.
/// Throws UsageError for invalid configurations.
RunResult run(const RunConfig& config);

/// Full command-line entry point: parses argv, runs, writes the report to
/// `out` or the configured file. Returns the process exit status (0, 1, or
/// 2 on usage errors, with usage text on `err`). `env_seed` is the value of
/// OBA_LAB_SEED, if set.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const char* env_seed);

}  // namespace oba::cli

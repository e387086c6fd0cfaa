#include "oba/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oba/algebra.hpp"
#include "oba/rigidity.hpp"
#include "oba/spectral.hpp"
#include "oba/suites.hpp"

namespace oba::cli {

namespace {

using nlohmann::ordered_json;

// Locale-independent shortest round-trip representation.
std::string fmt(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string fmt(bool value) { return value ? "true" : "false"; }
std::string fmt(std::size_t value) { return std::to_string(value); }
std::string fmt(QuadratureRule rule) { return std::string(to_string(rule)); }

template <typename... Ts>
std::string csv_line(const Ts&... fields) {
    std::string line;
    ((line += (line.empty() ? "" : ","), line += fmt(fields)), ...);
    return line + "\n";
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json target(ordered_json value, const char* fact) {
    return ordered_json{{"target", std::move(value)}, {"fact", fact}};
}

ordered_json to_json(const WitnessReport& w) {
    return ordered_json{{"n", w.n},
                        {"rule", to_string(w.rule)},
                        {"h", w.h},
                        {"norm_T", w.norm_T},
                        {"xi_used", w.xi_used},
                        {"cone_member", w.cone_member},
                        {"cluster_radius", w.cluster_radius},
                        {"deviation", w.deviation},
                        {"geq_unit", w.geq_unit},
                        {"norm_excess", w.norm_excess},
                        {"resolvent_residual", w.resolvent_residual}};
}

ordered_json to_json(const ConvergenceRow& r) {
    return ordered_json{{"n", r.n},
                        {"h", r.h},
                        {"norm_T", r.norm_T},
                        {"cluster_radius", r.cluster_radius},
                        {"deviation", r.deviation},
                        {"norm_excess", r.norm_excess}};
}

ordered_json to_json(const SuiteReport& s) {
    ordered_json props = ordered_json::array();
    for (const auto& p : s.properties) {
        ordered_json entry{{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}};
        if (!p.first_failure.empty()) entry["first_failure"] = p.first_failure;
        props.push_back(std::move(entry));
    }
    return ordered_json{{"suite", s.suite}, {"seed", s.seed}, {"passed", s.passed()}, {"properties", props}};
}

std::string suites_csv(const std::vector<SuiteReport>& suites) {
    std::string out = "suite,property,trials,failures\n";
    for (const auto& s : suites) {
        for (const auto& p : s.properties) {
            out += s.suite + "," + p.name + "," + fmt(p.trials) + "," + fmt(p.failures) + "\n";
        }
    }
    return out;
}

struct Payload {
    ordered_json json;
    std::string csv;
    bool passed = true;
};

Payload run_witness(const RunConfig& c) {
    const WitnessReport w = build_witness(c.n.value_or(1024), c.rule, c.tol);
    Payload p;
    p.passed = w.cone_member && !w.geq_unit && w.deviation > c.tol.abs_tol && w.resolvent_residual <= 1e-10;
    p.json["report"] = to_json(w);
    p.json["targets"] = {
        {"norm_T", target(1.0, "||(I+V)^{-1}|| = 1 for the Volterra operator V on L^2[0,1]")},
        {"cluster_radius", target(0.0, "sigma(T) = {1}")},
        {"cone_member", target(true, "(T, 1) lies in K")},
        {"geq_unit", target(false, "(T, 1) - (I, 1) is not in K")},
        {"deviation", target("> 0", "T != I")}};
    p.csv = "n,rule,h,norm_T,xi_used,cone_member,cluster_radius,deviation,geq_unit,norm_excess,"
            "resolvent_residual\n" +
            csv_line(w.n, w.rule, w.h, w.norm_T, w.xi_used, w.cone_member, w.cluster_radius, w.deviation,
                     w.geq_unit, w.norm_excess, w.resolvent_residual);
    return p;
}

Payload run_converge(const RunConfig& c) {
    const auto rows = convergence_study(c.ns, c.rule, c.tol);
    Payload p;
    ordered_json arr = ordered_json::array();
    p.csv = "n,h,norm_T,cluster_radius,deviation,norm_excess\n";
    for (const auto& r : rows) {
        arr.push_back(to_json(r));
        p.csv += csv_line(r.n, r.h, r.norm_T, r.cluster_radius, r.deviation, r.norm_excess);
        if (c.rule == QuadratureRule::Trapezoid) p.passed = p.passed && trapezoid_sandwich_holds(r);
    }
    p.json["rule"] = to_string(c.rule);
    p.json["rows"] = std::move(arr);
    p.json["targets"] = {
        {"norm_T", target(1.0, "||(I+V)^{-1}|| = 1; trapezoid rows obey 1/(1+h/2) <= norm_T <= 1")},
        {"cluster_radius", target(0.0, "sigma(T) = {1}")}};
    if (c.rule == QuadratureRule::Trapezoid) p.json["sandwich_holds"] = p.passed;
    return p;
}

Payload run_growth(const RunConfig& c) {
    const std::size_t n = c.n.value_or(256);
    const auto a = growth_diagnostic(n, c.k_max);
    Payload p;
    p.csv = "k,a_k\n";
    for (std::size_t k = 0; k < a.size(); ++k) p.csv += csv_line(k + 1, a[k]);
    p.json["n"] = n;
    p.json["rule"] = to_string(QuadratureRule::LeftEndpoint);
    p.json["k_max"] = c.k_max;
    p.json["a_k"] = a;
    p.json["max_a_k"] = *std::max_element(a.begin(), a.end());
    p.json["last_a_k"] = a.back();
    p.json["targets"] = {
        {"a_k", target(0.0, "k ||(T - I)^k||^{1/k} -> 0 would force T >= I; it stays bounded away from 0")}};
    return p;
}

Payload suites_payload(std::vector<SuiteReport> suites) {
    Payload p;
    ordered_json arr = ordered_json::array();
    for (const auto& s : suites) {
        arr.push_back(to_json(s));
        p.passed = p.passed && s.passed();
    }
    p.json["suites"] = std::move(arr);
    p.csv = suites_csv(suites);
    return p;
}

Payload run_axioms(const RunConfig& c) {
    return suites_payload({run_axiom_suite(c.seed, c.trials, c.tol),
                           run_spectrum_union_suite(c.seed, c.trials)});
}

Payload run_rigidity(const RunConfig& c) {
    Payload p = suites_payload({run_rigidity_suite(c.seed, c.trials, c.tol)});

    // Fixed examples: the golden-ratio matrix and LeftEndpoint resolvents.
    ordered_json examples = ordered_json::array();
    ComplexMatrix jordan(2, 2);
    jordan << 1.0, 1.0, 0.0, 1.0;
    const RigidityVerdict golden = rigidity_gap(MatrixOperator(jordan), c.tol);
    const double phi_minus_one = (std::sqrt(5.0) - 1.0) / 2.0;
    const bool golden_ok = std::abs(golden.norm_excess - phi_minus_one) <= 1e-9 &&
                           std::abs(golden.deviation - 1.0) <= 1e-9 && !golden.is_identity;
    examples.push_back({{"name", "I + [[0,1],[0,0]]"},
                        {"norm_excess", golden.norm_excess},
                        {"deviation", golden.deviation},
                        {"is_identity", golden.is_identity},
                        {"expected_norm_excess", phi_minus_one},
                        {"passed", golden_ok}});
    p.passed = p.passed && golden_ok;

    for (std::size_t n : {2, 8, 64, 256}) {
        const auto t = resolvent_at_identity(volterra_matrix(n, QuadratureRule::LeftEndpoint));
        std::string clause = "none";
        try {
            check_rigidity(t, c.tol);
        } catch (const PreconditionError& e) {
            clause = e.clause();
        }
        const bool ok = clause == "norm";
        examples.push_back({{"name", "T_n left-endpoint"},
                            {"n", n},
                            {"rejected_clause", clause},
                            {"norm_T", spectral_norm(t)},
                            {"passed", ok}});
        p.passed = p.passed && ok;
    }
    p.json["examples"] = std::move(examples);
    p.json["targets"] = {
        {"is_identity", target(true, "(A, xi) in K with sigma = {1} in finite dimension forces A = I")}};
    return p;
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Witness: return "witness";
        case Command::Converge: return "converge";
        case Command::Rigidity: return "rigidity";
        case Command::Axioms: return "axioms";
        case Command::Growth: return "growth";
    }
    return "unknown";
}

std::uint64_t parse_seed(const std::string& text) {
    std::uint64_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw UsageError("invalid seed '" + text + "'");
    }
    return value;
}

}  // namespace

void RunConfig::validate() const {
    tol.validate();
    if (command == Command::Growth && rule_given) {
        throw UsageError("growth always uses the left-endpoint rule; --rule is not accepted");
    }
    if (n && (*n < 1 || *n > kMaxGridSize)) {
        throw UsageError("--n must lie in [1, " + std::to_string(kMaxGridSize) + "]");
    }
    if (command == Command::Converge) {
        if (ns.empty()) throw UsageError("--ns must list at least one grid size");
        for (std::size_t v : ns) {
            if (v < 1 || v > kMaxGridSize) {
                throw UsageError("--ns entries must lie in [1, " + std::to_string(kMaxGridSize) + "]");
            }
        }
    }
    if ((command == Command::Axioms || command == Command::Rigidity) && trials == 0) {
        throw UsageError("--trials must be positive");
    }
    if (command == Command::Growth) {
        const std::size_t grid = n.value_or(256);
        if (k_max < 1 || k_max >= grid) throw UsageError("growth requires 1 <= --k-max < --n");
    }
}

RunResult run(const RunConfig& config) {
    config.validate();
    Payload p;
    switch (config.command) {
        case Command::Witness: p = run_witness(config); break;
        case Command::Converge: p = run_converge(config); break;
        case Command::Growth: p = run_growth(config); break;
        case Command::Axioms: p = run_axioms(config); break;
        case Command::Rigidity: p = run_rigidity(config); break;
    }

    RunResult result;
    result.exit_code = p.passed ? 0 : 1;
    if (config.format == OutputFormat::Csv) {
        result.report = std::move(p.csv);
        return result;
    }
    ordered_json doc;
    doc["command"] = command_name(config.command);
    doc["passed"] = p.passed;
    if (config.command == Command::Axioms || config.command == Command::Rigidity) {
        doc["seed"] = config.seed;
        doc["trials"] = config.trials;
    }
    doc["abs_tol"] = config.tol.abs_tol;
    doc["rel_tol"] = config.tol.rel_tol;
    for (auto& [key, value] : p.json.items()) doc[key] = value;
    if (config.timestamp) doc["timestamp"] = utc_timestamp();
    result.report = doc.dump(2) + "\n";
    return result;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const char* env_seed) {
    CLI::App app{"Ordered Banach algebra verification lab"};
    app.name("oba_lab");
    app.require_subcommand(1);

    RunConfig config;
    std::string rule_text;
    std::string format_text = "json";
    std::string seed_text;
    std::string output_path;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed_text, "RNG seed (falls back to $OBA_LAB_SEED, then 42)");
        sub->add_option("--abs-tol", config.tol.abs_tol, "Absolute tolerance for order predicates");
        sub->add_option("--rel-tol", config.tol.rel_tol, "Relative tolerance for identities");
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", output_path, "Write the report to this file");
        sub->add_flag("--no-timestamp", [&](std::int64_t) { config.timestamp = false; },
                      "Omit the timestamp field");
        sub->add_option("--rule", rule_text, "Quadrature rule: trapezoid | left-endpoint");
    };

    auto* witness = app.add_subcommand("witness", "Build the counterexample witness for one grid size");
    witness->add_option("--n", config.n, "Grid size (default 1024)");
    auto* converge = app.add_subcommand("converge", "Norm/spectrum convergence study over grid sizes");
    converge->add_option("--ns", config.ns, "Comma-separated grid sizes")->delimiter(',');
    auto* rigidity = app.add_subcommand("rigidity", "Finite-dimensional rigidity suite");
    rigidity->add_option("--trials", config.trials, "Number of seeded trials");
    auto* axioms = app.add_subcommand("axioms", "Cone axiom and spectrum-union property suites");
    axioms->add_option("--trials", config.trials, "Number of seeded trials");
    auto* growth = app.add_subcommand("growth", "k ||(T - I)^k||^{1/k} for the left-endpoint resolvent");
    growth->add_option("--n", config.n, "Grid size (default 256)");
    growth->add_option("--k-max", config.k_max, "Largest power k (default 64)");
    for (auto* sub : {witness, converge, rigidity, axioms, growth}) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (witness->parsed()) config.command = Command::Witness;
        if (converge->parsed()) config.command = Command::Converge;
        if (rigidity->parsed()) config.command = Command::Rigidity;
        if (axioms->parsed()) config.command = Command::Axioms;
        if (growth->parsed()) config.command = Command::Growth;

        if (!rule_text.empty()) {
            const auto rule = parse_rule(rule_text);
            if (!rule) throw UsageError("unknown rule '" + rule_text + "'");
            config.rule = *rule;
            config.rule_given = true;
        }
        if (!seed_text.empty()) {
            config.seed = parse_seed(seed_text);
        } else if (env_seed != nullptr && *env_seed != '\0') {
            config.seed = parse_seed(env_seed);
        }
        config.format = format_text == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        if (!output_path.empty()) config.output_path = output_path;

        RunResult result = run(config);
        if (config.output_path) {
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open " << *config.output_path << " for writing\n";
                return 2;
            }
            file << result.report;
        } else {
            out << result.report;
        }
        return result.exit_code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace oba::cli

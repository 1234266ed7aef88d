#ifndef UMBRAL_TOOLS_COMMANDS_HPP
#define UMBRAL_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbral/io.hpp"

namespace umbral::cli {

enum ExitCode : int { exit_pass = 0, exit_falsified = 1, exit_invalid = 2, exit_convergence = 3 };

struct RunConfig {
    std::string command; // family | check | elliptic | suite
    std::string family;  // classical | qclassical | krall
    std::vector<std::string> xi, eta;
    std::optional<std::string> q, alpha, beta;
    std::string g2 = "4", g3 = "1", w = "0.1";
    std::size_t depth = 10;
    /// Absolute tolerance; unset falls back to UMBRAL_TOL or the default.
    std::optional<double> tol;
    std::optional<double> rel_tol;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 20240611;
    bool floating = false;
    std::string moments_file, mu_file;
    /// "n:delta" adds delta to mu_n / raw g_n; "m,s:delta" adds delta to R_{ms}.
    std::optional<std::string> perturb_mu, perturb_g, perturb_r;
    /// Elliptic polynomial checks run to min(depth, poly_degree) and
    /// min(depth, shift_degree).
    std::size_t poly_degree = 6, shift_degree = 5;
    double poly_tol = 1e-8;
};

struct CommandResult {
    int exit_code = exit_pass;
    json report;
    /// Serialized report in the requested format.
    std::string text;
    /// One-line summary, or the error message.
    std::string message;
};

Tolerance tolerance_of(const RunConfig& cfg);
/// Throws ParameterError naming the violated precondition.
void validate(const RunConfig& cfg);

CommandResult run_family(const RunConfig& cfg);
CommandResult run_check(const RunConfig& cfg);
CommandResult run_elliptic(const RunConfig& cfg);

/// Dispatches on cfg.command, maps exceptions to exit codes and writes
/// cfg.out when set. Never throws for library errors.
CommandResult run(const RunConfig& cfg);

} // namespace umbral::cli

#endif // UMBRAL_TOOLS_COMMANDS_HPP

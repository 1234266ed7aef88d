#include <iostream>

#include <CLI11.hpp>

#include "battery.hpp"
#include "commands.hpp"

namespace {

using umbral::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--depth", cfg.depth, "Depth N (>= 1)")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    cmd->add_option("--tol", cfg.tol, "Absolute tolerance for floating comparisons")->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_family_params(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--family", cfg.family, "classical | qclassical | krall")
        ->check(CLI::IsMember({"classical", "qclassical", "krall"}));
    cmd->add_option("--xi", cfg.xi, "xi_{-1},xi_0,xi_1")->delimiter(',')->allow_extra_args(false);
    cmd->add_option("--eta", cfg.eta, "eta_{-1},eta_0")->delimiter(',')->allow_extra_args(false);
    cmd->add_option("--q", cfg.q, "q for the q-classical family");
    cmd->add_option("--alpha", cfg.alpha, "alpha");
    cmd->add_option("--beta", cfg.beta, "beta");
    cmd->add_flag("--float", cfg.floating, "Use complex double arithmetic instead of exact rationals");
    cmd->add_option("--rel-tol", cfg.rel_tol, "Relative tolerance for floating comparisons")
        ->check(CLI::NonNegativeNumber);
}

int emit(const umbral::cli::CommandResult& res, const RunConfig& cfg)
{
    if (!res.text.empty() && cfg.out.empty())
        std::cout << res.text;
    if (res.exit_code == umbral::cli::exit_pass || res.exit_code == umbral::cli::exit_falsified)
        std::cerr << res.message << '\n';
    else
        std::cerr << "error: " << res.message << '\n';
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Umbral classical orthogonal polynomials: generators, checks and the elliptic suite"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");

    auto* family = app.add_subcommand("family", "Generate moments, mu, recurrence data and polynomials");
    add_common(family, cfg);
    add_family_params(family, cfg);

    auto* check = app.add_subcommand("check", "Decide whether an instance is umbral classical");
    add_common(check, cfg);
    add_family_params(check, cfg);
    check->add_option("--moments", cfg.moments_file, "Moment file (JSON array or one value per line)")
        ->check(CLI::ExistingFile);
    check->add_option("--mu", cfg.mu_file, "mu_0, mu_1, ... file (same formats)")->check(CLI::ExistingFile);
    check->add_option("--perturb-mu", cfg.perturb_mu, "n:delta, add delta to mu_n");
    check->add_option("--perturb-g", cfg.perturb_g, "n:delta, add delta to the raw moment g_n");
    check->add_option("--perturb-r", cfg.perturb_r, "m,s:delta, add delta to R_{ms}");
    check->add_option("--seed", cfg.seed, "Seed for the random symmetry pairs");

    auto* elliptic = app.add_subcommand("elliptic", "Elliptic family checks");
    elliptic->require_subcommand(1);
    auto* verify = elliptic->add_subcommand("verify", "Identities, three-way P_n agreement and shift property");
    cfg.depth = 10;
    add_common(verify, cfg);
    verify->add_option("--g2", cfg.g2, "Weierstrass invariant g2");
    verify->add_option("--g3", cfg.g3, "Weierstrass invariant g3");
    verify->add_option("--w", cfg.w, "Scale w in y(x) = sigma(w x)");
    verify->add_option("--alpha", cfg.alpha, "alpha (default 0.3)");
    verify->add_option("--beta", cfg.beta, "beta (default 0.7)");
    verify->add_option("--poly-degree", cfg.poly_degree, "Highest degree of the three-way comparison");
    verify->add_option("--shift-degree", cfg.shift_degree, "Highest degree of the shift comparison");
    verify->add_option("--poly-tol", cfg.poly_tol, "Relative tolerance of the polynomial checks")
        ->check(CLI::NonNegativeNumber);

    auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
    suite->add_option("--out", cfg.out, "Write the JSON summary to this file");
    suite->add_option("--seed", cfg.seed, "Seed for the randomized criteria");
    bool sequential = false;
    suite->add_flag("--sequential", sequential, "Run criteria one after another");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return umbral::cli::exit_invalid;
    }

    if (*suite) {
        const auto results = umbral::acceptance::run_battery(cfg.seed, !sequential);
        for (const auto& r : results)
            std::cout << umbral::acceptance::format_line(r) << '\n';
        if (!cfg.out.empty())
            umbral::acceptance::write_summary(results, cfg.out);
        return umbral::acceptance::all_pass(results) ? umbral::cli::exit_pass : umbral::cli::exit_falsified;
    }
    if (*family) {
        cfg.command = "family";
    } else if (*check) {
        cfg.command = "check";
    } else {
        cfg.command = "elliptic";
        if (verify->count("--depth") == 0)
            cfg.depth = 8;
    }
    return emit(umbral::cli::run(cfg), cfg);
}

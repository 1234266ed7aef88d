#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "umbral/classical.hpp"
#include "umbral/elliptic.hpp"
#include "umbral/families.hpp"
#include "umbral/orthopoly.hpp"
#include "umbral/recurrence.hpp"

namespace umbral::cli {

namespace {

constexpr std::size_t symmetry_pairs = 8;

Scalar parse_param(const std::string& text, Mode mode, const std::string& name)
{
    try {
        return Scalar::parse(text, mode);
    } catch (const Error& e) {
        throw ParameterError("--" + name + ": " + e.what());
    }
}

std::vector<std::string> split_list(const std::vector<std::string>& items)
{
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty())
                out.push_back(part);
    }
    return out;
}

template <std::size_t K>
std::array<Scalar, K> parse_array(const std::vector<std::string>& items, Mode mode,
                                  const std::string& name)
{
    const auto parts = split_list(items);
    if (parts.size() != K)
        throw ParameterError("--" + name + " needs " + std::to_string(K) + " comma-separated values, got " +
                             std::to_string(parts.size()));
    std::array<Scalar, K> out;
    for (std::size_t i = 0; i < K; ++i)
        out[i] = parse_param(parts[i], mode, name);
    return out;
}

Scalar required(const std::optional<std::string>& v, Mode mode, const std::string& name)
{
    if (!v)
        throw ParameterError("--" + name + " is required for this family");
    return parse_param(*v, mode, name);
}

struct Perturbation {
    std::size_t n = 0, s = 0;
    std::string delta;
};

Perturbation parse_perturbation(const std::string& text, bool two_indices, const std::string& name)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParameterError("--" + name + " expects " + (two_indices ? "m,s:delta" : "n:delta"));
    Perturbation p;
    p.delta = text.substr(colon + 1);
    const std::string idx = text.substr(0, colon);
    try {
        if (two_indices) {
            const auto comma = idx.find(',');
            if (comma == std::string::npos)
                throw ParameterError("--" + name + " expects m,s:delta");
            p.n = std::stoul(idx.substr(0, comma));
            p.s = std::stoul(idx.substr(comma + 1));
        } else {
            p.n = std::stoul(idx);
        }
    } catch (const std::logic_error&) {
        throw ParameterError("--" + name + ": malformed index in '" + text + "'");
    }
    return p;
}

Mode mode_of(const RunConfig& cfg)
{
    return cfg.floating ? Mode::floating : Mode::exact;
}

FamilyInstance build_family(const RunConfig& cfg, Mode mode)
{
    if (cfg.family == "classical") {
        return classical_instance({parse_array<3>(cfg.xi, mode, "xi"), parse_array<2>(cfg.eta, mode, "eta")},
                                  cfg.depth);
    }
    if (cfg.family == "qclassical") {
        return q_classical_instance({required(cfg.q, mode, "q"), parse_array<3>(cfg.xi, mode, "xi"),
                                     parse_array<2>(cfg.eta, mode, "eta")},
                                    cfg.depth);
    }
    if (cfg.family == "krall")
        return krall_instance({required(cfg.alpha, mode, "alpha"), required(cfg.beta, mode, "beta")}, cfg.depth);
    if (cfg.family.empty())
        throw ParameterError("--family is required");
    throw ParameterError("unknown family '" + cfg.family + "' (expected classical, qclassical or krall)");
}

json params_json(const RunConfig& cfg)
{
    json p = json::object();
    if (!cfg.xi.empty())
        p["xi"] = split_list(cfg.xi);
    if (!cfg.eta.empty())
        p["eta"] = split_list(cfg.eta);
    if (cfg.q)
        p["q"] = *cfg.q;
    if (cfg.alpha)
        p["alpha"] = *cfg.alpha;
    if (cfg.beta)
        p["beta"] = *cfg.beta;
    return p;
}

void csv_rows(std::ostringstream& os, const std::string& name, std::span<const Scalar> values,
              std::size_t first_index = 0)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        os << name << ',' << first_index + i << ",," << csv_cell(values[i]) << '\n';
}

std::string family_csv(const std::vector<Scalar>& g, const std::vector<Scalar>& mu,
                       const std::optional<std::vector<Scalar>>& gt, const MonicPolySystem& p)
{
    std::ostringstream os;
    os << "quantity,n,k,value\n";
    csv_rows(os, "g", g);
    csv_rows(os, "mu", mu);
    if (gt)
        csv_rows(os, "g_tilde", *gt);
    csv_rows(os, "b", p.b_values());
    csv_rows(os, "u", p.u_values(), 1);
    csv_rows(os, "h", p.h_values());
    for (std::size_t n = 0; n <= p.size(); ++n) {
        const auto& c = p[n].coefficients();
        for (std::size_t k = 0; k < c.size(); ++k)
            os << "P," << n << ',' << k << ',' << csv_cell(c[k]) << '\n';
    }
    return os.str();
}

std::string check_csv(const json& report)
{
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& key : {"verdict", "status", "depth", "max_residual", "failing_cell", "band_width"}) {
        const json& v = report.at(key);
        std::string cell;
        if (v.is_string())
            cell = v.get<std::string>();
        else if (v.is_array() && v.size() == 2 && v[0].is_number_unsigned())
            cell = std::to_string(v[0].get<std::size_t>()) + " " + std::to_string(v[1].get<std::size_t>());
        else
            cell = v.dump();
        os << key << ',' << cell << '\n';
    }
    if (report.contains("eigen"))
        for (std::size_t n = 0; n < report["eigen"]["lambda"].size(); ++n) {
            const json& l = report["eigen"]["lambda"][n];
            os << "lambda_" << n << ',' << (l.is_string() ? l.get<std::string>() : l.dump()) << '\n';
        }
    return os.str();
}

MomentSequence perturb_moments(const MomentSequence& g, const Perturbation& p, Mode mode)
{
    const Scalar delta = parse_param(p.delta, mode, "perturb-g");
    const std::size_t n = p.n;
    if (auto lim = g.limit()) {
        if (n >= *lim)
            throw ParameterError("--perturb-g index beyond the moment data");
        std::vector<Scalar> raw;
        for (std::size_t k = 0; k < *lim; ++k)
            raw.push_back(g.raw(k) + (k == n ? delta : Scalar::zero(mode)));
        return MomentSequence::from_values(std::move(raw));
    }
    return MomentSequence::from_rule(mode, [g, n, delta](std::size_t k) {
        return k == n ? g.raw(k) + delta : g.raw(k);
    });
}

UmbralDerivative perturb_mu(const UmbralDerivative& d, const Perturbation& p, Mode mode)
{
    if (p.n == 0)
        throw ParameterError("--perturb-mu: mu_0 = 0 is fixed");
    const Scalar delta = parse_param(p.delta, mode, "perturb-mu");
    const std::size_t n = p.n;
    return UmbralDerivative(
        mode, [d, n, delta](std::size_t k) { return k == n ? d.mu(k) + delta : d.mu(k); },
        d.label() + " (mu_" + std::to_string(n) + " perturbed)");
}

UmbralDerivative finite_mu(std::vector<Scalar> values, Mode mode)
{
    auto shared = std::make_shared<const std::vector<Scalar>>(std::move(values));
    return UmbralDerivative(
        mode,
        [shared](std::size_t n) {
            if (n >= shared->size())
                throw InsufficientData("mu_" + std::to_string(n) + " requested but the mu file has " +
                                       std::to_string(shared->size()) + " values");
            return (*shared)[n];
        },
        "mu from file");
}

json local_analysis(const MomentSequence& g, const ClassicalReport& rep, const UmbralDerivative& d,
                    std::size_t width, const Tolerance& tol)
{
    json out;
    const std::size_t order = width + 1;
    std::vector<Scalar> mu;
    try {
        mu = d.mu_prefix(std::max(2 * rep.depth + 2, 2 * order + 2));
    } catch (const InsufficientData&) {
        mu = d.mu_prefix(2 * order + 2);
    }
    auto profile = min_linear_recurrence(mu, order, tol);
    out["mu_recurrence"] = nullptr;
    if (!profile)
        return out;
    out["mu_recurrence"] = to_json(std::span<const Scalar>(profile->alpha));
    out["mu_recurrence_order"] = profile->order();

    try {
        *profile = normalize_profile(*profile, mu, tol);
        out["normalization"] = {{"q", to_json(*profile->q)},
                                {"beta", to_json(std::span<const Scalar>(profile->beta))}};
    } catch (const Error& e) {
        out["normalization"] = {{"error", e.what()}};
    }

    try {
        const ChristoffelResult cr = christoffel_factor(g, rep.tau, *profile, tol);
        out["christoffel"] = {{"consistent", cr.consistent},
                              {"epsilon", to_json(std::span<const Scalar>(cr.epsilon))},
                              {"pi", to_json(cr.pi)},
                              {"max_residual", cr.max_residual}};
    } catch (const Error& e) {
        out["christoffel"] = {{"error", e.what()}};
    }

    const KCheckReport k = k_coefficient_check(*rep.r, *profile, rep.depth, tol);
    out["k_check"] = {{"pass", k.pass}, {"max_residual", k.max_residual}, {"windows", k.windows}};
    return out;
}

json symmetry_analysis(const MomentSequence& g, const UmbralDerivative& d, const RaisingOperator& r,
                       std::size_t depth, std::uint64_t seed, const Tolerance& tol)
{
    const MonomialOperator l = compose_RD(r, d);
    gen::Rng rng(seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < symmetry_pairs; ++i) {
        const Polynomial f = rng.polynomial(depth, d.mode());
        const Polynomial h = rng.polynomial(depth, d.mode());
        if (!symmetry_check(l, g, f, h, tol))
            ++failures;
    }
    return {{"pairs", symmetry_pairs}, {"seed", seed}, {"pass", failures == 0}, {"failures", failures}};
}

CommandResult finish(json report, const RunConfig& cfg, std::string csv, int code, std::string message)
{
    CommandResult res;
    res.exit_code = code;
    res.text = cfg.format == "csv" ? std::move(csv) : report.dump(2) + "\n";
    res.report = std::move(report);
    res.message = std::move(message);
    return res;
}

double coeff_scale(const Polynomial& p)
{
    double m = 0.0;
    for (const auto& c : p.coefficients())
        m = std::max(m, c.magnitude());
    return m;
}

} // namespace

Tolerance tolerance_of(const RunConfig& cfg)
{
    Tolerance t = Tolerance::default_tolerance();
    if (cfg.tol)
        t.abs_eps = *cfg.tol;
    if (cfg.rel_tol)
        t.rel_eps = *cfg.rel_tol;
    return t;
}

void validate(const RunConfig& cfg)
{
    if (cfg.depth < 1)
        throw ParameterError("--depth must be at least 1");
    if (cfg.tol && *cfg.tol < 0)
        throw ParameterError("--tol must be nonnegative");
    if (cfg.rel_tol && *cfg.rel_tol < 0)
        throw ParameterError("--rel-tol must be nonnegative");
    if (cfg.format != "json" && cfg.format != "csv")
        throw ParameterError("--format must be json or csv");
}

CommandResult run_family(const RunConfig& cfg)
{
    validate(cfg);
    const Mode mode = mode_of(cfg);
    const Tolerance tol = tolerance_of(cfg);
    const FamilyInstance inst = build_family(cfg, mode);
    const std::size_t n = cfg.depth;

    const std::vector<Scalar> g = inst.g.prefix(2 * n + 1);
    const std::vector<Scalar> mu = inst.d.mu_prefix(n + 1);
    std::optional<std::vector<Scalar>> gt;
    if (inst.g_tilde)
        gt = inst.g_tilde->prefix(2 * n - 1);
    const MonicPolySystem p = monic_ops_from_moments(inst.g, n, tol);

    json report;
    report["family"] = inst.family;
    report["mode"] = std::string(to_string(mode));
    report["depth"] = n;
    report["params"] = params_json(cfg);
    report["derivative"] = inst.d.label();
    report["moments"] = to_json(std::span<const Scalar>(g));
    report["mu"] = to_json(std::span<const Scalar>(mu));
    report["g_tilde"] = gt ? to_json(std::span<const Scalar>(*gt)) : json(nullptr);
    report["recurrence"] = to_json(p);
    return finish(std::move(report), cfg, family_csv(g, mu, gt, p), exit_pass,
                  inst.family + " instance to degree " + std::to_string(n));
}

CommandResult run_check(const RunConfig& cfg)
{
    validate(cfg);
    const Mode mode = mode_of(cfg);
    const Tolerance tol = tolerance_of(cfg);

    std::optional<FamilyInstance> inst;
    if (!cfg.family.empty())
        inst = build_family(cfg, mode);
    if (!inst && cfg.moments_file.empty())
        throw ParameterError("check needs --family or --moments");

    MomentSequence g = cfg.moments_file.empty()
                           ? inst->g
                           : MomentSequence::from_values(read_scalar_file(cfg.moments_file, mode));
    UmbralDerivative d = !cfg.mu_file.empty() ? finite_mu(read_scalar_file(cfg.mu_file, mode), mode)
                         : inst ? inst->d
                                : UmbralDerivative(
                                      mode,
                                      [mode](std::size_t k) { return Scalar::integer(static_cast<long>(k), mode); },
                                      "∂_x");
    if (cfg.perturb_g)
        g = perturb_moments(g, parse_perturbation(*cfg.perturb_g, false, "perturb-g"), mode);
    if (cfg.perturb_mu)
        d = perturb_mu(d, parse_perturbation(*cfg.perturb_mu, false, "perturb-mu"), mode);
    // Surfaces g_0 = 0 and mode errors before any heavier work.
    (void)g[0];

    ClassicalReport rep = is_umbral_classical(g, d, cfg.depth, tol);
    if (cfg.perturb_r) {
        const Perturbation pr = parse_perturbation(*cfg.perturb_r, true, "perturb-r");
        if (!rep.r)
            throw ParameterError("--perturb-r: no raising operator was constructed");
        if (pr.n > cfg.depth || pr.s > pr.n + 1)
            throw ParameterError("--perturb-r: entry (m, s) needs m <= depth and s <= m + 1");
        const Scalar delta = parse_param(pr.delta, mode, "perturb-r");
        rep.r = rep.r->with_entry(pr.n, pr.s, rep.r->entry(pr.n, pr.s) + delta);
        rep.main_system = verify_main_system(g, rep.tau, d, *rep.r, cfg.depth, tol);
    }

    json report = report_to_json(rep, tol);
    report["derivative"] = d.label();
    report["mode"] = std::string(to_string(mode));
    const bool verdict = report["verdict"].get<bool>();
    if (verdict && rep.r) {
        const EigenReport eig = eigen_check(rep.p, rep.q, d, *rep.r, tol);
        report["eigen"] = {{"pass", eig.pass},
                           {"lambda", to_json(std::span<const Scalar>(eig.data.lambda))},
                           {"distinct", eig.lambdas_distinct},
                           {"hypergeometric", eig.hypergeometric}};
        const BandInfo band = rep.r->band(tol);
        if (band.local && band.width >= 1)
            report["local"] = local_analysis(g, rep, d, band.width, tol);
        report["symmetry"] = symmetry_analysis(g, d, *rep.r, cfg.depth, cfg.seed, tol);
    }

    std::string message = verdict ? "umbral classical to depth " + std::to_string(cfg.depth)
                                  : "not umbral classical (" + std::string(to_string(rep.status)) + ")";
    if (!report["failing_cell"].is_null())
        message += ", failing cell " + report["failing_cell"].dump();
    const std::string csv = check_csv(report);
    return finish(std::move(report), cfg, csv, verdict ? exit_pass : exit_falsified, message);
}

CommandResult run_elliptic(const RunConfig& cfg)
{
    validate(cfg);
    const Scalar g2x = parse_param(cfg.g2, Mode::exact, "g2");
    const Scalar g3x = parse_param(cfg.g3, Mode::exact, "g3");
    const Mode mode = g2x.is_zero() && g3x.is_zero() ? Mode::exact : Mode::floating;
    const EllipticParams params{parse_param(cfg.g2, mode, "g2"), parse_param(cfg.g3, mode, "g3"),
                                parse_param(cfg.w, mode, "w"),
                                parse_param(cfg.alpha.value_or("0.3"), mode, "alpha"),
                                parse_param(cfg.beta.value_or("0.7"), mode, "beta")};
    const EllipticModel model(params);
    const double id_tol = cfg.tol.value_or(1e-10);
    const double poly_tol = cfg.poly_tol;
    const std::size_t pn = std::min(cfg.depth, cfg.poly_degree);
    const std::size_t sn = std::min(cfg.depth, cfg.shift_degree);

    const DegenerateIdentityReport ids = check_degenerate_identities(model, cfg.depth, Tolerance(id_tol, 0.0));

    // P_n three ways: Hankel determinants, the explicit recurrence, the closed form.
    const FamilyInstance inst = elliptic_instance(model, pn);
    const MonicPolySystem hankel = monic_ops_from_moments(inst.g, pn, Tolerance::default_tolerance());
    const EllipticRecurrence er = elliptic_recurrence(model, pn);
    const MonicPolySystem rec = ops_from_recurrence(er.b, er.u, pn);
    double hankel_vs_formula = 0.0, recurrence_vs_formula = 0.0, b_diff = 0.0;
    bool three_way = true;
    for (std::size_t n = 0; n <= pn; ++n) {
        const Polynomial f = elliptic_P(n, model);
        const double scale = coeff_scale(f);
        const double dh = max_coeff_diff(hankel[n], f) / scale;
        const double dr = max_coeff_diff(rec[n], f) / scale;
        hankel_vs_formula = std::max(hankel_vs_formula, dh);
        recurrence_vs_formula = std::max(recurrence_vs_formula, dr);
        if (mode == Mode::exact)
            three_way = three_way && hankel[n] == f && rec[n] == f;
        if (n < pn)
            b_diff = std::max(b_diff, (hankel.b(n) - er.b[n]).magnitude() / std::max(1.0, er.b[n].magnitude()));
    }
    if (mode == Mode::floating)
        three_way = hankel_vs_formula < poly_tol && recurrence_vs_formula < poly_tol && b_diff < poly_tol;

    const ShiftReport shift = shift_property_check(model, sn, Tolerance(poly_tol, 0.0));
    const bool pass = ids.pass && three_way && shift.pass;

    json report;
    report["verdict"] = pass;
    report["mode"] = std::string(to_string(mode));
    report["params"] = {{"g2", cfg.g2}, {"g3", cfg.g3}, {"w", cfg.w},
                        {"alpha", cfg.alpha.value_or("0.3")}, {"beta", cfg.beta.value_or("0.7")}};
    report["depth"] = cfg.depth;
    report["tolerances"] = {{"identities", id_tol}, {"polynomials", poly_tol}};
    report["identities"] = {{"pass", ids.pass},
                            {"red_deg_mu", ids.red_deg_mu},
                            {"red_mu_c", ids.red_mu_c},
                            {"symmetry", ids.symmetry}};
    report["three_way"] = {{"pass", three_way},
                           {"degree", pn},
                           {"hankel_vs_formula", hankel_vs_formula},
                           {"recurrence_vs_formula", recurrence_vs_formula},
                           {"b_hankel_vs_formula", b_diff}};
    report["shift"] = {{"pass", shift.pass}, {"degree", sn}, {"max_residual", shift.max_residual}};
    if (mode == Mode::exact)
        report["recurrence"] = to_json(rec);

    std::ostringstream csv;
    csv << "check,residual,pass\n"
        << "red_deg_mu," << ids.red_deg_mu << ',' << ids.pass << '\n'
        << "red_mu_c," << ids.red_mu_c << ',' << ids.pass << '\n'
        << "symmetry," << ids.symmetry << ',' << ids.pass << '\n'
        << "hankel_vs_formula," << hankel_vs_formula << ',' << three_way << '\n'
        << "recurrence_vs_formula," << recurrence_vs_formula << ',' << three_way << '\n'
        << "b_hankel_vs_formula," << b_diff << ',' << three_way << '\n'
        << "shift," << shift.max_residual << ',' << shift.pass << '\n';
    return finish(std::move(report), cfg, csv.str(), pass ? exit_pass : exit_falsified,
                  pass ? "elliptic checks pass" : "elliptic checks failed");
}

CommandResult run(const RunConfig& cfg)
{
    CommandResult res;
    try {
        if (cfg.command == "family")
            res = run_family(cfg);
        else if (cfg.command == "check")
            res = run_check(cfg);
        else if (cfg.command == "elliptic")
            res = run_elliptic(cfg);
        else
            throw ParameterError("unknown command '" + cfg.command + "'");
    } catch (const ConvergenceError& e) {
        res = {exit_convergence, nullptr, {}, e.what()};
    } catch (const DegenerateFunctional& e) {
        res = {exit_invalid, nullptr, {}, e.what()};
    } catch (const ParameterError& e) {
        res = {exit_invalid, nullptr, {}, e.what()};
    } catch (const InsufficientData& e) {
        res = {exit_invalid, nullptr, {}, e.what()};
    } catch (const ModeMismatch& e) {
        res = {exit_invalid, nullptr, {}, e.what()};
    } catch (const DivisionByZero& e) {
        res = {exit_invalid, nullptr, {}, e.what()};
    } catch (const Error& e) {
        res = {exit_convergence, nullptr, {}, std::string("internal failure: ") + e.what()};
    }
    if (res.report.is_null())
        res.report = {{"error", res.message}, {"exit_code", res.exit_code}};
    if (!cfg.out.empty() && !res.text.empty()) {
        std::ofstream out(cfg.out);
        if (!out)
            return {exit_invalid, res.report, {}, "cannot write " + cfg.out};
        out << res.text;
    }
    return res;
}

} // namespace umbral::cli

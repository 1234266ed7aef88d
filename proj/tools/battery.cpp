#include "battery.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "generators.hpp"
#include "umbral/classical.hpp"
#include "umbral/elliptic.hpp"
#include "umbral/families.hpp"
#include "umbral/io.hpp"
#include "umbral/orthopoly.hpp"
#include "umbral/recurrence.hpp"

namespace umbral::acceptance {

namespace {

// Pinned acceptance tolerances and budgets.
constexpr double c1_budget = 5.0;
constexpr double c2_budget = 5.0;
constexpr double c3_budget = 10.0;
constexpr double c4_budget = 60.0;
constexpr double c5_budget = 60.0;
constexpr double c6_budget = 60.0;
constexpr double red_mu_c_tol = 1e-10;
constexpr double three_way_tol = 1e-8;
constexpr double shift_tol = 1e-8;
constexpr double sigma_oracle_tol = 1e-12;
constexpr double sigma_sample_radius = 1.2;
constexpr std::size_t sigma_samples = 100;

constexpr std::size_t transform_triples = 20;
constexpr std::size_t symmetry_pairs = 50;
constexpr std::size_t generated_per_family = 10;
constexpr std::size_t battery_depth = 8;

using Clock = std::chrono::steady_clock;

Scalar ex(long p, long q = 1)
{
    return Scalar::exact(p, q);
}

std::string sci(double v)
{
    std::ostringstream os;
    os << std::setprecision(2) << std::scientific << v;
    return os.str();
}

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            r_.failures.push_back(what);
    }
    void detail(const std::string& name, const std::string& value)
    {
        r_.details.push_back(name + "=" + value);
    }
    void detail(const std::string& name, double value) { detail(name, sci(value)); }
    void detail(const std::string& name, std::size_t value) { detail(name, std::to_string(value)); }

private:
    CriterionResult& r_;
};

CriterionResult timed(int id, std::string title, double budget, const std::function<void(Recorder&)>& body)
{
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.budget_seconds = budget;
    Recorder rec(r);
    const auto start = Clock::now();
    try {
        body(rec);
    } catch (const std::exception& e) {
        rec.expect(false, std::string("unexpected exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    rec.expect(r.seconds < budget, "runtime " + sci(r.seconds) + " s over budget");
    r.pass = r.failures.empty();
    return r;
}

Polynomial derivative_over(const Polynomial& p, const Scalar& divisor)
{
    std::vector<Scalar> c;
    for (std::size_t k = 1; k < p.coefficients().size(); ++k)
        c.push_back(p.coeff(k) * static_cast<long>(k) / divisor);
    return Polynomial(std::move(c), p.mode());
}

bool off_diagonal_zero(const GramReport& g)
{
    for (std::size_t i = 0; i < g.gram.size(); ++i)
        for (std::size_t j = 0; j < g.gram.size(); ++j)
            if (i != j && !g.gram[i][j].is_zero())
                return false;
    return true;
}

double relative_diff(const Polynomial& a, const Polynomial& ref)
{
    double scale = 0.0;
    for (const auto& c : ref.coefficients())
        scale = std::max(scale, c.magnitude());
    return max_coeff_diff(a, ref) / scale;
}

// Generalized Hermite moments g_{2k} = (η + 1/2)_k, odd moments zero.
MomentSequence dunkl_hermite_moments(const Scalar& eta)
{
    return MomentSequence::from_rule(Mode::exact, [eta](std::size_t n) {
        if (n % 2 == 1)
            return Scalar::zero(Mode::exact);
        Scalar acc = Scalar::one(Mode::exact);
        for (std::size_t k = 0; k < n / 2; ++k)
            acc *= eta + ex(1, 2) + static_cast<long>(k);
        return acc;
    });
}

struct Generated {
    std::string family;
    MomentSequence g;
    UmbralDerivative d;
    /// j = 1 families: K check and Christoffel factor apply.
    bool two_diagonal_family = false;
};

std::optional<Generated> draw_classical(gen::Rng& rng)
{
    const Mode m = Mode::exact;
    ClassicalParams p{{rng.rational(m, 3, 2, true), rng.rational(m), rng.rational(m)},
                      {rng.rational(m, 5, 2, true), rng.rational(m)}};
    try {
        FamilyInstance inst = classical_instance(p, battery_depth);
        return Generated{"classical", inst.g, inst.d, true};
    } catch (const ParameterError&) {
        return std::nullopt;
    }
}

std::optional<Generated> draw_q_classical(gen::Rng& rng)
{
    const Mode m = Mode::exact;
    static const long q_num[] = {1, 1, 2, -1, 3, 2};
    static const long q_den[] = {2, 3, 3, 2, 2, 1};
    const long i = rng.integer(0, 5);
    QClassicalParams p{ex(q_num[i], q_den[i]),
                       {rng.rational(m, 3, 2, true), rng.rational(m), rng.rational(m)},
                       {rng.rational(m, 5, 2, true), rng.rational(m)}};
    try {
        FamilyInstance inst = q_classical_instance(p, battery_depth);
        return Generated{"qclassical", inst.g, inst.d, true};
    } catch (const ParameterError&) {
        return std::nullopt;
    }
}

std::optional<Generated> draw_dunkl(gen::Rng& rng)
{
    const Scalar eta = ex(rng.integer(1, 12), 4);
    return Generated{"dunkl", dunkl_hermite_moments(eta), dunkl_mu({eta}), false};
}

} // namespace

std::complex<double> sigma_laurent_oracle(std::complex<double> z, std::complex<double> g2,
                                          std::complex<double> g3, int max_k)
{
    using cd = std::complex<double>;
    std::vector<cd> c(static_cast<std::size_t>(max_k) + 1, cd(0.0));
    if (max_k >= 2)
        c[2] = g2 / 20.0;
    if (max_k >= 3)
        c[3] = g3 / 28.0;
    for (int k = 4; k <= max_k; ++k) {
        cd s = 0.0;
        for (int m = 2; m <= k - 2; ++m)
            s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * s;
    }
    const cd z2 = z * z;
    cd zpow = z2 * z2;
    cd sum = 0.0;
    for (int k = 2; k <= max_k; ++k) {
        sum += c[static_cast<std::size_t>(k)] * zpow / ((2.0 * k - 1.0) * (2.0 * k));
        zpow *= z2;
    }
    return z * std::exp(-sum);
}

CriterionResult classical_hahn_case()
{
    return timed(1, "classical Hahn case (1,-1,0,2,-1), exact", c1_budget, [](Recorder& rec) {
        const ClassicalParams p{{ex(1), ex(-1), ex(0)}, {ex(2), ex(-1)}};
        const FamilyInstance inst = classical_instance(p, 12);

        bool moments_ok = true;
        for (long n = 0; n <= 24; ++n)
            moments_ok = moments_ok && inst.g[static_cast<std::size_t>(n)] == ex(1, n + 1);
        rec.expect(moments_ok, "g_n = 1/(n+1) for n <= 24");

        const ClassicalReport rep = is_umbral_classical(inst.g, inst.d, 12);
        rec.expect(rep.verdict, "Q_0..Q_12 orthogonal");
        bool q_ok = rep.q.size() == 13;
        for (std::size_t n = 0; q_ok && n <= 12; ++n)
            q_ok = rep.q[n] == derivative_over(rep.p[n + 1], ex(static_cast<long>(n) + 1));
        rec.expect(q_ok, "Q_n = P'_{n+1}/(n+1)");
        rec.expect(rep.gram.pass && off_diagonal_zero(rep.gram), "Gram off-diagonal entries exactly 0 for n, m <= 12");

        rec.expect(rep.r.has_value(), "raising operator constructed");
        if (rep.r) {
            const MainSystemReport ms = verify_main_system(inst.g, rep.tau, inst.d, *rep.r, 9);
            rec.expect(ms.pass && ms.max_residual.is_zero(), "main system residual exactly 0 on the 10x10 grid");
            rec.detail("main_residual", ms.max_residual.to_string());
            rec.detail("band_width", rep.r->band().width);
        }
    });
}

CriterionResult q_classical_case()
{
    return timed(2, "q-classical case q = 1/2, exact", c2_budget, [](Recorder& rec) {
        const QClassicalParams p{ex(1, 2), {ex(1), ex(-1), ex(0)}, {ex(0), ex(1, 2)}};
        const FamilyInstance inst = q_classical_instance(p, 10);
        const ClassicalReport rep = is_umbral_classical(inst.g, inst.d, 10);
        rec.expect(rep.verdict, "is_umbral_classical to depth 10");
        rec.expect(rep.r && rep.main_system && rep.main_system->pass && rep.main_system->max_residual.is_zero(),
                   "main system exactly satisfied");
        if (rep.r) {
            bool two_diag = true;
            for (std::size_t n = 0; n < rep.r->size(); ++n)
                for (std::size_t s = 0; s < n; ++s)
                    two_diag = two_diag && rep.r->entry(n, s).is_zero();
            const BandInfo band = rep.r->band();
            rec.expect(two_diag && band.local && band.width == 1, "extracted R is two-diagonal");
            rec.detail("band_width", band.width);
        }
        const std::vector<Scalar> mu = inst.d.mu_prefix(22);
        const auto prof = min_linear_recurrence(mu, 3);
        const bool alpha_ok = prof && prof->alpha.size() == 3 && prof->alpha[0] == ex(1) &&
                              prof->alpha[1] == ex(-3, 2) && prof->alpha[2] == ex(1, 2);
        rec.expect(alpha_ok, "min_linear_recurrence(mu) = (1, -3/2, 1/2)");
        if (prof) {
            std::string a;
            for (const auto& v : prof->alpha)
                a += (a.empty() ? "" : " ") + v.to_string();
            rec.detail("alpha", "(" + a + ")");
        }
    });
}

CriterionResult krall_jacobi_case()
{
    return timed(3, "Krall-Jacobi alpha = 2, beta = 3, exact", c3_budget, [](Recorder& rec) {
        constexpr std::size_t n_max = 12;
        const FamilyInstance k = krall_instance({ex(2), ex(3)}, n_max);
        rec.expect(k.g[1] == ex(8, 9), "g_1 = 8/9");

        const EllipticModel model({ex(0), ex(0), ex(1), ex(2), ex(3)});
        const EllipticSequences seq = elliptic_mu_g(model, n_max);
        bool g_same = true;
        for (std::size_t n = 0; n <= 2 * n_max; ++n)
            g_same = g_same && seq.g[n] == k.g[n];
        rec.expect(g_same, "moments agree with the y(n) = n closed form");

        const EllipticRecurrence er = elliptic_recurrence(model, n_max);
        const MonicPolySystem p = monic_ops_from_moments(k.g, n_max + 1);
        bool rec_ok = er.A[0] + er.C[0] == ex(8, 9) && p.b(0) == ex(8, 9);
        for (std::size_t n = 0; n <= n_max; ++n) {
            rec_ok = rec_ok && p.b(n) == er.b[n];
            if (n >= 1)
                rec_ok = rec_ok && p.u(n) == er.u[n - 1];
        }
        rec.expect(rec_ok, "b_n = A_n + C_n and u_n = A_{n-1} C_n match the moment pipeline for n <= 12");
        rec.detail("b_0", p.b(0).to_string());

        const ClassicalReport rep = is_umbral_classical(k.g, k.d, n_max);
        rec.expect(rep.verdict && off_diagonal_zero(rep.gram), "Q_n orthogonal exactly");

        // Derived moments against the closed form, up to one global factor.
        const Scalar c = k.g_tilde->raw(0) / rep.tau[0];
        const Scalar c_ell = seq.g_tilde_raw[0] / rep.tau[0];
        bool ratio_ok = true;
        for (std::size_t n = 0; n + 2 <= 2 * n_max; ++n)
            ratio_ok = ratio_ok && k.g_tilde->raw(n) == c * rep.tau[n] &&
                       seq.g_tilde_raw[n] == c_ell * rep.tau[n];
        rec.expect(ratio_ok, "derived moments match the closed form up to a global rational scalar");
        rec.detail("tilde_scalar", c.to_string());

        const FamilyInstance shifted = krall_instance({ex(4), ex(7)}, n_max);
        bool tau_ok = true;
        for (std::size_t n = 0; n <= 2 * n_max; ++n)
            tau_ok = tau_ok && rep.tau[n] == shifted.g[n];
        const MonicPolySystem p2 = monic_ops_from_moments(shifted.g, n_max);
        bool q_ok = true;
        for (std::size_t n = 0; n <= n_max; ++n)
            q_ok = q_ok && rep.q[n] == p2[n];
        const ShiftReport sh = shift_property_check(model, n_max, Tolerance::default_tolerance());
        rec.expect(tau_ok && q_ok && sh.pass, "derived system equals the (4, 7) instance");
    });
}

CriterionResult elliptic_suite()
{
    return timed(4, "elliptic suite (4, 1, 0.1, 0.3, 0.7)", c4_budget, [](Recorder& rec) {
        const auto f = [](double v) { return Scalar::floating(v); };
        const EllipticModel model({f(4), f(1), f(0.1), f(0.3), f(0.7)});

        const DegenerateIdentityReport ids = check_degenerate_identities(model, 8, Tolerance(red_mu_c_tol, 0.0));
        rec.expect(ids.red_mu_c < red_mu_c_tol, "ratio identity residual < 1e-10 for 1 <= m, n <= 8");
        rec.detail("red_mu_c", ids.red_mu_c);

        constexpr std::size_t pn = 6;
        const FamilyInstance inst = elliptic_instance(model, pn);
        const MonicPolySystem hankel = monic_ops_from_moments(inst.g, pn);
        const EllipticRecurrence er = elliptic_recurrence(model, pn);
        const MonicPolySystem recur = ops_from_recurrence(er.b, er.u, pn);
        double worst = 0.0;
        for (std::size_t n = 0; n <= pn; ++n) {
            const Polynomial formula = elliptic_P(n, model);
            worst = std::max({worst, relative_diff(hankel[n], formula), relative_diff(recur[n], formula),
                              relative_diff(hankel[n], recur[n])});
        }
        rec.expect(worst < three_way_tol, "three-way P_n agreement < 1e-8 relative for n <= 6");
        rec.detail("three_way", worst);

        const ShiftReport sh = shift_property_check(model, 5, Tolerance(shift_tol, 0.0));
        rec.expect(sh.max_residual < shift_tol, "shift residual < 1e-8 for n <= 5");
        rec.detail("shift", sh.max_residual);

        const SigmaEvaluator sigma({4.0, 0.0}, {1.0, 0.0});
        gen::Rng rng(4);
        double sig = 0.0;
        for (std::size_t i = 0; i < sigma_samples; ++i) {
            const double r = sigma_sample_radius * std::sqrt(rng.uniform(0.0, 1.0));
            const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const std::complex<double> z = std::polar(r, t);
            const auto ref = sigma_laurent_oracle(z, {4.0, 0.0}, {1.0, 0.0});
            sig = std::max(sig, std::abs(sigma(z) - ref) / std::abs(ref));
        }
        rec.expect(sig < sigma_oracle_tol, "sigma agrees with the Laurent oracle < 1e-12 on 100 points");
        rec.detail("sigma_oracle", sig);
    });
}

CriterionResult structural_battery(std::uint64_t seed)
{
    return timed(5, "structural property battery (seed " + std::to_string(seed) + ")", c5_budget,
                 [seed](Recorder& rec) {
        gen::Rng rng(seed);
        const Mode m = Mode::exact;
        constexpr std::size_t n = battery_depth;

        // Equivalence transforms preserve the verdict, both ways.
        const FamilyInstance legendre = classical_instance({{ex(1), ex(-1), ex(0)}, {ex(2), ex(-1)}}, n);
        const std::vector<Generated> bases{
            {"classical", legendre.g, legendre.d, true},
            {"qclassical", q_classical_instance({ex(1, 2), {ex(1), ex(-1), ex(0)}, {ex(0), ex(1, 2)}}, n).g,
             q_classical_instance({ex(1, 2), {ex(1), ex(-1), ex(0)}, {ex(0), ex(1, 2)}}, n).d, true},
            {"krall", krall_instance({ex(2), ex(3)}, n).g, krall_instance({ex(2), ex(3)}, n).d, false},
            {"control", legendre.g,
             UmbralDerivative(m, [](std::size_t k) { return k == 0 ? ex(0) : ex(1); }, "mu_n = 1"), false},
        };
        std::size_t transforms = 0, preserved = 0;
        for (const auto& b : bases) {
            const bool base = is_umbral_classical(b.g, b.d, 5).verdict;
            rec.expect(base == (b.family != "control"), b.family + " base verdict");
            for (std::size_t i = 0; i < transform_triples; ++i) {
                const Scalar a = rng.rational(m, 4, 3, true), q = rng.rational(m, 4, 3, true),
                             p = rng.rational(m, 4, 3, true);
                const EquivalentInstance e = equivalence_transform(b.g, b.d, a, q, p);
                ++transforms;
                if (is_umbral_classical(e.g, e.d, 5).verdict == base)
                    ++preserved;
            }
        }
        rec.expect(preserved == transforms, "equivalence transforms preserve the verdict");
        rec.detail("transforms", std::to_string(preserved) + "/" + std::to_string(transforms));

        // Symmetry of L on the three classical-type bases.
        std::size_t sym_ok = 0, sym_total = 0;
        for (std::size_t bi = 0; bi < 3; ++bi) {
            const auto& b = bases[bi];
            const ClassicalReport rep = is_umbral_classical(b.g, b.d, n);
            if (!rep.r) {
                rec.expect(false, b.family + ": no raising operator for the symmetry test");
                continue;
            }
            const MonomialOperator l = compose_RD(*rep.r, b.d);
            for (std::size_t i = 0; i < symmetry_pairs; ++i) {
                const Polynomial f = rng.polynomial(n, m), h = rng.polynomial(n, m);
                ++sym_total;
                if (symmetry_check(l, b.g, f, h))
                    ++sym_ok;
            }
        }
        rec.expect(sym_ok == sym_total, "<f, L h> = <h, L f> exactly");
        rec.detail("symmetry", std::to_string(sym_ok) + "/" + std::to_string(sym_total));

        // Generated local instances: band width j <=> minimal mu recurrence of order j + 1.
        std::vector<Generated> pool;
        std::size_t skipped = 0;
        const std::array<std::function<std::optional<Generated>(gen::Rng&)>, 3> draws{draw_classical, draw_q_classical,
                                                                                     draw_dunkl};
        const std::array<std::size_t, 3> wanted{generated_per_family, generated_per_family, 4};
        std::size_t corr_ok = 0, corr_total = 0, k_ok = 0, k_total = 0, chr_ok = 0, chr_total = 0;
        for (std::size_t fi = 0; fi < draws.size(); ++fi) {
            std::size_t accepted = 0, attempts = 0;
            while (accepted < wanted[fi] && attempts++ < 200) {
                const auto inst = draws[fi](rng);
                if (!inst) {
                    ++skipped;
                    continue;
                }
                std::optional<ClassicalReport> rep;
                try {
                    rep = is_umbral_classical(inst->g, inst->d, n);
                } catch (const DegenerateFunctional&) {
                    ++skipped;
                    continue;
                }
                if (rep->status == ClassicalStatus::degenerate_tau) {
                    ++skipped;
                    continue;
                }
                ++accepted;
                rec.expect(rep->verdict && rep->r && rep->main_system && rep->main_system->pass,
                           inst->family + " instance not classical");
                if (!rep->r)
                    continue;
                const BandInfo band = rep->r->band();
                const std::vector<Scalar> mu = inst->d.mu_prefix(2 * n + 2);
                const auto prof = min_linear_recurrence(mu, 4);
                ++corr_total;
                // j + 1 diagonals force a recurrence of order <= j + 1; a minimal
                // recurrence of order r allows at most r + 1 diagonals.
                const bool forward = !band.local || (prof && prof->order() <= band.width + 1);
                const bool backward = !prof || (band.local && band.width <= prof->order());
                if (band.local && prof && forward && backward)
                    ++corr_ok;
                if (!inst->two_diagonal_family || !prof)
                    continue;
                ++k_total;
                if (k_coefficient_check(*rep->r, *prof, n).pass)
                    ++k_ok;
                ++chr_total;
                const ChristoffelResult cr = christoffel_factor(inst->g, rep->tau, 1);
                if (cr.consistent && cr.pi.degree() <= 2)
                    ++chr_ok;
            }
            rec.expect(accepted == wanted[fi], "not enough nondegenerate generated instances");
        }

        // Nonlocal control: Krall has neither a finite band nor a short mu recurrence.
        {
            const FamilyInstance kr = krall_instance({ex(2), ex(3)}, n);
            const ClassicalReport rep = is_umbral_classical(kr.g, kr.d, n);
            const auto prof = min_linear_recurrence(kr.d.mu_prefix(2 * n + 2), 4);
            ++corr_total;
            if (rep.r && !rep.r->band().local && !prof)
                ++corr_ok;
        }
        rec.expect(corr_ok == corr_total, "local R <=> mu recurrence order");
        rec.expect(k_ok == k_total && k_total > 0, "K coefficient recurrence on classical and q instances");
        rec.expect(chr_ok == chr_total && chr_total > 0, "Christoffel factor with deg pi <= 2 on j = 1 instances");
        rec.detail("correspondence", std::to_string(corr_ok) + "/" + std::to_string(corr_total));
        rec.detail("k_check", std::to_string(k_ok) + "/" + std::to_string(k_total));
        rec.detail("christoffel", std::to_string(chr_ok) + "/" + std::to_string(chr_total));
        rec.detail("skipped_draws", skipped);
    });
}

CriterionResult negative_controls(std::uint64_t seed)
{
    return timed(6, "negative controls", c6_budget, [seed](Recorder& rec) {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() /
                             ("umbral-controls-" + std::to_string(::getpid()) + "-" + std::to_string(seed));
        fs::create_directories(dir);
        const auto write = [&](const std::string& name, const std::string& body) {
            std::ofstream(dir / name) << body;
            return (dir / name).string();
        };

        cli::RunConfig base;
        base.command = "check";
        base.family = "classical";
        base.xi = {"1", "-1", "0"};
        base.eta = {"2", "-1"};
        base.depth = 8;
        base.seed = seed;

        std::size_t rejected = 0;
        const auto expect_code = [&](const std::string& what, const cli::RunConfig& cfg, int code,
                                     bool counts_as_falsified) {
            const cli::CommandResult r = cli::run(cfg);
            rec.expect(r.exit_code == code, what + ": exit " + std::to_string(r.exit_code) + ", expected " +
                                                std::to_string(code) + " (" + r.message + ")");
            if (r.exit_code == code && counts_as_falsified)
                ++rejected;
            return r;
        };

        expect_code("unperturbed baseline", base, cli::exit_pass, false);

        cli::RunConfig c = base;
        c.perturb_mu = "3:1/7";
        expect_code("perturbed mu_3", c, cli::exit_falsified, true);

        c = base;
        c.perturb_g = "4:1/1000";
        expect_code("perturbed g_4", c, cli::exit_falsified, true);

        c = base;
        c.perturb_r = "4,3:1";
        const cli::CommandResult pr = expect_code("perturbed R_{4,3}", c, cli::exit_falsified, true);
        rec.expect(pr.report.contains("failing_cell") && pr.report["failing_cell"].is_array() &&
                       pr.report["failing_cell"][0] == 4,
                   "perturbed R reports a failing cell in column 4");

        std::string legendre;
        for (int k = 0; k <= 40; ++k)
            legendre += "1/" + std::to_string(k + 1) + "\n";
        std::string ones = "0\n";
        for (int k = 1; k <= 40; ++k)
            ones += "1\n";
        c = base;
        c.family.clear();
        c.moments_file = write("legendre.csv", legendre);
        c.mu_file = write("ones.csv", ones);
        const cli::CommandResult mc = expect_code("mu_n = 1 with Legendre moments", c, cli::exit_falsified, true);
        rec.expect(mc.report.contains("failing_cell") && !mc.report["failing_cell"].is_null(),
                   "mu_n = 1 control reports a failing cell");

        c = base;
        c.family.clear();
        c.moments_file = write("zero.json", "[\"0\", \"1/2\", \"1/3\", \"1/4\", \"1/5\"]");
        expect_code("g_0 = 0", c, cli::exit_invalid, false);

        c = base;
        c.family = "krall";
        c.alpha = "2";
        c.beta = "2";
        expect_code("krall beta = alpha", c, cli::exit_invalid, false);

        cli::RunConfig e;
        e.command = "elliptic";
        e.alpha = "0.5";
        e.beta = "0.5";
        e.depth = 4;
        expect_code("elliptic beta = alpha", e, cli::exit_invalid, false);

        rec.expect(rejected >= 3, "at least three falsified instances rejected");
        rec.detail("rejected", rejected);
        std::error_code ec;
        fs::remove_all(dir, ec);
    });
}

std::vector<CriterionResult> run_battery(std::uint64_t seed, bool parallel)
{
    const std::vector<std::function<CriterionResult()>> jobs{
        classical_hahn_case,
        q_classical_case,
        krall_jacobi_case,
        elliptic_suite,
        [seed] { return structural_battery(seed); },
        [seed] { return negative_controls(seed); },
    };
    std::vector<CriterionResult> out;
    if (!parallel) {
        for (const auto& j : jobs)
            out.push_back(j());
        return out;
    }
    std::vector<std::future<CriterionResult>> futures;
    for (const auto& j : jobs)
        futures.push_back(std::async(std::launch::async, j));
    for (auto& f : futures)
        out.push_back(f.get());
    return out;
}

std::string format_line(const CriterionResult& r)
{
    std::ostringstream os;
    os << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  ("
       << std::fixed << std::setprecision(3) << r.seconds << " s, budget " << std::setprecision(0)
       << r.budget_seconds << " s)";
    for (const auto& d : r.details)
        os << "  " << d;
    for (const auto& f : r.failures)
        os << "\n    failed: " << f;
    return os.str();
}

bool all_pass(const std::vector<CriterionResult>& results)
{
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return true;
}

void write_summary(const std::vector<CriterionResult>& results, const std::string& path)
{
    json j = json::array();
    for (const auto& r : results)
        j.push_back({{"criterion", r.id},
                     {"title", r.title},
                     {"pass", r.pass},
                     {"seconds", r.seconds},
                     {"budget_seconds", r.budget_seconds},
                     {"details", r.details},
                     {"failures", r.failures}});
    std::ofstream out(path);
    if (!out)
        throw ParameterError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace umbral::acceptance

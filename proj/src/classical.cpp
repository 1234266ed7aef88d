#include "umbral/classical.hpp"

#include <string>

namespace umbral {

namespace {

bool negligible(const Scalar& residual, double scale, const Tolerance& tol)
{
    if (residual.is_exact())
        return residual.is_zero();
    return residual.magnitude() <= tol.abs_eps + tol.rel_eps * scale;
}

double coeff_scale(const Polynomial& p)
{
    double m = 0.0;
    for (const auto& c : p.coefficients())
        m = std::max(m, c.magnitude());
    return m;
}

// Exact: zero residual required. Floating: relative to the larger operand.
bool poly_close(const Polynomial& a, const Polynomial& b, const Tolerance& tol, double& worst)
{
    const double diff = max_coeff_diff(a, b);
    worst = std::max(worst, diff);
    if (a.mode() == Mode::exact)
        return a == b;
    return diff <= tol.abs_eps + tol.rel_eps * std::max(coeff_scale(a), coeff_scale(b));
}

} // namespace

std::vector<Polynomial> derived_polys(const MonicPolySystem& p, const UmbralDerivative& d)
{
    std::vector<Polynomial> q;
    q.reserve(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
        std::vector<Scalar> c = d.apply(p[n + 1]).scaled(Scalar::one(d.mode()) / d.mu(n + 1)).coefficients();
        // mu_{n+1} / mu_{n+1} may round away from 1.
        c.back() = Scalar::one(d.mode());
        q.emplace_back(std::move(c), d.mode());
    }
    return q;
}

MomentSequence derived_moments(const MomentSequence& g, const UmbralDerivative& d)
{
    const Scalar g1 = g[1];
    const Scalar h1 = g[2] - g1 * g1;
    if (h1.is_zero())
        throw DegenerateFunctional("degenerate functional: Hankel determinant Δ_2 vanishes", 2);
    const Scalar mu1 = d.mu(1);
    return MomentSequence::from_rule(g.mode(), [g, d, g1, h1, mu1](std::size_t n) {
        return mu1 * (g[n + 2] - g1 * g[n + 1]) / (d.mu(n + 1) * h1);
    });
}

std::vector<Scalar> derived_norms(std::span<const Polynomial> q, const MomentSequence& tau)
{
    std::vector<Scalar> out;
    out.reserve(q.size());
    for (std::size_t n = 0; n < q.size(); ++n) {
        Scalar acc = Scalar::zero(tau.mode());
        for (std::size_t s = 0; s <= n; ++s)
            acc += q[n].coeff(s) * tau[s + n];
        out.push_back(acc);
    }
    return out;
}

RaisingOperator construct_R(const MonicPolySystem& p, std::span<const Polynomial> q,
                            std::span<const Scalar> h_tilde, const UmbralDerivative& d)
{
    const std::size_t count = q.size();
    if (p.size() < count)
        throw ParameterError("construct_R: P must reach degree " + std::to_string(count));
    if (h_tilde.size() < count)
        throw ParameterError("construct_R: need h~_0..h~_{N}");
    const Mode mode = d.mode();

    std::vector<Scalar> nu;
    for (std::size_t n = 0; n < count; ++n) {
        const Scalar& h_next = p.h(n + 1);
        if (h_next.is_zero())
            throw DegenerateFunctional("construct_R: h_" + std::to_string(n + 1) + " vanishes", n + 2);
        if (h_tilde[n].is_zero())
            throw DegenerateFunctional("construct_R: derived norm h~_" + std::to_string(n) +
                                           " vanishes",
                                       n + 1);
        nu.push_back(d.mu(n + 1) * h_tilde[n] / h_next);
    }

    // x^n = Σ_k t[n][k] Q_k, by forward substitution on the monic Q_n.
    std::vector<std::vector<Scalar>> t;
    std::vector<Polynomial> cols;
    for (std::size_t n = 0; n < count; ++n) {
        std::vector<Scalar> row(n + 1, Scalar::zero(mode));
        row[n] = Scalar::one(mode);
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar c = q[n].coeff(k);
            if (c.is_zero())
                continue;
            for (std::size_t i = 0; i <= k; ++i)
                row[i] -= c * t[k][i];
        }
        Polynomial col(mode);
        for (std::size_t k = 0; k <= n; ++k)
            if (!row[k].is_zero())
                col += p[k + 1].scaled(row[k] * nu[k]);
        cols.push_back(std::move(col));
        t.push_back(std::move(row));
    }
    return RaisingOperator(std::move(cols));
}

MainSystemReport verify_main_system(const MomentSequence& g, const MomentSequence& g_tilde,
                                    const UmbralDerivative& d, const RaisingOperator& r,
                                    std::size_t depth, const Tolerance& tol)
{
    if (r.size() < depth + 1)
        throw ParameterError("verify_main_system: R known only up to column " +
                             std::to_string(r.size()) + "-1");
    MainSystemReport rep;
    rep.depth = depth;
    rep.max_residual = Scalar::zero(g.mode());
    rep.pass = true;
    double worst = -1.0;
    for (std::size_t m = 0; m <= depth; ++m) {
        const Polynomial& col = r.column(m);
        for (std::size_t n = 0; n <= depth; ++n) {
            Scalar lhs = Scalar::zero(g.mode());
            if (n + m >= 1)
                lhs = d.mu(n) * g_tilde[n + m - 1];
            Scalar rhs = Scalar::zero(g.mode());
            double scale = lhs.magnitude();
            for (std::size_t s = 0; s <= m + 1; ++s) {
                const Scalar term = col.coeff(s) * g[n + s];
                scale += term.magnitude();
                rhs += term;
            }
            const Scalar res = lhs - rhs;
            if (res.magnitude() > worst) {
                worst = res.magnitude();
                rep.max_residual = res;
            }
            if (!negligible(res, scale, tol) && rep.pass) {
                rep.pass = false;
                rep.failing_cell = std::array<std::size_t, 2>{m, n};
            }
        }
    }
    return rep;
}

std::string_view to_string(ClassicalStatus status)
{
    switch (status) {
    case ClassicalStatus::classical:
        return "classical";
    case ClassicalStatus::not_orthogonal:
        return "not_orthogonal";
    case ClassicalStatus::degenerate_tau:
        return "degenerate_tau";
    }
    return "unknown";
}

ClassicalReport is_umbral_classical(const MomentSequence& g, const UmbralDerivative& d,
                                    std::size_t depth, const Tolerance& tol)
{
    if (g.mode() != d.mode())
        throw ModeMismatch("moments and umbral derivative use different arithmetic modes");
    MonicPolySystem p = monic_ops_from_moments(g, depth + 1, tol);
    std::vector<Polynomial> q = derived_polys(p, d);
    MomentSequence tau = derived_moments(g, d);

    // The closed form must agree with the moments forced by <tau, Q_n> = 0.
    const MomentSequence forced = moments_from_ops(std::span(q).subspan(1));
    for (std::size_t n = 0; n <= depth; ++n)
        if (!scalar_eq(forced[n], tau[n], tol))
            throw Error("internal: derived moments disagree with <tau, Q_n> = 0 at n = " +
                        std::to_string(n));

    ClassicalReport rep{.verdict = false,
                        .status = ClassicalStatus::not_orthogonal,
                        .depth = depth,
                        .p = std::move(p),
                        .q = std::move(q),
                        .tau = tau,
                        .tau_degenerate_at = std::nullopt,
                        .gram = {},
                        .r = std::nullopt,
                        .main_system = std::nullopt};

    const HankelReport th = hankel_determinants(tau, depth + 1, tol);
    rep.gram = gram_check(rep.q, tau, tol);
    if (th.first_zero) {
        rep.tau_degenerate_at = th.first_zero;
        rep.status = ClassicalStatus::degenerate_tau;
        return rep;
    }

    const std::vector<Scalar> ht = derived_norms(rep.q, tau);
    bool norms_ok = true;
    for (const auto& v : ht)
        norms_ok = norms_ok && !v.is_zero(tol);
    if (norms_ok) {
        rep.r = construct_R(rep.p, rep.q, ht, d);
        rep.main_system = verify_main_system(g, tau, d, *rep.r, depth, tol);
    }
    rep.verdict = rep.gram.pass;
    rep.status = rep.verdict ? ClassicalStatus::classical : ClassicalStatus::not_orthogonal;
    return rep;
}

EigenReport eigen_check(const MonicPolySystem& p, std::span<const Polynomial> q,
                        const UmbralDerivative& d, const RaisingOperator& r, const Tolerance& tol)
{
    const Mode mode = d.mode();
    const MonomialOperator l = compose_RD(r, d);
    const MonomialOperator lt = compose_DR(d, r);

    EigenReport rep;
    auto& lambda = rep.data.lambda;
    auto& tau = rep.data.tau_seq;
    lambda.push_back(Scalar::zero(mode));
    tau.push_back(Scalar::zero(mode));
    for (std::size_t n = 1; n <= r.size(); ++n) {
        lambda.push_back(d.mu(n) * r.nu(n));
        tau.push_back(d.mu(n) * r.rho(n - 1));
    }

    bool ok = true;
    const std::size_t np = std::min(p.size(), r.size());
    for (std::size_t n = 0; n <= np; ++n)
        ok = poly_close(l.apply(p[n]), p[n].scaled(lambda[n]), tol, rep.residual_L) && ok;
    const std::size_t nq = std::min(q.size(), r.size());
    for (std::size_t n = 0; n < nq; ++n)
        ok = poly_close(lt.apply(q[n]), q[n].scaled(lambda[n + 1]), tol, rep.residual_Lt) && ok;
    rep.pass = ok;

    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = i + 1; j < lambda.size(); ++j)
            if (scalar_eq(lambda[i], lambda[j], tol))
                rep.lambdas_distinct = false;

    rep.hypergeometric = true;
    double ignored = 0.0;
    for (std::size_t n = 0; n < l.size(); ++n) {
        Polynomial expect = Polynomial::monomial(n, lambda[n]);
        if (n >= 1)
            expect += Polynomial::monomial(n - 1, tau[n]);
        if (!poly_close(l.column(n), expect, tol, ignored))
            rep.hypergeometric = false;
    }
    return rep;
}

bool symmetry_check(const MonomialOperator& l, const MomentSequence& g, const Polynomial& f,
                    const Polynomial& h, const Tolerance& tol)
{
    return scalar_eq(bilinear(g, f, l.apply(h)), bilinear(g, h, l.apply(f)), tol);
}

} // namespace umbral

#include "umbral/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "umbral/linalg.hpp"

namespace umbral {

namespace {

bool negligible(const Scalar& residual, double scale, const Tolerance& tol)
{
    if (residual.is_exact())
        return residual.is_zero();
    return residual.magnitude() <= tol.abs_eps + tol.rel_eps * scale;
}

Scalar horner(std::span<const Scalar> c, const Scalar& z)
{
    Scalar acc = Scalar::zero(z.mode());
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * z + c[i];
    return acc;
}

// Continued-fraction convergents of x, tried in order until one is an
// exact root.
std::optional<Scalar> rational_root_near(double x, std::span<const Scalar> c)
{
    if (!std::isfinite(x))
        return std::nullopt;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = x;
    for (int step = 0; step < 40; ++step) {
        const double a = std::floor(rest);
        if (std::abs(a) > 1e15)
            break;
        const mpz_class ai(static_cast<long>(a));
        const mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > mpz_class("1000000000000"))
            break;
        const Scalar cand(mpq_class(p2, q2));
        if (horner(c, cand).is_zero())
            return cand;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = rest - a;
        if (frac < 1e-15)
            break;
        rest = 1.0 / frac;
    }
    return std::nullopt;
}

double arg_2pi(std::complex<double> z)
{
    double a = std::arg(z);
    if (a < -1e-12)
        a += 2.0 * std::numbers::pi;
    return std::max(a, 0.0);
}

std::vector<std::complex<double>> to_complex(std::span<const Scalar> v)
{
    std::vector<std::complex<double>> out;
    for (const auto& s : v)
        out.push_back(s.to_complex());
    return out;
}

} // namespace

std::optional<RecurrenceProfile> min_linear_recurrence(std::span<const Scalar> mu,
                                                       std::size_t max_order, const Tolerance& tol)
{
    if (mu.size() < 2 * max_order + 2)
        throw InsufficientData("min_linear_recurrence: need at least " +
                               std::to_string(2 * max_order + 2) + " values of mu");
    if (mu.empty())
        return std::nullopt;
    const Mode mode = mu.front().mode();
    const std::size_t len = mu.size();
    for (std::size_t r = 1; r <= max_order; ++r) {
        Matrix a(len - r, r + 1, mode);
        for (std::size_t n = r; n < len; ++n)
            for (std::size_t i = 0; i <= r; ++i)
                a(n - r, i) = mu[n - i];
        const NullspaceResult ns = nullspace(a, tol);
        for (const auto& v : ns.basis) {
            if (v[0].is_zero(tol))
                continue;
            RecurrenceProfile prof;
            for (const auto& c : v)
                prof.alpha.push_back(c / v[0]);
            prof.alpha[0] = Scalar::one(mode);
            prof.condition = ns.condition;
            std::vector<std::complex<double>> c(r + 1);
            for (std::size_t k = 0; k <= r; ++k)
                c[k] = prof.alpha[r - k].to_complex();
            prof.characteristic_roots = polynomial_roots(c);
            return prof;
        }
    }
    return std::nullopt;
}

RecurrenceProfile normalize_profile(RecurrenceProfile profile, std::span<const Scalar> mu,
                                    const Tolerance& tol)
{
    const std::size_t order = profile.order();
    if (order == 0)
        throw ParameterError("normalize_profile: empty recurrence");
    const Mode mode = profile.alpha.front().mode();
    const std::span<const Scalar> alpha(profile.alpha);

    Scalar sum = Scalar::zero(mode);
    double abs_sum = 0.0;
    for (const auto& a : alpha) {
        sum += a;
        abs_sum += a.magnitude();
    }

    std::optional<Scalar> q;
    if (negligible(sum, abs_sum, tol)) {
        q = Scalar::one(mode);
    } else {
        auto roots = polynomial_roots(to_complex(alpha));
        double biggest = 0.0;
        for (const auto& z : roots)
            biggest = std::max(biggest, std::abs(z));
        std::erase_if(roots, [&](const auto& z) { return std::abs(z) <= 1e-12 * biggest; });
        if (roots.empty())
            throw Error("internal: characteristic polynomial has only zero roots");
        std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
            const double dx = std::abs(std::abs(x) - 1.0), dy = std::abs(std::abs(y) - 1.0);
            if (std::abs(dx - dy) > 1e-9)
                return dx < dy;
            return arg_2pi(x) < arg_2pi(y) - 1e-12;
        });
        if (mode == Mode::floating) {
            q = Scalar(roots.front());
        } else {
            for (const auto& z : roots) {
                if (std::abs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z)))
                    continue;
                if ((q = rational_root_near(z.real(), alpha)))
                    break;
            }
            if (!q)
                throw Error("normalize_profile: no rational root of Σ α_i q^i; exact normalization "
                            "unavailable (use floating mode)");
        }
    }

    profile.q = *q;
    profile.normalized_alpha.clear();
    Scalar qi = Scalar::one(mode);
    for (const auto& a : alpha) {
        profile.normalized_alpha.push_back(a * qi);
        qi *= *q;
    }

    const std::size_t j = order - 1;
    std::vector<Scalar> beta;
    Scalar run = Scalar::zero(mode);
    for (std::size_t i = 0; i <= j; ++i) {
        run += profile.normalized_alpha[i];
        beta.push_back(run);
    }

    std::vector<Scalar> scaled_mu;
    Scalar qn = Scalar::one(mode);
    for (const auto& m : mu) {
        scaled_mu.push_back(qn * m);
        qn *= *q;
    }
    if (scaled_mu.size() <= j + 1)
        throw InsufficientData("normalize_profile: prefix too short");

    std::optional<Scalar> y0;
    for (std::size_t n = j; n < scaled_mu.size(); ++n) {
        Scalar y = Scalar::zero(mode);
        for (std::size_t i = 0; i <= j; ++i)
            y += beta[i] * scaled_mu[n - i];
        if (!y0)
            y0 = y;
        else if (!scalar_eq(*y0, y, tol))
            throw Error("normalize_profile: recurrence does not hold on the supplied prefix");
    }
    if (y0->is_zero(tol))
        throw Error("normalize_profile: Σ β_i mu_{n-i} vanishes; recurrence order is not minimal");
    profile.gamma = Scalar::one(mode) / *y0;
    for (auto& b : beta)
        b *= *profile.gamma;
    profile.beta = std::move(beta);
    return profile;
}

ChristoffelResult christoffel_factor(const MomentSequence& g, const MomentSequence& g_tilde,
                                     std::size_t j, std::size_t equations, const Tolerance& tol)
{
    if (j == 0)
        throw ParameterError("christoffel_factor: j must be at least 1");
    std::size_t count = equations == 0 ? 2 * j + 8 : equations;
    if (auto lim = g_tilde.limit())
        count = std::min(count, *lim + 1 >= j ? *lim + 1 - j : 0);
    if (auto lim = g.limit())
        count = std::min(count, *lim >= j + 1 ? *lim - j - 1 : 0);
    const std::size_t unknowns = j + 2;
    if (count < unknowns)
        throw InsufficientData("christoffel_factor: not enough moments for " +
                               std::to_string(unknowns) + " unknowns");

    const Mode mode = g.mode();
    Matrix a(count, unknowns, mode);
    std::vector<Scalar> b;
    for (std::size_t n = 0; n < count; ++n) {
        for (std::size_t k = 0; k < unknowns; ++k)
            a(n, k) = g[n + j + 1 - k]; // s = k - 1
        b.push_back(g_tilde[n + j - 1]);
    }
    const OverdeterminedSolution sol = solve_overdetermined(a, b, tol);

    ChristoffelResult res;
    res.consistent = sol.consistent;
    res.epsilon = sol.x;
    res.max_residual = sol.max_residual;
    res.equations = count;
    std::vector<Scalar> pc(j + 2, Scalar::zero(mode));
    for (std::size_t k = 0; k < unknowns; ++k)
        pc[j + 1 - k] = sol.x[k]; // x^{j-s}
    res.pi = Polynomial(std::move(pc), mode);
    return res;
}

ChristoffelResult christoffel_factor(const MomentSequence& g, const MomentSequence& g_tilde,
                                     RecurrenceProfile& profile, const Tolerance& tol)
{
    ChristoffelResult res = christoffel_factor(g, g_tilde, profile.j(), 0, tol);
    profile.epsilon = res.epsilon;
    profile.christoffel = res.pi;
    return res;
}

KCheckReport k_coefficient_check(const RaisingOperator& r, const RecurrenceProfile& profile,
                                 std::size_t depth, const Tolerance& tol)
{
    KCheckReport rep;
    const std::size_t order = profile.order();
    if (order == 0)
        throw ParameterError("k_coefficient_check: empty recurrence");
    const std::size_t j = order - 1;
    rep.diagonal_residuals.assign(j + 2, 0.0);
    rep.pass = true;
    if (r.size() == 0)
        return rep;
    const std::size_t top = std::min(depth, r.size() - 1);
    for (std::size_t m = 0; m + order <= top; ++m) {
        ++rep.windows;
        for (int s = -1; s <= static_cast<int>(j); ++s) {
            Scalar acc = Scalar::zero(r.mode());
            double scale = 0.0;
            for (std::size_t k = 0; k <= order; ++k) {
                const Scalar term = profile.alpha[k] * r.K(m + k, s);
                scale += term.magnitude();
                acc += term;
            }
            auto& worst = rep.diagonal_residuals[static_cast<std::size_t>(s + 1)];
            worst = std::max(worst, acc.magnitude());
            rep.max_residual = std::max(rep.max_residual, acc.magnitude());
            if (!negligible(acc, scale, tol))
                rep.pass = false;
        }
    }
    return rep;
}

EquivalentInstance equivalence_transform(const MomentSequence& g, const UmbralDerivative& d,
                                         const Scalar& a, const Scalar& q, const Scalar& p)
{
    if (a.is_zero() || q.is_zero() || p.is_zero())
        throw ParameterError("equivalence_transform: parameters must be nonzero");
    require_same_mode(a, q);
    require_same_mode(a, p);
    if (a.mode() != g.mode() || a.mode() != d.mode())
        throw ModeMismatch("equivalence_transform: parameters and instance use different modes");
    auto g2 = MomentSequence::from_rule(g.mode(), [g, p](std::size_t n) {
        return pow(p, static_cast<long>(n)) * g.raw(n);
    });
    UmbralDerivative d2(
        d.mode(), [d, a, q](std::size_t n) { return a * pow(q, static_cast<long>(n)) * d.mu(n); },
        d.label().empty() ? std::string{} : "equivalent(" + d.label() + ")");
    return {std::move(g2), std::move(d2)};
}

UmbralDerivative build_local_D(std::span<const CharacteristicTerm> terms)
{
    if (terms.empty())
        throw ParameterError("build_local_D: need at least one characteristic term");
    const Mode mode = terms.front().root.mode();
    Scalar mu0 = Scalar::zero(mode);
    double scale = 0.0;
    for (const auto& t : terms) {
        require_same_mode(t.root, mu0);
        if (t.weight.mode() != mode)
            throw ModeMismatch("build_local_D: weight of the wrong mode");
        const Scalar w0 = t.weight.evaluate(Scalar::zero(mode));
        mu0 += w0;
        scale += w0.magnitude();
    }
    if (!negligible(mu0, scale, Tolerance::default_tolerance()))
        throw ParameterError("build_local_D: weights must sum to zero so that mu_0 = 0");

    std::ostringstream label;
    label << "x^{-1}[";
    for (std::size_t k = 0; k < terms.size(); ++k)
        label << (k ? " + " : "") << "(" << terms[k].weight << ")(x∂) T_{" << terms[k].root << "}";
    label << "]";

    std::vector<CharacteristicTerm> copy(terms.begin(), terms.end());
    return UmbralDerivative(
        mode,
        [copy, mode](std::size_t n) {
            if (n == 0)
                return Scalar::zero(mode);
            const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
            Scalar acc = Scalar::zero(mode);
            for (const auto& t : copy)
                acc += t.weight.evaluate(sn) * pow(t.root, static_cast<long>(n));
            return acc;
        },
        label.str());
}

UmbralDerivative build_local_D(std::span<const Scalar> roots, std::span<const Scalar> weights)
{
    if (roots.size() != weights.size())
        throw ParameterError("build_local_D: roots and weights differ in length");
    std::vector<CharacteristicTerm> terms;
    for (std::size_t k = 0; k < roots.size(); ++k)
        terms.push_back({roots[k], Polynomial::constant(weights[k])});
    return build_local_D(terms);
}

} // namespace umbral

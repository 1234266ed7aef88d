#include "umbral/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

namespace umbral {

namespace {

using complex = std::complex<double>;

// Below this |σ| an argument is treated as a lattice point.
constexpr double lattice_eps = 1e-12;

bool negligible(double residual, double scale, const Tolerance& tol)
{
    return residual <= tol.abs_eps + tol.rel_eps * scale;
}

struct Comparison {
    double residual;
    bool ok;
};

// Exact operands must agree exactly; floating ones within abs_eps plus
// rel_eps times the larger of |lhs|, |rhs| and extra_scale.
Comparison compare(const Scalar& lhs, const Scalar& rhs, double extra_scale, const Tolerance& tol)
{
    const Scalar d = lhs - rhs;
    if (d.is_exact())
        return {d.magnitude(), d.is_zero()};
    const double scale = std::max({lhs.magnitude(), rhs.magnitude(), extra_scale});
    return {d.magnitude(), negligible(d.magnitude(), scale, tol)};
}

} // namespace

SigmaEvaluator::SigmaEvaluator(complex g2, complex g3, std::size_t max_degree)
    : g2_(g2), g3_(g3), rational_(g2 == complex(0.0) && g3 == complex(0.0))
{
    const double t = std::max({1.0, std::pow(std::abs(g2), 0.25), std::pow(std::abs(g3), 1.0 / 6.0)});
    radius_ = rational_ ? std::numeric_limits<double>::infinity() : validated_scaled_radius / t;

    // b_{m,n} = a_{m,n} / (4m+6n+1)!, from the recursion
    // a_{m,n} = 3(m+1) a_{m+1,n-1} + (16/3)(n+1) a_{m-2,n+1}
    //         - (1/3)(2m+3n-1)(4m+6n-1) a_{m-1,n}.
    std::map<std::pair<long, long>, double> b;
    auto at = [&b](long m, long n) {
        if (m < 0 || n < 0)
            return 0.0;
        auto it = b.find({m, n});
        return it == b.end() ? 0.0 : it->second;
    };
    coeff_.assign(max_degree / 2 + 1, complex(0.0));
    const complex h2 = g2 / 2.0, t3 = 2.0 * g3;
    for (long d = 0; d <= static_cast<long>(max_degree); d += 2) {
        for (long n = 0; 6 * n <= d; ++n) {
            if ((d - 6 * n) % 4 != 0)
                continue;
            const long m = (d - 6 * n) / 4;
            double v;
            if (d == 0) {
                v = 1.0;
            } else {
                const double k = static_cast<double>(d + 1);
                v = (3.0 * static_cast<double>(m + 1) * at(m + 1, n - 1) +
                     16.0 / 3.0 * static_cast<double>(n + 1) * at(m - 2, n + 1)) /
                        (k * (k - 1)) -
                    static_cast<double>(2 * m + 3 * n - 1) * static_cast<double>(4 * m + 6 * n - 1) /
                        3.0 * at(m - 1, n) / (k * (k - 1) * (k - 2) * (k - 3));
            }
            b[{m, n}] = v;
            coeff_[static_cast<std::size_t>(d / 2)] +=
                v * std::pow(h2, static_cast<double>(m)) * std::pow(t3, static_cast<double>(n));
        }
    }
}

SigmaEvaluator::complex SigmaEvaluator::operator()(complex z) const
{
    if (rational_)
        return z;
    if (std::abs(z) > radius_)
        throw ConvergenceError("sigma argument |z| = " + std::to_string(std::abs(z)) +
                               " outside the validated region |z| <= " + std::to_string(radius_));
    const complex z2 = z * z;
    complex acc(0.0);
    for (std::size_t i = coeff_.size(); i-- > 0;)
        acc = acc * z2 + coeff_[i];
    return acc * z;
}

namespace {

SigmaEvaluator make_sigma(const EllipticParams& p)
{
    const Mode mode = p.w.mode();
    for (const Scalar* s : {&p.g2, &p.g3, &p.alpha, &p.beta})
        if (s->mode() != mode)
            throw ModeMismatch("elliptic parameters mix exact and floating values");
    const bool rational = p.g2.is_zero() && p.g3.is_zero();
    if (mode == Mode::exact && !rational)
        throw ParameterError("exact arithmetic is only available in the rational limit g2 = g3 = 0");
    if (!rational) {
        const complex g2 = p.g2.to_complex(), g3 = p.g3.to_complex();
        const complex disc = g2 * g2 * g2 - 27.0 * g3 * g3;
        if (std::abs(disc) <= 1e-12 * std::max(1.0, std::abs(g2 * g2 * g2) + 27.0 * std::abs(g3 * g3)))
            throw ParameterError("degenerate invariants: g2^3 - 27 g3^2 = 0");
    }
    if (p.w.is_zero(Tolerance::default_tolerance()))
        throw ParameterError("elliptic step w must be nonzero");
    if ((p.beta - p.alpha).is_zero(Tolerance::default_tolerance()))
        throw ParameterError("elliptic family needs β != α");
    return SigmaEvaluator(p.g2.to_complex(), p.g3.to_complex());
}

} // namespace

EllipticModel::EllipticModel(EllipticParams p) : p_(std::move(p)), sigma_(make_sigma(p_)) {}

Scalar EllipticModel::y(const Scalar& x) const
{
    if (mode() == Mode::exact)
        return p_.w * x;
    return Scalar(sigma_((p_.w * x).as_complex()));
}

Scalar EllipticModel::y_nonzero(const Scalar& x, std::string_view what) const
{
    Scalar v = y(x);
    const bool zero = v.is_exact() ? v.is_zero() : v.magnitude() <= lattice_eps;
    if (zero)
        throw ParameterError("lattice collision: y(" + x.to_string() + ") = σ(w·" + x.to_string() +
                             ") vanishes in " + std::string(what));
    return v;
}

Scalar EllipticModel::pochhammer(const Scalar& a, std::size_t k) const
{
    Scalar acc = Scalar::one(mode());
    for (std::size_t i = 0; i < k; ++i)
        acc *= y(a + static_cast<long>(i));
    return acc;
}

Scalar elliptic_pochhammer(const Scalar& a, std::size_t k, const EllipticModel& m)
{
    return m.pochhammer(a, k);
}

namespace {

Scalar n_of(std::size_t n, Mode mode)
{
    return Scalar::integer(static_cast<long>(n), mode);
}

Scalar mu_at(const EllipticModel& m, std::size_t n)
{
    const Mode mode = m.mode();
    if (n == 0)
        return Scalar::zero(mode);
    const Scalar sn = n_of(n, mode);
    return m.y_nonzero(sn, "mu_n numerator") / m.y_nonzero(sn + m.params().alpha, "mu_n denominator");
}

Scalar g_at(const EllipticModel& m, std::size_t n)
{
    const auto& p = m.params();
    if (n == 0)
        return Scalar::one(m.mode());
    const Scalar sn = n_of(n, m.mode());
    return m.y(p.alpha) * m.y(sn + p.beta) /
           (m.y_nonzero(p.beta, "g_n prefactor") * m.y_nonzero(sn + p.alpha, "g_n denominator"));
}

Scalar g_tilde_at(const EllipticModel& m, std::size_t n)
{
    const auto& p = m.params();
    const Scalar sn = n_of(n, m.mode());
    const Scalar yb = m.y_nonzero(p.beta, "g~_n prefactor");
    return m.y(p.alpha) * m.y(p.beta - p.alpha) * m.y(sn + p.alpha + p.beta + 2) /
           (yb * yb * m.y_nonzero(sn + p.alpha + 2, "g~_n denominator"));
}

} // namespace

EllipticSequences elliptic_mu_g(const EllipticModel& m, std::size_t depth)
{
    (void)m.y_nonzero(m.params().alpha, "g_0");
    EllipticSequences s;
    for (std::size_t n = 0; n <= depth; ++n)
        s.mu.push_back(mu_at(m, n));
    for (std::size_t n = 0; n <= 2 * depth; ++n)
        s.g.push_back(g_at(m, n));
    for (std::size_t n = 0; n + 2 <= 2 * depth; ++n)
        s.g_tilde_raw.push_back(g_tilde_at(m, n));
    if (!s.g_tilde_raw.empty()) {
        const Scalar& t0 = s.g_tilde_raw.front();
        if (t0.is_zero(Tolerance::default_tolerance()))
            throw DegenerateFunctional("derived moment g~_0 vanishes", 0);
        for (const auto& v : s.g_tilde_raw)
            s.g_tilde.push_back(v / t0);
    }
    return s;
}

FamilyInstance elliptic_instance(const EllipticModel& m, std::size_t depth)
{
    (void)m.y_nonzero(m.params().alpha, "g_0");
    const Mode mode = m.mode();
    auto g = MomentSequence::from_rule(mode, [m](std::size_t n) { return g_at(m, n); });
    UmbralDerivative d(mode, [m](std::size_t n) { return mu_at(m, n); }, "mu_n = σ(wn)/σ(w(n+α))");
    auto gt = MomentSequence::from_rule(mode, [m](std::size_t n) { return g_tilde_at(m, n); });
    return {m.rational_limit() ? "elliptic-rational" : "elliptic", std::move(g), std::move(d),
            std::move(gt), depth};
}

DegenerateIdentityReport check_degenerate_identities(std::span<const Scalar> mu,
                                                     std::span<const Scalar> g,
                                                     std::span<const Scalar> g_tilde,
                                                     std::size_t depth, const Tolerance& tol)
{
    if (mu.size() < 2 * depth + 1 || g.size() < 2 * depth + 2 || g_tilde.size() + 1 < 2 * depth + 1)
        throw InsufficientData("check_degenerate_identities: sequences too short for depth " +
                               std::to_string(depth));
    DegenerateIdentityReport rep;
    rep.pass = true;
    for (std::size_t m = 0; m <= depth; ++m)
        for (std::size_t n = 0; n <= depth; ++n) {
            if (m + n == 0)
                continue;
            const Scalar lhs = mu[n] * mu[m + 1] * g_tilde[n + m - 1];
            const Scalar cross = g[m + 1] * g[n];
            const Comparison c = compare(lhs, g[n + m + 1] - cross, cross.magnitude(), tol);
            rep.red_deg_mu = std::max(rep.red_deg_mu, c.residual);
            rep.pass = rep.pass && c.ok;
        }
    auto ratio_rhs = [&](std::size_t m, std::size_t n) {
        return (g[n + m] - g[m] * g[n]) / (g[n + m] - g[1] * g[n + m - 1]);
    };
    for (std::size_t m = 1; m <= depth; ++m)
        for (std::size_t n = 1; n <= depth; ++n) {
            const Scalar lhs = mu[n] * mu[m] / (mu[1] * mu[n + m - 1]);
            const Scalar rhs = ratio_rhs(m, n);
            const Comparison c = compare(lhs, rhs, 0.0, tol);
            rep.red_mu_c = std::max(rep.red_mu_c, c.residual);
            const Comparison s = compare(rhs, ratio_rhs(n, m), 0.0, tol);
            rep.symmetry = std::max(rep.symmetry, s.residual);
            rep.pass = rep.pass && c.ok && s.ok;
        }
    return rep;
}

DegenerateIdentityReport check_degenerate_identities(const EllipticModel& m, std::size_t depth,
                                                     const Tolerance& tol)
{
    std::vector<Scalar> mu, g, gt;
    for (std::size_t n = 0; n <= 2 * depth; ++n)
        mu.push_back(mu_at(m, n));
    for (std::size_t n = 0; n <= 2 * depth + 1; ++n)
        g.push_back(g_at(m, n));
    for (std::size_t n = 0; n + 1 <= 2 * depth; ++n)
        gt.push_back(g_tilde_at(m, n));
    return check_degenerate_identities(mu, g, gt, depth, tol);
}

Polynomial elliptic_3E2(std::size_t n, const Scalar& a1, const Scalar& a2, const Scalar& b1,
                        const Scalar& b2, const EllipticModel& m)
{
    const Mode mode = m.mode();
    const Scalar minus_n = -n_of(n, mode);
    const Scalar one = Scalar::one(mode);
    std::vector<Scalar> c;
    Scalar num = one, den = one;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            const Scalar i = n_of(k - 1, mode);
            num *= m.y(minus_n + i) * m.y(a1 + i) * m.y(a2 + i);
            den *= m.y_nonzero(one + i, "[1]_k") * m.y_nonzero(b1 + i, "[b1]_k") *
                   m.y_nonzero(b2 + i, "[b2]_k");
        }
        c.push_back(num / den);
    }
    return Polynomial(std::move(c), mode);
}

Polynomial elliptic_P(std::size_t n, const EllipticModel& m)
{
    const auto& p = m.params();
    const Mode mode = m.mode();
    const Scalar sn = n_of(n, mode);
    const Scalar na = sn * (p.alpha + sn);
    const Scalar one = Scalar::one(mode);
    const Polynomial e = elliptic_3E2(n, p.alpha + sn, one + p.alpha - p.beta - na, p.alpha,
                                      p.alpha - p.beta - na, m);
    if (e.degree() != static_cast<int>(n) ||
        (mode == Mode::floating && e.leading().magnitude() <= lattice_eps))
        throw ParameterError("elliptic_P: leading coefficient of the 3E2 sum vanishes at n = " +
                             std::to_string(n));
    return e.scaled(one / e.leading());
}

EllipticRecurrence elliptic_recurrence(const EllipticModel& m, std::size_t depth)
{
    const auto& p = m.params();
    const Mode mode = m.mode();
    const Scalar& a = p.alpha;
    const Scalar& b = p.beta;
    EllipticRecurrence r;
    for (std::size_t k = 0; k <= depth; ++k) {
        const Scalar n = n_of(k, mode);
        const Scalar n1 = n + 1, nm1 = n - 1;
        const Scalar common = m.y_nonzero(n * 2 + a, "A_n/C_n") *
                              m.y_nonzero(b + a * nm1 + n * n, "A_n/C_n");
        const Scalar yna = m.y(n + a);
        const Scalar A = yna * yna * m.y(b + a * n + n1 * n1) * m.y(b + a * nm1 + n * nm1) /
                         (common * m.y_nonzero(n * 2 + a + 1, "A_n") *
                          m.y_nonzero(b + a * n + n * n1, "A_n"));
        const Scalar yn = m.y(n);
        Scalar C = Scalar::zero(mode);
        if (k > 0)
            C = yn * yn * m.y(b + a * (n - 2) + nm1 * nm1) * m.y(b + a * n + n * n1) /
                (common * m.y_nonzero(n * 2 + a - 1, "C_n") *
                 m.y_nonzero(b + a * nm1 + n * nm1, "C_n"));
        r.A.push_back(A);
        r.C.push_back(C);
        r.b.push_back(A + C);
        if (k > 0)
            r.u.push_back(r.A[k - 1] * C);
    }
    return r;
}

EllipticParams shifted_params(const EllipticParams& p)
{
    return {p.g2, p.g3, p.w, p.alpha + 2, p.beta + p.alpha + 2};
}

ShiftReport shift_property_check(const EllipticModel& m, std::size_t depth, const Tolerance& tol)
{
    const EllipticModel shifted(shifted_params(m.params()));
    const Mode mode = m.mode();
    UmbralDerivative d(mode, [m](std::size_t n) { return mu_at(m, n); });
    ShiftReport rep;
    rep.pass = true;
    for (std::size_t n = 0; n <= depth; ++n) {
        const Polynomial q = d.apply(elliptic_P(n + 1, m)).scaled(Scalar::one(mode) / d.mu(n + 1));
        const Polynomial s = elliptic_P(n, shifted);
        const double r = max_coeff_diff(q, s);
        double scale = 0.0;
        for (const auto& c : s.coefficients())
            scale = std::max(scale, c.magnitude());
        rep.residuals.push_back(r);
        rep.max_residual = std::max(rep.max_residual, r);
        const bool ok = mode == Mode::exact ? q == s : negligible(r, scale, tol);
        rep.pass = rep.pass && ok;
    }
    return rep;
}

} // namespace umbral

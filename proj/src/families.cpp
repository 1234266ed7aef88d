#include "umbral/families.hpp"

#include <cmath>
#include <vector>

#include "umbral/recurrence.hpp"

namespace umbral {

namespace {

Mode common_mode(std::initializer_list<const Scalar*> xs)
{
    const Mode mode = (*xs.begin())->mode();
    for (const Scalar* x : xs)
        if (x->mode() != mode)
            throw ModeMismatch("family parameters mix exact and floating values");
    return mode;
}

bool is_integer(const Scalar& s, long& value)
{
    if (s.is_exact()) {
        const auto& q = s.as_rational();
        if (q.get_den() != 1 || !q.get_num().fits_slong_p())
            return false;
        value = q.get_num().get_si();
        return true;
    }
    const auto z = s.as_complex();
    const double r = std::round(z.real());
    if (std::abs(z.imag()) > 1e-12 || std::abs(z.real() - r) > 1e-12 || std::abs(r) > 1e15)
        return false;
    value = static_cast<long>(r);
    return true;
}

} // namespace

FamilyInstance classical_instance(const ClassicalParams& p, std::size_t depth)
{
    const Mode mode = common_mode({&p.xi[0], &p.xi[1], &p.xi[2], &p.eta[0], &p.eta[1]});
    auto coeffs = [p, mode](std::size_t n) {
        const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
        return RecurrenceCoefficients{p.xi[0] * sn + p.eta[0], p.xi[1] * sn + p.eta[1], p.xi[2] * sn};
    };
    MomentSequence g = moments_from_recurrence(coeffs, Scalar::one(mode), 2 * depth + 2);
    UmbralDerivative d(mode, [mode](std::size_t n) { return Scalar::integer(static_cast<long>(n), mode); },
                       "∂_x");
    return {"classical", std::move(g), std::move(d), std::nullopt, depth};
}

FamilyInstance q_classical_instance(const QClassicalParams& p, std::size_t depth)
{
    const Mode mode =
        common_mode({&p.q, &p.xi[0], &p.xi[1], &p.xi[2], &p.eta[0], &p.eta[1]});
    const Tolerance tol = Tolerance::default_tolerance();
    const Scalar one = Scalar::one(mode);
    if (p.q.is_zero(tol))
        throw ParameterError("q-classical family needs q != 0");
    if ((p.q - one).is_zero(tol))
        throw ParameterError("q = 1 is the classical limit; use the classical family");
    Scalar qn = one;
    for (std::size_t n = 1; n <= std::max<std::size_t>(depth, 1); ++n) {
        qn *= p.q;
        if ((qn - one).is_zero(tol))
            throw ParameterError("q^" + std::to_string(n) + " = 1: q is a root of unity within the depth");
    }

    auto coeffs = [p, one](std::size_t n) {
        const Scalar qn = pow(p.q, static_cast<long>(n));
        return RecurrenceCoefficients{p.xi[0] + p.eta[0] * qn, p.xi[1] + p.eta[1] * qn,
                                      p.xi[2] * (one - qn)};
    };
    MomentSequence g = moments_from_recurrence(coeffs, one, 2 * depth + 2);
    const Scalar q = p.q;
    UmbralDerivative d(
        mode, [q, one](std::size_t n) { return (one - pow(q, static_cast<long>(n))) / (one - q); },
        "D_q");
    return {"qclassical", std::move(g), std::move(d), std::nullopt, depth};
}

FamilyInstance krall_instance(const KrallParams& p, std::size_t depth)
{
    const Mode mode = common_mode({&p.alpha, &p.beta});
    const Tolerance tol = Tolerance::default_tolerance();
    long k = 0;
    if (is_integer(p.alpha, k) && k <= 0)
        throw ParameterError("rational family needs α not in {0, -1, -2, ...}");
    if (p.beta.is_zero(tol))
        throw ParameterError("rational family needs β != 0");
    if ((p.beta - p.alpha).is_zero(tol))
        throw ParameterError("rational family needs β != α");

    const Scalar a = p.alpha, b = p.beta;
    MomentSequence g = MomentSequence::from_rule(mode, [a, b, mode](std::size_t n) {
        const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
        return a * (sn + b) / (b * (sn + a));
    });
    UmbralDerivative d(
        mode,
        [a, mode](std::size_t n) {
            const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
            return sn / (sn + a);
        },
        "mu_n = n/(n+α)");
    MomentSequence gt = MomentSequence::from_rule(mode, [g, d](std::size_t n) {
        return (g[n + 2] - g[1] * g[n + 1]) / (d.mu(1) * d.mu(n + 1));
    });
    return {"krall", std::move(g), std::move(d), std::move(gt), depth};
}

Scalar krall_measure_moment(const KrallParams& p, std::size_t n)
{
    const Mode mode = common_mode({&p.alpha, &p.beta});
    const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
    const Scalar one = Scalar::one(mode);
    const Scalar ba = p.beta - p.alpha;
    return p.alpha * ba / p.beta * (one / (sn + p.alpha) + one / ba);
}

UmbralDerivative dunkl_mu(const DunklParams& p)
{
    const Mode mode = p.eta.mode();
    long two_eta = 0;
    if (is_integer(p.eta * 2, two_eta) && two_eta < 0 && two_eta % 2 != 0)
        throw ParameterError("Dunkl derivative degenerates: mu_" + std::to_string(-two_eta) +
                             " = 0 when 2η is a negative odd integer");
    const std::vector<CharacteristicTerm> terms{
        {Scalar::one(mode), Polynomial({p.eta, Scalar::one(mode)}, mode)},
        {-Scalar::one(mode), Polynomial::constant(-p.eta)},
    };
    UmbralDerivative base = build_local_D(terms);
    return UmbralDerivative(mode, [base](std::size_t n) { return base.mu(n); },
                            "∂_x + η x^{-1}(1 - reflection)");
}

RaisingOperator classical_raising_operator(const ClassicalParams& p, std::size_t depth)
{
    const Mode mode = common_mode({&p.xi[0], &p.xi[1], &p.xi[2], &p.eta[0], &p.eta[1]});
    std::vector<Polynomial> cols;
    for (std::size_t n = 0; n <= depth; ++n) {
        const Scalar sn = Scalar::integer(static_cast<long>(n), mode);
        std::vector<Scalar> c(n + 2, Scalar::zero(mode));
        c[n + 1] = p.xi[0] * sn + p.eta[0];
        c[n] = p.xi[1] * sn + p.eta[1];
        if (n >= 1)
            c[n - 1] = p.xi[2] * sn;
        cols.emplace_back(std::move(c), mode);
    }
    return RaisingOperator(std::move(cols));
}

RaisingOperator q_classical_raising_operator(const QClassicalParams& p, std::size_t depth)
{
    const Mode mode =
        common_mode({&p.q, &p.xi[0], &p.xi[1], &p.xi[2], &p.eta[0], &p.eta[1]});
    const Scalar one = Scalar::one(mode);
    std::vector<Polynomial> cols;
    for (std::size_t n = 0; n <= depth; ++n) {
        const Scalar qn = pow(p.q, -static_cast<long>(n));
        std::vector<Scalar> c(n + 2, Scalar::zero(mode));
        c[n + 1] = p.xi[0] * qn + p.eta[0];
        c[n] = p.xi[1] * qn + p.eta[1];
        if (n >= 1)
            c[n - 1] = p.xi[2] * (qn - one);
        cols.emplace_back(std::move(c), mode);
    }
    return RaisingOperator(std::move(cols));
}

} // namespace umbral

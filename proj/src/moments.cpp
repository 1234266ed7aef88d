#include "umbral/moments.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <variant>

#include "umbral/linalg.hpp"

namespace umbral {

struct MomentSequence::State {
    Mode mode;
    std::variant<std::vector<Scalar>, Rule, Extender> source;
    std::optional<std::size_t> limit;

    mutable std::mutex mutex;
    mutable std::vector<Scalar> raw;
    mutable std::vector<Scalar> normalized;

    // Caller holds the mutex.
    void extend_to(std::size_t n) const
    {
        if (limit && n >= *limit)
            throw InsufficientData("moment g_" + std::to_string(n) + " requested but only " +
                                   std::to_string(*limit) + " are available");
        while (raw.size() <= n) {
            const std::size_t k = raw.size();
            Scalar v;
            if (auto vals = std::get_if<std::vector<Scalar>>(&source))
                v = (*vals)[k];
            else if (auto rule = std::get_if<Rule>(&source))
                v = (*rule)(k);
            else
                v = std::get<Extender>(source)(k, raw);
            if (v.mode() != mode)
                throw ModeMismatch("moment generator returned a scalar of the wrong mode");
            if (k == 0 && v.is_zero())
                throw DegenerateFunctional("g_0 = 0: functional cannot be normalized", 0);
            raw.push_back(v);
            normalized.push_back(k == 0 ? Scalar::one(mode) : v / raw.front());
        }
    }
};

MomentSequence::MomentSequence(std::shared_ptr<State> state) : state_(std::move(state))
{
    std::lock_guard lock(state_->mutex);
    state_->extend_to(0);
}

MomentSequence MomentSequence::from_values(std::vector<Scalar> raw)
{
    if (raw.empty())
        throw InsufficientData("empty moment sequence");
    auto st = std::make_shared<State>();
    st->mode = raw.front().mode();
    st->limit = raw.size();
    st->source = std::move(raw);
    return MomentSequence(std::move(st));
}

MomentSequence MomentSequence::from_rule(Mode mode, Rule rule)
{
    auto st = std::make_shared<State>();
    st->mode = mode;
    st->source = std::move(rule);
    return MomentSequence(std::move(st));
}

MomentSequence MomentSequence::from_extender(Mode mode, Extender extender)
{
    auto st = std::make_shared<State>();
    st->mode = mode;
    st->source = std::move(extender);
    return MomentSequence(std::move(st));
}

Mode MomentSequence::mode() const
{
    return state_->mode;
}

Scalar MomentSequence::operator[](std::size_t n) const
{
    std::lock_guard lock(state_->mutex);
    state_->extend_to(n);
    return state_->normalized[n];
}

Scalar MomentSequence::raw(std::size_t n) const
{
    std::lock_guard lock(state_->mutex);
    state_->extend_to(n);
    return state_->raw[n];
}

Scalar MomentSequence::scale() const
{
    return raw(0);
}

std::vector<Scalar> MomentSequence::prefix(std::size_t count) const
{
    std::lock_guard lock(state_->mutex);
    if (count > 0)
        state_->extend_to(count - 1);
    return {state_->normalized.begin(), state_->normalized.begin() + static_cast<long>(count)};
}

std::optional<std::size_t> MomentSequence::limit() const
{
    return state_->limit;
}

HankelReport hankel_determinants(const MomentSequence& g, std::size_t count, const Tolerance& tol)
{
    HankelReport rep;
    if (count == 0)
        return rep;
    const auto gs = g.prefix(2 * count - 1);
    Matrix h(count, count, g.mode());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = 0; k < count; ++k)
            h(i, k) = gs[i + k];
    rep.values = leading_principal_minors(h);
    double prev = 1.0;
    for (std::size_t n = 0; n < count; ++n) {
        double big = 0.0;
        for (std::size_t k = 0; k <= 2 * n; ++k)
            big = std::max(big, gs[k].magnitude());
        const double scale = prev * big;
        rep.scales.push_back(scale);
        const Scalar& d = rep.values[n];
        const bool zero = g.mode() == Mode::exact ? d.is_zero() : d.magnitude() <= tol.abs_eps * scale;
        if (zero && !rep.first_zero)
            rep.first_zero = n + 1;
        prev = d.magnitude();
    }
    return rep;
}

Scalar bilinear(const MomentSequence& g, const Polynomial& f, const Polynomial& h)
{
    Scalar acc = Scalar::zero(g.mode());
    if (f.is_zero() || h.is_zero())
        return acc;
    const auto gs = g.prefix(static_cast<std::size_t>(f.degree() + h.degree()) + 1);
    const auto& fc = f.coefficients();
    const auto& hc = h.coefficients();
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (fc[i].is_zero())
            continue;
        for (std::size_t j = 0; j < hc.size(); ++j)
            acc += fc[i] * hc[j] * gs[i + j];
    }
    return acc;
}

Scalar apply_functional(const MomentSequence& g, const Polynomial& f)
{
    Scalar acc = Scalar::zero(g.mode());
    const auto& fc = f.coefficients();
    if (fc.empty())
        return acc;
    const auto gs = g.prefix(fc.size());
    for (std::size_t i = 0; i < fc.size(); ++i)
        acc += fc[i] * gs[i];
    return acc;
}

MomentSequence moments_from_recurrence(std::function<RecurrenceCoefficients(std::size_t)> coeffs,
                                       const Scalar& g0, std::size_t count)
{
    const Mode mode = g0.mode();
    auto ext = [coeffs = std::move(coeffs), g0](std::size_t n, const std::vector<Scalar>& prev) {
        if (n == 0)
            return g0;
        const std::size_t m = n - 1;
        const RecurrenceCoefficients c = coeffs(m);
        if (c.c_plus.is_zero())
            throw ParameterError("moment recurrence breaks down: leading coefficient c_+(" +
                                 std::to_string(m) + ") vanishes");
        Scalar rhs = c.c_zero * prev[m];
        if (m >= 1)
            rhs += c.c_minus * prev[m - 1];
        return -rhs / c.c_plus;
    };
    auto seq = MomentSequence::from_extender(mode, std::move(ext));
    (void)seq.raw(count);
    return seq;
}

MomentSequence moments_from_ops(std::span<const Polynomial> q_from_one)
{
    const Mode mode = q_from_one.empty() ? Mode::exact : q_from_one.front().mode();
    std::vector<Scalar> gt{Scalar::one(mode)};
    for (std::size_t k = 0; k < q_from_one.size(); ++k) {
        const Polynomial& q = q_from_one[k];
        const std::size_t n = k + 1;
        if (q.degree() != static_cast<int>(n) || !q.is_monic())
            throw ParameterError("moments_from_ops: Q_" + std::to_string(n) +
                                 " must be monic of degree " + std::to_string(n));
        Scalar acc = Scalar::zero(mode);
        for (std::size_t s = 0; s < n; ++s)
            acc += q.coeff(s) * gt[s];
        gt.push_back(-acc);
    }
    return MomentSequence::from_values(std::move(gt));
}

} // namespace umbral

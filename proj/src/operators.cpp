#include "umbral/operators.hpp"

#include <mutex>

namespace umbral {

struct UmbralDerivative::State {
    Mode mode;
    Rule rule;
    std::string label;
    mutable std::mutex mutex;
    mutable std::vector<Scalar> cache;
};

UmbralDerivative::UmbralDerivative(Mode mode, Rule mu, std::string label)
    : state_(std::make_shared<State>())
{
    state_->mode = mode;
    state_->rule = std::move(mu);
    state_->label = std::move(label);
}

Mode UmbralDerivative::mode() const
{
    return state_->mode;
}

const std::string& UmbralDerivative::label() const
{
    return state_->label;
}

Scalar UmbralDerivative::mu(std::size_t n) const
{
    std::lock_guard lock(state_->mutex);
    auto& cache = state_->cache;
    while (cache.size() <= n) {
        const std::size_t k = cache.size();
        Scalar v = state_->rule(k);
        if (v.mode() != state_->mode)
            throw ModeMismatch("mu rule returned a scalar of the wrong mode");
        if (k == 0 && !v.is_zero())
            throw ParameterError("umbral derivative requires mu_0 = 0");
        if (k > 0 && v.is_zero())
            throw ParameterError("umbral derivative requires mu_n != 0; mu_" + std::to_string(k) +
                                 " vanishes");
        cache.push_back(std::move(v));
    }
    return cache[n];
}

std::vector<Scalar> UmbralDerivative::mu_prefix(std::size_t count) const
{
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        out.push_back(mu(n));
    return out;
}

Polynomial UmbralDerivative::apply(const Polynomial& f) const
{
    if (f.mode() != mode())
        throw ModeMismatch("umbral derivative applied to a polynomial of the wrong mode");
    if (f.degree() < 1)
        return Polynomial(mode());
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(f.degree()));
    for (std::size_t k = 1; k <= static_cast<std::size_t>(f.degree()); ++k)
        c.push_back(mu(k) * f.coeff(k));
    return Polynomial(std::move(c), mode());
}

MonomialOperator::MonomialOperator(std::vector<Polynomial> columns, Mode mode)
    : mode_(mode), columns_(std::move(columns))
{
    for (const auto& c : columns_)
        if (c.mode() != mode_)
            throw ModeMismatch("operator column of the wrong mode");
}

Polynomial MonomialOperator::apply(const Polynomial& f) const
{
    if (f.mode() != mode_)
        throw ModeMismatch("operator applied to a polynomial of the wrong mode");
    if (f.degree() >= static_cast<int>(columns_.size()))
        throw ParameterError("operator known only on degrees < " + std::to_string(columns_.size()));
    Polynomial out(mode_);
    for (std::size_t k = 0; k < f.coefficients().size(); ++k)
        if (!f.coeff(k).is_zero())
            out += columns_[k].scaled(f.coeff(k));
    return out;
}

MonomialOperator MonomialOperator::after(const MonomialOperator& other) const
{
    std::vector<Polynomial> cols;
    for (std::size_t n = 0; n < other.size(); ++n) {
        const Polynomial& img = other.column(n);
        if (img.degree() >= static_cast<int>(size()))
            break;
        cols.push_back(apply(img));
    }
    return MonomialOperator(std::move(cols), mode_);
}

MonomialOperator as_operator(const UmbralDerivative& d, std::size_t count)
{
    std::vector<Polynomial> cols;
    cols.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        cols.push_back(n == 0 ? Polynomial(d.mode()) : Polynomial::monomial(n - 1, d.mu(n)));
    return MonomialOperator(std::move(cols), d.mode());
}

RaisingOperator::RaisingOperator(std::vector<Polynomial> columns)
    : ops_(columns, columns.empty() ? Mode::exact : columns.front().mode())
{
    for (std::size_t n = 0; n < ops_.size(); ++n)
        if (ops_.column(n).degree() != static_cast<int>(n) + 1)
            throw ParameterError("raising operator column " + std::to_string(n) +
                                 " must have degree n+1 (nu_{n+1} != 0)");
}

Scalar RaisingOperator::nu(std::size_t n) const
{
    if (n == 0)
        throw ParameterError("nu_n is defined for n >= 1");
    return entry(n - 1, n);
}

Scalar RaisingOperator::K(std::size_t n, int i) const
{
    if (i < -1)
        throw ParameterError("K_n^(i) needs i >= -1");
    if (i > static_cast<int>(n))
        return Scalar::zero(mode());
    return entry(n, static_cast<std::size_t>(static_cast<int>(n) - i));
}

BandInfo RaisingOperator::band(const Tolerance& tol) const
{
    BandInfo info;
    std::size_t width = 0;
    for (std::size_t n = 0; n < size(); ++n)
        for (std::size_t i = 0; i <= n; ++i)
            if (!K(n, static_cast<int>(i)).is_zero(tol))
                width = std::max(width, i + 1);
    info.width = width;
    const std::size_t last = size() == 0 ? 0 : size() - 1;
    info.local = 2 * width <= last;
    return info;
}

RaisingOperator RaisingOperator::with_entry(std::size_t n, std::size_t s, const Scalar& value) const
{
    std::vector<Polynomial> cols;
    for (std::size_t k = 0; k < size(); ++k)
        cols.push_back(column(k));
    std::vector<Scalar> c = cols.at(n).coefficients();
    if (s >= c.size())
        c.resize(s + 1, Scalar::zero(mode()));
    c[s] = value;
    cols[n] = Polynomial(std::move(c), mode());
    return RaisingOperator(std::move(cols));
}

MonomialOperator compose_RD(const RaisingOperator& r, const UmbralDerivative& d)
{
    return r.as_operator().after(as_operator(d, r.size() + 1));
}

MonomialOperator compose_DR(const UmbralDerivative& d, const RaisingOperator& r)
{
    return as_operator(d, r.size() + 2).after(r.as_operator());
}

} // namespace umbral

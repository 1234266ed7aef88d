#include "umbral/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace umbral {

Polynomial::Polynomial(std::vector<Scalar> coeffs)
    : mode_(coeffs.empty() ? Mode::exact : coeffs.front().mode()), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        check_mode(c);
    trim();
}

Polynomial::Polynomial(std::vector<Scalar> coeffs, Mode mode) : mode_(mode), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        check_mode(c);
    trim();
}

Polynomial Polynomial::constant(const Scalar& c)
{
    return Polynomial({c}, c.mode());
}

Polynomial Polynomial::monomial(std::size_t degree, const Scalar& coeff)
{
    std::vector<Scalar> c(degree + 1, Scalar::zero(coeff.mode()));
    c[degree] = coeff;
    return Polynomial(std::move(c), coeff.mode());
}

Polynomial Polynomial::x_pow(std::size_t degree, Mode mode)
{
    return monomial(degree, Scalar::one(mode));
}

void Polynomial::check_mode(const Scalar& s) const
{
    if (s.mode() != mode_)
        throw ModeMismatch("polynomial coefficient of the wrong mode");
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

bool Polynomial::is_monic() const
{
    return !c_.empty() && c_.back() == Scalar::one(mode_);
}

Scalar Polynomial::coeff(std::size_t k) const
{
    return k < c_.size() ? c_[k] : Scalar::zero(mode_);
}

Scalar Polynomial::leading() const
{
    return c_.empty() ? Scalar::zero(mode_) : c_.back();
}

Scalar Polynomial::evaluate(const Scalar& x) const
{
    if (x.mode() != mode_)
        throw ModeMismatch("evaluation point of the wrong mode");
    Scalar acc = Scalar::zero(mode_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted(std::size_t k) const
{
    if (c_.empty())
        return *this;
    std::vector<Scalar> c(k, Scalar::zero(mode_));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c), mode_);
}

Polynomial Polynomial::scaled(const Scalar& s) const
{
    check_mode(s);
    std::vector<Scalar> c = c_;
    for (auto& v : c)
        v *= s;
    return Polynomial(std::move(c), mode_);
}

Polynomial Polynomial::monic() const
{
    if (c_.empty())
        throw DivisionByZero("zero polynomial has no monic normalization");
    return scaled(Scalar::one(mode_) / c_.back());
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.mode_ != mode_)
        throw ModeMismatch("mixed-mode polynomial arithmetic");
    if (c_.size() < rhs.c_.size())
        c_.resize(rhs.c_.size(), Scalar::zero(mode_));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k)
        c_[k] += rhs.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.mode_ != mode_)
        throw ModeMismatch("mixed-mode polynomial arithmetic");
    if (c_.size() < rhs.c_.size())
        c_.resize(rhs.c_.size(), Scalar::zero(mode_));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k)
        c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.mode_ != b.mode_)
        throw ModeMismatch("mixed-mode polynomial arithmetic");
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.mode_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.mode_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c), a.mode_);
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.mode_ != b.mode_ || a.c_.size() != b.c_.size())
        return false;
    return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
}

double max_coeff_diff(const Polynomial& a, const Polynomial& b)
{
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, (a.coeff(k) - b.coeff(k)).magnitude());
    return worst;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    if (p.is_zero())
        return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Scalar c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        if (k > 0)
            os << "x^" << k;
    }
    return os;
}

} // namespace umbral

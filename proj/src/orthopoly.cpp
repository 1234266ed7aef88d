#include "umbral/orthopoly.hpp"

#include <cmath>
#include <string>

#include "umbral/linalg.hpp"

namespace umbral {

MonicPolySystem::MonicPolySystem(std::vector<Polynomial> polys, std::vector<Scalar> b,
                                 std::vector<Scalar> u, std::vector<Scalar> h)
    : mode_(polys.empty() ? Mode::exact : polys.front().mode()), polys_(std::move(polys)),
      b_(std::move(b)), u_(std::move(u)), h_(std::move(h))
{
    if (polys_.empty())
        throw ParameterError("a polynomial system needs at least P_0");
    for (std::size_t n = 0; n < polys_.size(); ++n)
        if (polys_[n].degree() != static_cast<int>(n) || !polys_[n].is_monic())
            throw ParameterError("P_" + std::to_string(n) + " is not monic of degree " +
                                 std::to_string(n));
}

const Scalar& MonicPolySystem::u(std::size_t n) const
{
    if (n == 0 || n > u_.size())
        throw std::out_of_range("u_" + std::to_string(n) + " is not stored");
    return u_[n - 1];
}

MonicPolySystem monic_ops_from_moments(const MomentSequence& g, std::size_t degree,
                                       const Tolerance& tol)
{
    const Mode mode = g.mode();
    const HankelReport hank = hankel_determinants(g, degree + 1, tol);
    if (hank.first_zero)
        throw DegenerateFunctional("degenerate functional: Hankel determinant Δ_" +
                                       std::to_string(*hank.first_zero) + " vanishes",
                                   *hank.first_zero);

    const auto gs = g.prefix(2 * degree + 1);
    std::vector<Polynomial> polys{Polynomial::x_pow(0, mode)};
    for (std::size_t n = 1; n <= degree; ++n) {
        Matrix a(n, n, mode);
        std::vector<Scalar> rhs;
        rhs.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k)
                a(i, k) = gs[i + k];
            rhs.push_back(-gs[i + n]);
        }
        std::vector<Scalar> c = solve(a, rhs);
        c.push_back(Scalar::one(mode));
        polys.emplace_back(std::move(c), mode);
    }

    std::vector<Scalar> h, b, u;
    for (std::size_t n = 0; n <= degree; ++n) {
        // <sigma, P_n x^n> = h_n
        Scalar acc = Scalar::zero(mode);
        for (std::size_t s = 0; s <= n; ++s)
            acc += polys[n].coeff(s) * gs[s + n];
        h.push_back(acc);
    }
    for (std::size_t n = 0; n < degree; ++n) {
        Scalar prev = n >= 1 ? polys[n].coeff(n - 1) : Scalar::zero(mode);
        b.push_back(prev - polys[n + 1].coeff(n));
    }
    for (std::size_t n = 1; n < degree; ++n)
        u.push_back(h[n] / h[n - 1]);
    return MonicPolySystem(std::move(polys), std::move(b), std::move(u), std::move(h));
}

MonicPolySystem ops_from_recurrence(std::span<const Scalar> b, std::span<const Scalar> u,
                                    std::size_t degree)
{
    if (b.size() < degree)
        throw ParameterError("ops_from_recurrence: need b_0..b_{N-1}");
    if (degree >= 2 && u.size() < degree - 1)
        throw ParameterError("ops_from_recurrence: need u_1..u_{N-1}");
    const Mode mode = degree > 0 ? b.front().mode() : (u.empty() ? Mode::exact : u.front().mode());
    const std::size_t nu = degree >= 1 ? std::min(u.size(), degree) : 0;
    for (std::size_t n = 1; n <= nu; ++n)
        if (u[n - 1].is_zero())
            throw DegenerateFunctional("degenerate recurrence: u_" + std::to_string(n) + " = 0", n);

    const Polynomial x = Polynomial::x_pow(1, mode);
    std::vector<Polynomial> polys{Polynomial::x_pow(0, mode)};
    for (std::size_t n = 0; n < degree; ++n) {
        Polynomial next = x * polys[n] - b[n] * polys[n];
        if (n >= 1)
            next -= u[n - 1] * polys[n - 1];
        polys.push_back(std::move(next));
    }
    std::vector<Scalar> h{Scalar::one(mode)};
    for (std::size_t n = 1; n <= nu; ++n)
        h.push_back(h.back() * u[n - 1]);
    std::vector<Scalar> bs(b.begin(), b.begin() + static_cast<long>(degree));
    std::vector<Scalar> us(u.begin(), u.begin() + static_cast<long>(degree >= 1 ? degree - 1 : 0));
    return MonicPolySystem(std::move(polys), std::move(bs), std::move(us), std::move(h));
}

GramReport gram_check(std::span<const Polynomial> polys, const MomentSequence& g,
                      const Tolerance& tol)
{
    GramReport rep;
    const std::size_t n = polys.size();
    rep.gram.assign(n, std::vector<Scalar>(n, Scalar::zero(g.mode())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            rep.gram[i][j] = bilinear(g, polys[i], polys[j]);
            rep.gram[j][i] = rep.gram[i][j];
        }

    const bool exact = g.mode() == Mode::exact;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (rep.gram[i][i].is_zero(tol)) {
            ok = false;
            if (!rep.zero_diagonal)
                rep.zero_diagonal = i;
        }
    }
    double worst = -1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar& v = rep.gram[i][j];
            const double mag = v.magnitude();
            if (mag > worst) {
                worst = mag;
                rep.worst_offdiagonal = GramEntry{i, j, v};
            }
            bool bad;
            if (exact) {
                bad = !v.is_zero();
            } else {
                const double bound = tol.abs_eps +
                    tol.rel_eps * std::sqrt(rep.gram[i][i].magnitude() * rep.gram[j][j].magnitude());
                bad = mag > bound;
            }
            if (bad)
                ok = false;
        }
    rep.pass = ok;
    return rep;
}

} // namespace umbral

#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "umbral/classical.hpp"
#include "umbral/families.hpp"
#include "umbral/recurrence.hpp"

using namespace umbral;
using testing::exact_values;
using testing::Q;

namespace {

ClassicalParams legendre01()
{
    return ClassicalParams{{Q(1), Q(-1), Q(0)}, {Q(2), Q(-1)}};
}

QClassicalParams q_half()
{
    return QClassicalParams{Q(1, 2), {Q(1), Q(-1), Q(0)}, {Q(0), Q(1, 2)}};
}

// Returns c with a = c b column by column, or nothing.
bool proportional(const RaisingOperator& a, const RaisingOperator& b, std::size_t columns)
{
    const Scalar c = a.nu(1) / b.nu(1);
    for (std::size_t n = 0; n < columns; ++n)
        if (!(a.column(n) == c * b.column(n)))
            return false;
    return true;
}

} // namespace

TEST_CASE("classical family moments")
{
    const auto inst = classical_instance(legendre01(), 6);
    for (long n = 0; n <= 12; ++n)
        CHECK(inst.g[static_cast<std::size_t>(n)] == Q(1, n + 1));
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(inst.d.mu(n) == Q(static_cast<long>(n)));

    const auto hermite = classical_instance(ClassicalParams{{Q(0), Q(0), Q(1)}, {Q(-2), Q(0)}}, 5);
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(hermite.g[2 * k + 1].is_zero());
    CHECK(hermite.g[4] == Q(3, 4));

    CHECK_THROWS_AS(classical_instance(ClassicalParams{{Q(1), Q(1), Q(1)}, {Q(0), Q(1)}}, 4), ParameterError);
}

TEST_CASE("q-classical family moments")
{
    const auto inst = q_classical_instance(q_half(), 6);
    CHECK(inst.g[1] == Q(1, 2));
    CHECK(inst.g[2] == Q(3, 8));
    CHECK(inst.d.mu(2) == Q(3, 2));

    auto bad = q_half();
    bad.q = Q(-1);
    CHECK_THROWS_AS(q_classical_instance(bad, 2), ParameterError);
    bad.q = Q(1);
    CHECK_THROWS_AS(q_classical_instance(bad, 2), ParameterError);
    bad.q = Q(0);
    CHECK_THROWS_AS(q_classical_instance(bad, 2), ParameterError);
}

TEST_CASE("rational family")
{
    const KrallParams p{Q(2), Q(3)};
    const auto inst = krall_instance(p, 8);
    CHECK(inst.g[1] == Q(8, 9));
    CHECK(inst.d.mu(1) == Q(1, 3));
    const auto sys = monic_ops_from_moments(inst.g, 2);
    CHECK(sys.b(0) == Q(8, 9));

    for (std::size_t n = 0; n < 10; ++n) {
        const long k = static_cast<long>(n);
        const Scalar closed = Q(2, 3) * Q(k + 3, k + 2);
        CHECK(inst.g[n] == closed);
        // (α(β-α)/β)(1/(n+α) + 1/(β-α))
        CHECK(krall_measure_moment(p, n) == Q(2, 3) * (Q(1, k + 2) + Q(1)));
        CHECK(krall_measure_moment(p, n) == closed);
    }

    CHECK_THROWS_AS(krall_instance(KrallParams{Q(2), Q(2)}, 4), ParameterError);
    CHECK_THROWS_AS(krall_instance(KrallParams{Q(-1), Q(2)}, 4), ParameterError);
    CHECK_THROWS_AS(krall_instance(KrallParams{Q(0), Q(2)}, 4), ParameterError);
}

TEST_CASE("derived moments of the rational family")
{
    const auto inst = krall_instance(KrallParams{Q(2), Q(3)}, 8);
    REQUIRE(inst.g_tilde);
    const auto tau = derived_moments(inst.g, inst.d);
    // mu_1 mu_{n+1} g~_n = g_{n+2} - g_1 g_{n+1}, up to one global scalar
    const auto diff = [&](std::size_t n) { return inst.g[n + 2] - inst.g[1] * inst.g[n + 1]; };
    const Scalar c = inst.g_tilde->raw(0) * inst.d.mu(1) / diff(0);
    for (std::size_t n = 0; n < 14; ++n) {
        CHECK(inst.g_tilde->raw(n) * inst.d.mu(n + 1) == c * diff(n));
        CHECK(tau[n] == (*inst.g_tilde)[n]);
    }
    // without the mu_{n+1} factor the sequences are not proportional
    CHECK_FALSE(inst.g_tilde->raw(1) * diff(0) == inst.g_tilde->raw(0) * diff(1));
}

TEST_CASE("Dunkl derivative")
{
    const auto zero = dunkl_mu(DunklParams{Q(0)});
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(zero.mu(n) == Q(static_cast<long>(n)));

    const auto quarter = dunkl_mu(DunklParams{Q(1, 4)});
    const auto expected = exact_values({"0", "3/2", "2", "7/2", "4"});
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(quarter.mu(n) == expected[n]);

    CHECK_THROWS_AS(dunkl_mu(DunklParams{Q(-1, 2)}).mu(1), ParameterError);

    const auto mu = quarter.mu_prefix(12);
    const auto prof = min_linear_recurrence(mu, 4);
    REQUIRE(prof);
    CHECK(prof->order() == 3);
    CHECK_FALSE(min_linear_recurrence(mu, 2));
}

TEST_CASE("every family instance is umbral classical at depth 10")
{
    const std::vector<ClassicalParams> classical{legendre01(),
                                                 {{Q(0), Q(0), Q(1)}, {Q(-2), Q(0)}},
                                                 {{Q(0), Q(1), Q(0)}, {Q(-1), Q(3)}},
                                                 {{Q(1, 2), Q(-3), Q(2)}, {Q(5), Q(-1, 3)}}};
    for (const auto& p : classical) {
        const auto inst = classical_instance(p, 10);
        const auto rep = is_umbral_classical(inst.g, inst.d, 10);
        CHECK(rep.verdict);
        REQUIRE(rep.r);
        CHECK(proportional(*rep.r, classical_raising_operator(p, 10), 11));
        const auto band = rep.r->band();
        CHECK(band.local);
        CHECK(band.width <= 2);
        // nu_n and rho_n affine in n
        for (std::size_t n = 2; n + 1 <= 10; ++n) {
            CHECK(rep.r->nu(n + 1) - 2 * rep.r->nu(n) + rep.r->nu(n - 1) == Q(0));
            CHECK(rep.r->rho(n + 1) - 2 * rep.r->rho(n) + rep.r->rho(n - 1) == Q(0));
        }
        const auto eig = eigen_check(rep.p, rep.q, inst.d, *rep.r);
        CHECK(eig.pass);
        // L x^n = lambda_n x^n + tau_n x^{n-1} needs xi_1 = 0; otherwise an x^{n-2} term appears
        CHECK(eig.hypergeometric == p.xi[2].is_zero());
        CHECK(eig.lambdas_distinct);
        for (std::size_t n = 1; n < eig.data.tau_seq.size(); ++n)
            CHECK(eig.data.tau_seq[n] == inst.d.mu(n) * rep.r->rho(n - 1));
    }

    const std::vector<QClassicalParams> qparams{q_half(),
                                                {Q(1, 3), {Q(1), Q(-1), Q(2)}, {Q(3), Q(1, 2)}},
                                                {Q(2), {Q(1), Q(1), Q(-1)}, {Q(1), Q(1)}}};
    for (const auto& p : qparams) {
        const auto inst = q_classical_instance(p, 10);
        const auto rep = is_umbral_classical(inst.g, inst.d, 10);
        CHECK(rep.verdict);
        REQUIRE(rep.r);
        CHECK(proportional(*rep.r, q_classical_raising_operator(p, 10), 11));
        // nu_n affine in q^{-n}: annihilated by (1, -(1 + 1/q), 1/q) on consecutive terms
        const Scalar qi = Q(1) / p.q;
        for (std::size_t n = 2; n + 1 <= 10; ++n)
            CHECK(rep.r->nu(n + 1) - (qi + 1) * rep.r->nu(n) + qi * rep.r->nu(n - 1) == Q(0));
        const auto eig = eigen_check(rep.p, rep.q, inst.d, *rep.r);
        CHECK(eig.lambdas_distinct);
    }

    const auto krall = krall_instance(KrallParams{Q(5, 2), Q(1, 3)}, 10);
    CHECK(is_umbral_classical(krall.g, krall.d, 10).verdict);
}

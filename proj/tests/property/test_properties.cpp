#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "battery.hpp"
#include "generators.hpp"
#include "test_support.hpp"
#include "umbral/classical.hpp"
#include "umbral/elliptic.hpp"
#include "umbral/families.hpp"
#include "umbral/linalg.hpp"
#include "umbral/recurrence.hpp"

using namespace umbral;
using gen::Rng;
using testing::Q;

namespace {

constexpr int trials = 40;

MomentSequence random_moments(Rng& rng, std::size_t count)
{
    std::vector<Scalar> raw{rng.rational(Mode::exact, 5, 4, true)};
    for (std::size_t n = 1; n < count; ++n)
        raw.push_back(rng.rational(Mode::exact, 7, 5));
    return MomentSequence::from_values(std::move(raw));
}

std::optional<FamilyInstance> random_classical(Rng& rng, std::size_t depth)
{
    const Mode m = Mode::exact;
    const ClassicalParams p{{rng.rational(m, 3, 2, true), rng.rational(m), rng.rational(m)},
                            {rng.rational(m, 5, 2, true), rng.rational(m)}};
    try {
        auto inst = classical_instance(p, depth);
        if (!hankel_determinants(inst.g, depth + 2).nondegenerate())
            return std::nullopt;
        return inst;
    } catch (const ParameterError&) {
        return std::nullopt;
    }
}

} // namespace

TEST_CASE("exact field axioms")
{
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        const Scalar a = rng.rational(Mode::exact, 50, 30);
        const Scalar b = rng.rational(Mode::exact, 50, 30);
        const Scalar c = rng.rational(Mode::exact, 50, 30);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Q(0));
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("floating equality is reflexive and symmetric")
{
    Rng rng(102);
    const Tolerance tol(1e-12, 1e-9);
    for (int t = 0; t < 200; ++t) {
        const Scalar a = Scalar::floating(rng.uniform(-10, 10), rng.uniform(-10, 10));
        const Scalar b = a + Scalar::floating(rng.uniform(-1, 1) * std::pow(10.0, rng.integer(-14, -6)));
        CHECK(scalar_eq(a, a, tol));
        CHECK(scalar_eq(a, b, tol) == scalar_eq(b, a, tol));
    }
}

TEST_CASE("polynomial products evaluate pointwise")
{
    Rng rng(103);
    for (int t = 0; t < trials; ++t) {
        const auto a = rng.polynomial(5, Mode::exact);
        const auto b = rng.polynomial(5, Mode::exact);
        const Scalar x = rng.rational(Mode::exact);
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
}

TEST_CASE("exact and floating determinants agree")
{
    Rng rng(104);
    for (int t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(rng.integer(1, 6));
        Matrix e(n, n, Mode::exact), f(n, n, Mode::floating);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                e(i, j) = rng.rational(Mode::exact, 9, 5);
                f(i, j) = Scalar::floating(e(i, j).to_complex().real());
            }
        const double de = determinant(e).to_complex().real();
        const double df = determinant(f).to_complex().real();
        CHECK(std::abs(de - df) <= 1e-10 * std::max(1.0, std::abs(de)));
        const auto minors = leading_principal_minors(e);
        CHECK(minors.back() == determinant(e));
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(minors[k - 1] == determinant(e.leading(k)));
    }
}

TEST_CASE("moments survive the round trip through their orthogonal system")
{
    Rng rng(105);
    int checked = 0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
        const auto g = random_moments(rng, 2 * n + 2);
        const auto hankel = hankel_determinants(g, n + 1);
        if (!hankel.nondegenerate()) {
            CHECK_THROWS_AS(monic_ops_from_moments(g, n), DegenerateFunctional);
            continue;
        }
        const auto p = monic_ops_from_moments(g, n);
        ++checked;
        const std::vector<Polynomial> tail(p.polys().begin() + 1, p.polys().end());
        const auto back = moments_from_ops(tail);
        for (std::size_t k = 0; k < n; ++k)
            CHECK(back[k] == g[k]);
        CHECK(gram_check(p.polys(), g).pass);
        const auto again = ops_from_recurrence(p.b_values(), p.u_values(), n);
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(again[k] == p[k]);
        for (std::size_t k = 1; k <= n; ++k)
            CHECK(p.h(k) == hankel.values[k] / hankel.values[k - 1]);
        for (std::size_t k = 1; k < n; ++k)
            CHECK_FALSE(p.u(k).is_zero());
    }
    CHECK(checked > trials / 2);
}

TEST_CASE("rescaling moments scales Hankel determinants")
{
    Rng rng(106);
    for (int t = 0; t < trials; ++t) {
        const auto g = random_moments(rng, 9);
        const Scalar p = rng.rational(Mode::exact, 4, 3, true);
        std::vector<Scalar> raw;
        for (std::size_t k = 0; k < 9; ++k)
            raw.push_back(pow(p, static_cast<long>(k)) * g[k]);
        const auto scaled = MomentSequence::from_values(raw);
        const auto a = hankel_determinants(g, 5);
        const auto b = hankel_determinants(scaled, 5);
        for (std::size_t n = 1; n <= 5; ++n)
            CHECK(b.values[n - 1] == pow(p, static_cast<long>(n * (n - 1))) * a.values[n - 1]);
    }
}

TEST_CASE("main system and Gram test agree")
{
    Rng rng(107);
    int classical = 0, falsified = 0;
    for (int t = 0; t < trials; ++t) {
        const auto inst = random_classical(rng, 6);
        if (!inst)
            continue;
        const auto rep = is_umbral_classical(inst->g, inst->d, 6);
        CHECK(rep.verdict);
        CHECK(rep.gram.pass);
        REQUIRE(rep.main_system);
        CHECK(rep.main_system->pass == rep.gram.pass);
        ++classical;

        // perturbing one mu breaks both sides
        const long at = rng.integer(2, 5);
        const Scalar delta = rng.rational(Mode::exact, 3, 7, true);
        const UmbralDerivative bent(Mode::exact, [d = inst->d, at, delta](std::size_t n) {
            return static_cast<long>(n) == at ? d.mu(n) + delta : d.mu(n);
        });
        try {
            const auto broken = is_umbral_classical(inst->g, bent, 6);
            CHECK_FALSE(broken.verdict);
            if (broken.main_system)
                CHECK(broken.main_system->pass == broken.gram.pass);
            ++falsified;
        } catch (const ParameterError&) {
            // mu_at + delta vanished
        }
    }
    CHECK(classical >= 10);
    CHECK(falsified >= 10);
}

TEST_CASE("L is symmetric for classical instances")
{
    Rng rng(108);
    int seen = 0;
    for (int t = 0; t < trials && seen < 10; ++t) {
        const auto inst = random_classical(rng, 8);
        if (!inst)
            continue;
        ++seen;
        const auto rep = is_umbral_classical(inst->g, inst->d, 8);
        REQUIRE(rep.r);
        const auto l = compose_RD(*rep.r, inst->d);
        for (int k = 0; k < 5; ++k) {
            const auto f = rng.polynomial(4, Mode::exact);
            const auto h = rng.polynomial(4, Mode::exact);
            CHECK(symmetry_check(l, inst->g, f, h));
        }
    }
    CHECK(seen >= 5);
}

TEST_CASE("equivalence transforms preserve the verdict")
{
    Rng rng(109);
    int seen = 0;
    for (int t = 0; t < trials && seen < 10; ++t) {
        const auto inst = random_classical(rng, 5);
        if (!inst)
            continue;
        ++seen;
        const Scalar a = rng.rational(Mode::exact, 3, 3, true);
        const Scalar q = rng.rational(Mode::exact, 3, 3, true);
        const Scalar p = rng.rational(Mode::exact, 3, 3, true);
        const auto image = equivalence_transform(inst->g, inst->d, a, q, p);
        const auto rep = is_umbral_classical(image.g, image.d, 5);
        CHECK(rep.verdict);
        // Q'_n(x) = (p/q)^n Q_n(q x / p)
        const auto base = is_umbral_classical(inst->g, inst->d, 5);
        for (std::size_t n = 0; n < rep.q.size(); ++n)
            for (std::size_t k = 0; k <= n; ++k)
                CHECK(rep.q[n].coeff(k) ==
                      pow(p / q, static_cast<long>(n)) * base.q[n].coeff(k) * pow(q / p, static_cast<long>(k)));
    }
    CHECK(seen >= 5);
}

TEST_CASE("band width and mu recurrence order bound each other")
{
    Rng rng(110);
    int seen = 0;
    for (int t = 0; t < trials && seen < 10; ++t) {
        const auto inst = random_classical(rng, 10);
        if (!inst)
            continue;
        ++seen;
        const auto rep = is_umbral_classical(inst->g, inst->d, 10);
        REQUIRE(rep.r);
        const auto band = rep.r->band();
        REQUIRE(band.local);
        const auto prof = min_linear_recurrence(inst->d.mu_prefix(12), 4);
        REQUIRE(prof);
        CHECK(prof->order() <= band.width + 1);
        CHECK(band.width <= prof->order());
        CHECK(k_coefficient_check(*rep.r, *prof, 10).pass);
    }
    CHECK(seen >= 5);
}

TEST_CASE("sigma is odd and matches the Laurent form")
{
    Rng rng(111);
    for (int t = 0; t < trials; ++t) {
        const std::complex<double> g2(rng.uniform(-3, 3), rng.uniform(-3, 3));
        const std::complex<double> g3(rng.uniform(-3, 3), rng.uniform(-3, 3));
        const SigmaEvaluator sigma(g2, g3);
        const std::complex<double> z(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        const auto s = sigma(z);
        CHECK(std::abs(sigma(-z) + s) <= 1e-15 * std::abs(s));
        CHECK(std::abs(s - acceptance::sigma_laurent_oracle(z, g2, g3)) <= 1e-13 * std::abs(s));
    }
}

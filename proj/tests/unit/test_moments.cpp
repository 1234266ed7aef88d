#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "umbral/families.hpp"
#include "umbral/moments.hpp"
#include "umbral/orthopoly.hpp"

using namespace umbral;
using testing::exact_poly;
using testing::Q;

namespace {

MomentSequence hilbert()
{
    return MomentSequence::from_rule(Mode::exact, [](std::size_t n) { return Q(1, static_cast<long>(n) + 1); });
}

} // namespace

TEST_CASE("Hankel determinants of 1/(n+1)")
{
    const auto rep = hankel_determinants(hilbert(), 3);
    REQUIRE(rep.values.size() == 3);
    CHECK(rep.values[0] == Q(1));
    CHECK(rep.values[1] == Q(1, 12));
    CHECK(rep.values[2] == Q(1, 2160));
    CHECK(rep.nondegenerate());
}

TEST_CASE("Hankel determinants report the first zero")
{
    const auto g = MomentSequence::from_values({Q(1), Q(0), Q(0), Q(0), Q(0)});
    const auto rep = hankel_determinants(g, 3);
    REQUIRE(rep.first_zero);
    CHECK(*rep.first_zero == 2);
}

TEST_CASE("moments are normalized and the scale is kept")
{
    const auto g = MomentSequence::from_values({Q(2), Q(1), Q(4)});
    CHECK(g[0] == Q(1));
    CHECK(g[2] == Q(2));
    CHECK(g.raw(2) == Q(4));
    CHECK(g.scale() == Q(2));
    CHECK(g.limit() == std::optional<std::size_t>(3));
    CHECK_THROWS_AS(g[3], InsufficientData);
    CHECK_THROWS_AS(MomentSequence::from_values({Q(0), Q(1)}), DegenerateFunctional);
}

TEST_CASE("bilinear form")
{
    const auto g = hilbert();
    const auto one = exact_poly({"1"});
    const auto centered = exact_poly({"-1/2", "1"});
    CHECK(bilinear(g, one, one) == Q(1));
    CHECK(bilinear(g, centered, one) == Q(0));
    CHECK(bilinear(g, centered, centered) == Q(1, 12));
    CHECK(apply_functional(g, exact_poly({"0", "0", "1"})) == Q(1, 3));
}

TEST_CASE("moments from a three-term recurrence")
{
    // (n + 2) g_{n+1} - (n + 1) g_n = 0
    const auto g = moments_from_recurrence(
        [](std::size_t n) {
            const long k = static_cast<long>(n);
            return RecurrenceCoefficients{Q(k + 2), Q(-k - 1), Q(0)};
        },
        Q(1), 6);
    CHECK(g[1] == Q(1, 2));
    CHECK(g[2] == Q(1, 3));
    CHECK(g[9] == Q(1, 10));

    // q = 1/2: g_{n+1} + (-1 + q^n/2) g_n = 0
    const auto gq = moments_from_recurrence(
        [](std::size_t n) {
            return RecurrenceCoefficients{Q(1), Q(-1) + pow(Q(1, 2), static_cast<long>(n)) / 2, Q(0)};
        },
        Q(1), 4);
    CHECK(gq[1] == Q(1, 2));
    CHECK(gq[2] == Q(3, 8));

    CHECK_THROWS_AS(moments_from_recurrence(
                        [](std::size_t) { return RecurrenceCoefficients{Q(0), Q(1), Q(0)}; }, Q(1), 3),
                    ParameterError);
}

TEST_CASE("moments from orthogonal polynomials")
{
    const std::vector<Polynomial> one{exact_poly({"-1/2", "1"})};
    CHECK(moments_from_ops(one)[1] == Q(1, 2));

    const std::vector<Polynomial> two{exact_poly({"-1/2", "1"}), exact_poly({"3/20", "-1", "1"})};
    CHECK(moments_from_ops(two)[2] == Q(7, 20));

    std::vector<Polynomial> monomials;
    for (std::size_t n = 1; n <= 5; ++n)
        monomials.push_back(Polynomial::x_pow(n, Mode::exact));
    const auto g = moments_from_ops(monomials);
    CHECK(g[0] == Q(1));
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(g[n] == Q(0));
}

TEST_CASE("norms agree with Hankel ratios")
{
    const auto g = hilbert();
    const auto p = monic_ops_from_moments(g, 6);
    const auto rep = hankel_determinants(g, 7);
    CHECK(p.h(0) == rep.values[0]);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(p.h(n) == rep.values[n] / rep.values[n - 1]);
        CHECK(bilinear(g, p[n], p[n]) == p.h(n));
    }
}

TEST_CASE("round trip through the orthogonal system")
{
    const auto g = MomentSequence::from_values({Q(3), Q(1), Q(2), Q(-1), Q(5), Q(1, 2), Q(7)});
    const auto p = monic_ops_from_moments(g, 3);
    const std::vector<Polynomial> tail(p.polys().begin() + 1, p.polys().end());
    const auto back = moments_from_ops(tail);
    for (std::size_t n = 0; n <= 3; ++n)
        CHECK(back[n] == g[n]);
}

TEST_CASE("rescaling the variable scales Hankel determinants")
{
    const auto g = hilbert();
    const Scalar p = Q(3, 2);
    const auto scaled = MomentSequence::from_rule(
        Mode::exact, [g, p](std::size_t n) { return pow(p, static_cast<long>(n)) * g[n]; });
    const auto a = hankel_determinants(g, 5);
    const auto b = hankel_determinants(scaled, 5);
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(b.values[n - 1] == pow(p, static_cast<long>(n * (n - 1))) * a.values[n - 1]);
    CHECK(gram_check(monic_ops_from_moments(scaled, 5).polys(), scaled).pass);
}

TEST_CASE("floating Hankel determinants")
{
    const auto g = MomentSequence::from_rule(Mode::floating, [](std::size_t n) {
        return Scalar::floating(1.0 / static_cast<double>(n + 1));
    });
    const auto rep = hankel_determinants(g, 3, Tolerance(1e-12, 1e-9));
    CHECK(rep.nondegenerate());
    CHECK(rep.values[1].to_complex().real() == doctest::Approx(1.0 / 12.0));
    CHECK(rep.values[2].to_complex().real() == doctest::Approx(1.0 / 2160.0));
}

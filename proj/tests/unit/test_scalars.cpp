#include <doctest.h>

#include <sstream>

#include "test_support.hpp"
#include "umbral/linalg.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/scalar.hpp"

using namespace umbral;
using testing::F;
using testing::Q;

TEST_CASE("exact equality uses canonical form")
{
    CHECK(scalar_eq(Q(1, 3), Q(2, 6), Tolerance()));
    CHECK(Q("2/6") == Q(1, 3));
    CHECK(Q("2/6").to_string() == "1/3");
}

TEST_CASE("floating equality applies the tolerance formula")
{
    Tolerance tol(1e-12, 0.0);
    const auto sum = F(0.1) + F(0.2);
    CHECK_FALSE(sum == F(0.3));
    CHECK(scalar_eq(sum, F(0.3), tol));
    CHECK_FALSE(scalar_eq(F(1.0), F(1.0 + 1e-9), tol));
    CHECK(scalar_eq(F(1e6), F(1e6 + 1e-4), Tolerance(0.0, 1e-9)));
}

TEST_CASE("mixing modes is rejected")
{
    CHECK_THROWS_AS(scalar_eq(Q(1, 3), F(0.3333), Tolerance()), ModeMismatch);
    CHECK_THROWS_AS(Q(1, 3) + F(0.5), ModeMismatch);
    CHECK_THROWS_AS(Polynomial({Q(1), F(1.0)}), ModeMismatch);
}

TEST_CASE("field operations")
{
    CHECK(Q(1, 2) * Q(2, 3) == Q(1, 3));
    CHECK(pow(Q(1, 2), 0) == Q(1));
    CHECK(pow(Q(2, 3), -2) == Q(9, 4));
    CHECK(-Q(1, 2) == Q(-1, 2));
    CHECK(Q(1, 2) - Q(1, 3) == Q(1, 6));
    CHECK(Q(3, 4) / Q(3, 8) == Q(2));
    CHECK_THROWS_AS(Q(1) / Q(0), DivisionByZero);
    CHECK_THROWS_AS(pow(Q(0), -1), DivisionByZero);
    CHECK_THROWS_AS(divide(F(1.0), F(1e-20), Tolerance(1e-15, 0.0)), DivisionByZero);
}

TEST_CASE("parsing")
{
    CHECK(Q("0.3") == Q(3, 10));
    CHECK(Q("-1.25e-1") == Q(-1, 8));
    CHECK(Q("7") == Q(7));
    CHECK(Scalar::parse("0.5", Mode::floating) == F(0.5));
    CHECK(Scalar::parse("1+2i", Mode::floating) == F(1.0, 2.0));
    CHECK_THROWS_AS(Q("1/0"), Error);
    CHECK_THROWS_AS(Q("abc"), Error);
}

TEST_CASE("tolerance validation")
{
    CHECK_THROWS_AS(Tolerance(-1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(Tolerance(0.0, -1.0), ParameterError);
}

TEST_CASE("polynomial basics")
{
    const auto p = testing::exact_poly({"1", "0", "0"});
    CHECK(p.degree() == 0);
    CHECK(Polynomial().degree() == -1);
    const auto a = testing::exact_poly({"-1/2", "1"});
    const auto sq = a * a;
    CHECK(sq == testing::exact_poly({"1/4", "-1", "1"}));
    CHECK(sq.evaluate(Q(1, 2)) == Q(0));
    CHECK(sq.is_monic());
    CHECK((sq - sq).is_zero());
    CHECK(a.shifted(2) == testing::exact_poly({"0", "0", "-1/2", "1"}));
    std::ostringstream os;
    os << Q(-3, 4);
    CHECK(os.str() == "-3/4");
}

TEST_CASE("determinants and nullspaces")
{
    Matrix m(2, 2, Mode::exact);
    m(0, 0) = Q(1);
    m(0, 1) = Q(2);
    m(1, 0) = Q(2);
    m(1, 1) = Q(4);
    CHECK(determinant(m) == Q(0));
    const auto ns = nullspace(m, Tolerance());
    CHECK(ns.rank == 1);
    REQUIRE(ns.basis.size() == 1);
    CHECK(ns.basis[0][0] + 2 * ns.basis[0][1] == Q(0));

    Matrix f(2, 2, Mode::floating);
    f(0, 0) = F(2.0);
    f(0, 1) = F(1.0);
    f(1, 0) = F(1.0);
    f(1, 1) = F(3.0);
    CHECK(determinant(f).to_complex().real() == doctest::Approx(5.0));
    const auto x = solve(f, {F(3.0), F(4.0)});
    CHECK(x[0].to_complex().real() == doctest::Approx(1.0));
    CHECK(x[1].to_complex().real() == doctest::Approx(1.0));
}

#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qfoulkes/qpoly.hpp"

using namespace qfoulkes;

namespace {

QPoly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(0, 6), num(-5, 5), den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = ratio(num(rng), den(rng));
    return QPoly(c);
}

}  // namespace

TEST_CASE("normalization drops trailing zeros")
{
    CHECK(QPoly(std::vector<Rational>{1, 0, 0}) == QPoly(1));
    CHECK(QPoly(0).is_zero());
    CHECK(QPoly().degree() == -1);
    CHECK(QPoly::monomial(3, 2).degree() == 2);
    CHECK(QPoly::monomial(0, 5).is_zero());
    CHECK(QPoly::parse("q^2 + 2*q").valuation() == 1);
}

TEST_CASE("parse and print")
{
    CHECK(QPoly::parse("1 + 2*q - 3/4*q^3") == QPoly(std::vector<Rational>{1, 2, 0, ratio(-3, 4)}));
    CHECK(QPoly::parse("q") == QPoly::q());
    CHECK(QPoly::parse("-q2") == QPoly::monomial(-1, 2));
    CHECK(QPoly::parse("0").is_zero());
    CHECK(QPoly::parse(QPoly::parse("1/2 - q + 5*q^4").str()) == QPoly::parse("1/2 - q + 5*q^4"));
    CHECK(QPoly().str() == "0");
    CHECK_THROWS_AS(QPoly::parse(""), std::invalid_argument);
    CHECK_THROWS(QPoly::parse("1 + + q"));
    CHECK(rational_str(ratio(6, 4)) == "3/2");
    CHECK(parse_rational("-10/4") == ratio(-5, 2));
}

TEST_CASE("ratio reduces")
{
    const Rational r = ratio(4, 2);
    CHECK(r.get_den() == 1);
    CHECK(r == 2);
    CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        const QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == QPoly());
        CHECK((a * b).eval(ratio(2, 3)) == a.eval(ratio(2, 3)) * b.eval(ratio(2, 3)));
        if (!b.is_zero()) {
            const auto [quot, rem] = divide(a, b);
            CHECK(quot * b + rem == a);
            CHECK(rem.degree() < b.degree());
        }
    }
}

TEST_CASE("division by 1 - q")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const QPoly r = random_poly(rng);
        CHECK(divide_by_one_minus_q(r * one_minus_q()) == r);
    }
    CHECK_THROWS_AS(divide_by_one_minus_q(QPoly(1)), NotDivisible);
    CHECK_THROWS_AS(divide_exact(QPoly::parse("1+q^2"), QPoly::parse("1+q")), NotDivisible);
    CHECK(divide_by_one_minus_q(QPoly()).is_zero());
}

TEST_CASE("q-integers and q-factorials")
{
    CHECK(q_int(3) == QPoly::parse("1+q+q^2"));
    CHECK_THROWS_AS(q_int(0), std::invalid_argument);
    CHECK(q_factorial(0) == QPoly(1));
    for (int n = 0; n <= 10; ++n) {
        CHECK(q_factorial(n) == oracle::q_fact(n));
        mpz_class f = 1;
        for (int k = 2; k <= n; ++k)
            f *= k;
        CHECK(q_factorial(n).eval(1) == f);
    }
}

TEST_CASE("substitution, powers and predicates")
{
    const QPoly p = QPoly::parse("1 + 2*q");
    CHECK(p.substitute_power(3) == QPoly::parse("1 + 2*q^3"));
    CHECK(p.pow(2) == QPoly::parse("1 + 4*q + 4*q^2"));
    CHECK(p.pow(0) == QPoly(1));
    CHECK(p.is_natural());
    CHECK_FALSE(QPoly::parse("1 - q").is_natural());
    CHECK_FALSE(QPoly::parse("1/2*q").is_natural());
    CHECK(QPoly::parse("1/2*q").is_integral() == false);
    CHECK(QPoly::parse("3 - 5*q").min_coeff() == -5);
    CHECK(QPoly::parse("1/2 + 1/3*q").denominator_lcm() == 6);
    CHECK(p[1] == 2);
    CHECK(p[7] == 0);
}

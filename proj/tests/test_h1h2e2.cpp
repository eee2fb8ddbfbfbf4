#include "doctest.h"

#include "qfoulkes/h1h2e2.hpp"

using namespace qfoulkes;

TEST_CASE("reduction uses h1^2 = h2 + e2")
{
    const auto f = H1H2E2Form::from_symfunc(power(h_gen(1), 2));
    REQUIRE(f);
    CHECK(f->str() == "h2 + e2");
    const auto g = H1H2E2Form::from_symfunc(power(h_gen(1), 3) * e_gen(2));
    REQUIRE(g);
    CHECK(g->str() == "h1*h2*e2 + h1*e2^2");
}

TEST_CASE("round trip and printing")
{
    const SymFunc f = power(e_gen(2), 3) * h_gen(2) * QPoly(6) + power(e_gen(2), 4) * QPoly(2);
    const auto form = H1H2E2Form::from_symfunc(f);
    REQUIRE(form);
    CHECK(form->str() == "6*h2*e2^3 + 2*e2^4");
    CHECK(form->is_natural());
    CHECK(form->to_symfunc() == f);
    CHECK(H1H2E2Form::from_symfunc(SymFunc{})->is_zero());
    CHECK(H1H2E2Form::from_symfunc(SymFunc{})->str() == "0");
}

TEST_CASE("negative and fractional coefficients are not natural")
{
    const auto f = H1H2E2Form::from_symfunc(h_gen(2) - e_gen(2));
    REQUIRE(f);
    CHECK_FALSE(f->is_natural());
    CHECK(f->str() == "h2 - e2");
    const auto g = H1H2E2Form::from_symfunc(p_gen(2));
    REQUIRE(g);
    CHECK(g->to_symfunc() == p_gen(2));
}

TEST_CASE("outside the subring")
{
    CHECK_FALSE(H1H2E2Form::from_symfunc(p_gen(3)));
    CHECK_FALSE(H1H2E2Form::from_symfunc(h_gen(2) * QPoly::q()));
}

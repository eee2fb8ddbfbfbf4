#include "doctest.h"

#include "oracles.hpp"
#include "qfoulkes/foulkes.hpp"
#include "qfoulkes/h1h2e2.hpp"

using namespace qfoulkes;

namespace {

SymFunc e2(unsigned k) { return power(e_gen(2), k); }
SymFunc h2(unsigned k) { return power(h_gen(2), k); }
SymFunc times(const SymFunc& f, long c) { return f * QPoly(c); }

mpz_class fact(int n)
{
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

}  // namespace

TEST_CASE("classical Foulkes differences")
{
    CHECK(f_classic(2, 3) == parse_schur("s[2,2,2]"));
    CHECK(f_classic(2, 2).is_zero());
    CHECK(f_classic(1, 4).is_zero());
    CHECK_THROWS_AS(f_classic(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(f_classic(0, 2), std::invalid_argument);
}

TEST_CASE("q-version specializes to the classical one at q = 0")
{
    for (int a = 1; a <= 4; ++a)
        for (int b = a; a * b <= 16; ++b) {
            const SchurExpansion f = f_q(a, b);
            CHECK(f.at_q(0) == f_classic(a, b));
            CHECK(from_schur(f).at_q(1) == f_q_at1(a, b));
            if (a == b)
                CHECK(f.is_zero());
        }
}

TEST_CASE("positivity report")
{
    const FoulkesReport r = check_conjecture1(2, 4);
    CHECK(r.positive);
    CHECK_FALSE(r.witness);
    CHECK(r.kind.size() > 0);
    CHECK(r.expansion == f_q(2, 4));
}

TEST_CASE("plethysm dimensions")
{
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a * b <= 12; ++b) {
            mpz_class want = fact(a * b) / fact(a);
            for (int i = 0; i < a; ++i)
                want /= fact(b);
            CHECK(dim_h_plethysm(a, b) == want);
            CHECK(dim_of(h_plethysm(a, b)) == QPoly(mpq_class(want)));
        }
    for (int a = 2; a <= 4; ++a)
        for (int b = a + 1; a * b <= 16; ++b) {
            const QPoly d = dim_of(from_schur(f_q(a, b)));
            CHECK(d == dim_Fq_closed(a, b));
            CHECK(d.eval(1) == dim_Fq_at1(a, b));
        }
    CHECK(dim_Fq_at1(2, 3) == 360);
    CHECK_THROWS_AS(dim_Fq_at1(3, 3), std::invalid_argument);
}

TEST_CASE("closed forms at q = 1")
{
    CHECK(f_q_at1(2, 3) == times(e2(3), 4));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a * b <= 16; ++b)
            CHECK(lemma31(a, b) == lemma31_engine(a, b));
    for (int a = 2; a <= 4; ++a)
        for (int b = a + 1; a * b <= 20; ++b)
            CHECK(f_q1_closed(a, b) == f_q_at1(a, b));
    for (int b = 1; b <= 5; ++b) {
        const EOParts eo = eo_parts(b);
        CHECK(eo.even + eo.odd == power(h_gen(2) + e_gen(2), static_cast<unsigned>(b)));
        CHECK(eo.even - eo.odd == power(h_gen(2) - e_gen(2), static_cast<unsigned>(b)));
    }
    CHECK_THROWS_AS(eo_parts(0), std::invalid_argument);
}

TEST_CASE("Theta by extraction")
{
    CHECK(theta_direct(2, 2) == times(e2(3), 2));
    CHECK(theta_direct(2, 3) == times(e2(4), 2) + times(e2(3) * h2(1), 6));
    for (int a = 2; a <= 3; ++a)
        for (int b = a; b <= 6; ++b) {
            const auto form = H1H2E2Form::from_symfunc(theta_direct(a, b));
            REQUIRE(form);
            CHECK(form->is_natural());
        }
    CHECK_THROWS_AS(theta_direct(3, 2), std::invalid_argument);
}

TEST_CASE("Theta report keeps closed-form disagreements as data")
{
    const ThetaReport r = theta_recurrence_check(2, 7);
    REQUIRE(r.rows.size() == 6);
    for (const auto& row : r.rows) {
        CHECK(row.direct);
        CHECK(row.direct_natural);
        if (row.b >= 5) {
            REQUIRE(row.recurrence_agrees);
            CHECK(*row.recurrence_agrees);
        }
    }
    CHECK_FALSE(r.rows[1].chain_agrees);
}

TEST_CASE("theta polynomials")
{
    // sum_k k a C(a+1, 2k+1) z^{2k+1}, expanded by hand.
    CHECK(theta_rho(2) == QPoly::parse("2*q^3"));
    CHECK(theta_rho(3) == QPoly::parse("12*q^3"));
    CHECK(theta_rho(4) == QPoly::parse("40*q^3 + 8*q^5"));
    CHECK(theta_poly(0, 3) == theta_rho(2));
}

TEST_CASE("stability and double stability")
{
    CHECK(stability_diff_classic(2, 3) == parse_schur("s[2,2,2]"));
    CHECK(stability_diff_classic(2, 4) == parse_schur("s[4,2] + s[2,2,2,2]"));
    CHECK(stability_diff(2, 3).at_q(0) == stability_diff_classic(2, 3));
    CHECK(manivel_diff(2, 3) == stability_diff(3, 3) - stability_diff(2, 3));
    CHECK_THROWS_AS(manivel_diff(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(stability_diff(0, 3), std::invalid_argument);
}

TEST_CASE("generalized differences")
{
    CHECK(generalized_f_q(2, 3, 3, 2) == f_q(2, 3));
    CHECK(generalized_classic(2, 6, 3, 4) == parse_schur("s[9,3] + s[4,4,4] + s[6,4,2] + s[7,4,1] + s[8,2,2]"));
    CHECK(generalized_f_q(2, 6, 3, 4).at_q(0) == generalized_classic(2, 6, 3, 4));
    CHECK(generalized_at1(2, 6, 3, 4) == generalized_q1_closed(2, 6, 3, 4));
    CHECK_THROWS_AS(generalized_f_q(2, 6, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(generalized_f_q(3, 4, 2, 6), std::invalid_argument);
}

TEST_CASE("product inequality h_{b-1}[h_a] h_{a-1} >= h_{a-1}[h_b] h_{b-1}")
{
    CHECK(check_3_5(2, 3).positive);
    CHECK(check_3_5(3, 4).positive);
    CHECK_THROWS_AS(check_3_5(3, 3), std::invalid_argument);
}

TEST_CASE("iterated plethysm")
{
    const std::vector<int> ab{2, 3};
    CHECK(iterated_h(ab) == h_plethysm(2, 3));
    const std::vector<int> one{4};
    CHECK(iterated_h(one) == h_gen(4));
    const std::vector<int> abc{2, 2, 2};
    const SymFunc h = iterated_h(abc);
    CHECK(dim_of(h) == QPoly(mpq_class(fact(8) / (fact(2) * fact(2) * fact(2) * fact(2) * fact(2) * fact(2) * fact(2)))));
    const std::vector<int> bad{3, 3};
    CHECK_THROWS_AS(alternating_sum(bad), std::invalid_argument);
    const std::vector<int> two{3, 2};
    CHECK(alternating_sum(two) == f_classic(2, 3));
    CHECK_THROWS_AS(immanant_case(3, 2, 4), std::invalid_argument);
}

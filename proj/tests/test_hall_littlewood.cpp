#include "doctest.h"

#include "oracles.hpp"
#include "qfoulkes/hall_littlewood.hpp"

using namespace qfoulkes;

TEST_CASE("charge of small words")
{
    const std::vector<int> id{1, 2, 3};
    const std::vector<int> rev{3, 2, 1};
    CHECK(charge(std::span<const int>(id)) == 3);
    CHECK(charge(std::span<const int>(rev)) == 0);
    const std::vector<int> w{2, 1, 1, 2};
    CHECK(charge(std::span<const int>(w)) == 1);
    const std::vector<int> bad{2, 2, 1};
    CHECK_THROWS_AS(charge(std::span<const int>(bad)), NotPartitionContent);
    CHECK(charge(Word{}) == 0);
}

TEST_CASE("semistandard tableaux")
{
    const auto ts = ssyt_enumerate(Partition({2, 1}), Partition({1, 1, 1}));
    CHECK(ts.size() == 2);
    for (const auto& t : ts)
        CHECK(t.is_semistandard());
    CHECK(ssyt_enumerate(Partition({2}), Partition({1, 1, 1})).empty());
    CHECK(reading_word(ts.front()).letters.size() == 3);
}

TEST_CASE("Kostka-Foulkes at q = 1 are Kostka numbers")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                const QPoly k = kostka_foulkes(lambda, mu);
                CHECK(k.eval(1) == scalar(oracle::jacobi_trudi(lambda), h_gen(mu)).eval(0));
                CHECK(k.is_natural());
                if (!dominance_leq(mu, lambda))
                    CHECK(k.is_zero());
            }
}

TEST_CASE("Kostka-Foulkes special shapes")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(kostka_foulkes(mu, mu) == QPoly(1));
            CHECK(kostka_foulkes(Partition({n}), mu) == QPoly::monomial(1, n_stat(mu)));
        }
    // K_{lambda,1^n} = q^{n(lambda')} [n]! / prod [h].
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(kostka_foulkes(lambda, Partition::rectangle(1, n)) == oracle::q_hook_formula(conjugate(lambda)));
    CHECK(kostka_foulkes(Partition({2, 1}), Partition({1, 1, 1})) == QPoly::parse("q + q^2"));
}

TEST_CASE("Hall-Littlewood H_n")
{
    CHECK_THROWS_AS(hl_h(0), std::invalid_argument);
    for (int n = 1; n <= 7; ++n) {
        const SymFunc h = hl_h(n);
        CHECK(h.at_q(0) == h_gen(n));
        CHECK(h.at_q(1) == p_gen(Partition::rectangle(1, n)));
        CHECK(dim_of(h) == oracle::q_fact(n));
        const SchurExpansion s = to_schur(h);
        for (const auto& lambda : partitions_of(n)) {
            CHECK(s.coeff(lambda) == oracle::q_hook_formula(lambda));
            CHECK(s.coeff(lambda) == standard_charge_polynomial(lambda));
            CHECK(s.coeff(lambda) == qhook_coeff(lambda));
        }
    }
}

TEST_CASE("q-Schur functions interpolate")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            const SchurExpansion s = q_schur(mu);
            CHECK(s.at_q(0) == SchurExpansion(mu, 1));
            CHECK(from_schur(s).at_q(1) == e_gen(conjugate(mu)));
            CHECK(q_schur_p(mu) == from_schur(s));
            for (const auto& [lambda, c] : s.terms())
                CHECK(dominance_leq(lambda, mu));
        }
    for (int n = 1; n <= 6; ++n)
        CHECK(from_schur(q_schur(Partition({n}))) == hl_h(n));
}

TEST_CASE("memo table install and snapshot")
{
    auto& t = KostkaFoulkesTable::global();
    const Partition l{3, 1}, m{2, 1, 1};
    const QPoly v = t.get(l, m);
    CHECK(t.snapshot().count({l, m}) == 1);
    t.install({l, m}, v);
    CHECK(t.get(l, m) == v);
}

#include "doctest.h"

#include "oracles.hpp"
#include "qfoulkes/partition.hpp"

using namespace qfoulkes;

TEST_CASE("construction normalizes and validates")
{
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
    CHECK(Partition::rectangle(2, 3) == Partition({2, 2, 2}));
    CHECK(Partition({4, 2, 2}).multiplicity(2) == 2);
    CHECK(Partition({4, 2}).part(5) == 0);
}

TEST_CASE("text form round trips")
{
    for (const auto& p : partitions_of(7))
        CHECK(Partition::parse(p.str()) == p);
    CHECK(Partition::parse("[]") == Partition{});
    CHECK(Partition::parse(" [ 3, 3 ,1 ]") == Partition({3, 3, 1}));
    CHECK_THROWS_AS(Partition::parse("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[a]"), std::invalid_argument);
}

TEST_CASE("partitions_of matches sorted compositions")
{
    for (int n = 0; n <= 12; ++n) {
        auto got = partitions_of(n);
        auto want = oracle::partitions_by_compositions(n);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
    const auto four = partitions_of(4);
    REQUIRE(four.size() == 5);
    CHECK(four.front() == Partition({4}));
    CHECK(four.back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("partition_count matches the coin-change recursion")
{
    for (int n = 0; n <= 60; ++n)
        CHECK(partition_count(n) == oracle::partition_count_dp(n));
}

TEST_CASE("conjugation is an involution that swaps rows and columns")
{
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : partitions_of(n)) {
            const Partition c = conjugate(p);
            CHECK(conjugate(c) == p);
            CHECK(c.weight() == n);
            CHECK(c.length() == p[0]);
        }
}

TEST_CASE("class equation: sum of n!/z_mu is n!")
{
    for (int n = 1; n <= 10; ++n) {
        mpz_class fact = 1;
        for (int k = 2; k <= n; ++k)
            fact *= k;
        mpq_class total = 0;
        for (const auto& mu : partitions_of(n))
            total += mpq_class(1) / mpq_class(z_of(mu));
        CHECK(total * fact == fact);
    }
    CHECK(z_of(Partition({2, 2, 1})) == 8);
}

TEST_CASE("hook lengths give the number of standard tableaux")
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& p : partitions_of(n)) {
            mpz_class prod = 1;
            for (const auto& [cell, h] : hook_lengths(p))
                prod *= h;
            mpz_class fact = 1;
            for (int k = 2; k <= n; ++k)
                fact *= k;
            CHECK(fact / prod == oracle::syt_count(p));
        }
    const auto h = hook_lengths(Partition({3, 1}));
    CHECK(h.at({1, 1}) == 4);
    CHECK(h.at({1, 3}) == 1);
}

TEST_CASE("n statistic")
{
    CHECK(n_stat(Partition({1, 1, 1})) == 3);
    CHECK(n_stat(Partition({3})) == 0);
    CHECK(n_stat(Partition({2, 1})) == 1);
}

TEST_CASE("dominance order")
{
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK_FALSE(dominance_leq(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK_FALSE(dominance_leq(Partition({4, 1, 1}), Partition({3, 3})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), std::invalid_argument);
    // Conjugation reverses dominance.
    for (const auto& a : partitions_of(7))
        for (const auto& b : partitions_of(7))
            CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
}

TEST_CASE("part manipulations")
{
    CHECK(add_parts(Partition({3, 1}), Partition({2, 2, 1})) == Partition({5, 3, 1}));
    CHECK(remove_largest_part(Partition({6, 2, 2})) == Partition({2, 2}));
    CHECK(remove_largest_part(Partition{}) == Partition{});
    CHECK(merge(Partition({3, 1}), Partition({2, 2})) == Partition({3, 2, 2, 1}));
    CHECK(scale_parts(Partition({2, 1}), 3) == Partition({6, 3}));
    CHECK(cycle_sign(Partition({2, 1})) == -1);
    CHECK(cycle_sign(Partition({3})) == 1);
}

TEST_CASE("ordering lists weight first, then reverse lexicographic")
{
    CHECK(Partition({5}) < Partition({1, 1, 1, 1, 1, 1}));
    CHECK(Partition({3, 1}) < Partition({2, 2}));
}

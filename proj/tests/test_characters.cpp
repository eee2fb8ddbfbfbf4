#include "doctest.h"

#include "oracles.hpp"
#include "qfoulkes/characters.hpp"

using namespace qfoulkes;

TEST_CASE("S_3 table")
{
    // Rows [3], [2,1], [1,1,1]; columns the same classes.
    const std::vector<std::vector<std::int64_t>> want{{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
    const std::vector<Partition> cls{Partition({1, 1, 1}), Partition({2, 1}), Partition({3})};
    const std::vector<Partition> irr{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(character(irr[i], cls[j]) == want[i][j]);
}

TEST_CASE("degrees are standard tableau counts")
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(character(lambda, Partition::rectangle(1, n)) == oracle::syt_count(lambda));
}

TEST_CASE("row orthogonality")
{
    for (int n = 1; n <= 8; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                mpq_class s = 0;
                for (const auto& mu : parts)
                    s += mpq_class(character(a, mu) * character(b, mu)) / mpq_class(z_of(mu));
                CHECK(s == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("errors and lookup")
{
    CHECK_THROWS_AS(character(Partition({2}), Partition({1, 1, 1})), std::invalid_argument);
    const auto& idx = PartitionIndex::of(5);
    CHECK(idx.size() == 7);
    CHECK(idx.index(Partition({3, 2})) >= 0);
    CHECK(idx.index(Partition({3, 3})) == -1);
    CHECK(idx.at(idx.index(Partition({2, 2, 1}))) == Partition({2, 2, 1}));
}

TEST_CASE("large degree stays exact")
{
    // chi^{[n-1,1]}(mu) = (number of fixed points) - 1.
    const auto t = CharacterTable::global().degree(24);
    CHECK(t->n == 24);
    CHECK(character(Partition({23, 1}), Partition({5, 5, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})) == 13);
}

#include "doctest.h"

#include "oracles.hpp"
#include "qfoulkes/characters.hpp"
#include "qfoulkes/configsearch.hpp"
#include "qfoulkes/hall_littlewood.hpp"

using namespace qfoulkes;

namespace {

Partition P(std::initializer_list<int> p) { return Partition(p); }

}  // namespace

TEST_CASE("candidate domain")
{
    for (int n = 1; n <= 16; ++n) {
        std::size_t want = 0;
        for (int u = 2; u <= n; ++u)
            if (n % u == 0 && n / u >= 2)
                want += static_cast<std::size_t>(oracle::partition_count_dp(u) * oracle::partition_count_dp(n / u));
        const auto c = candidates(n);
        CHECK(c.size() == want);
        CHECK(std::is_sorted(c.begin(), c.end()));
        for (const auto& x : c)
            CHECK(x.weight() == n);
    }
}

TEST_CASE("single Foulkes configurations")
{
    CHECK(is_foulkes_config(P({2}), P({3}), P({3}), P({2})).holds);
    CHECK(is_foulkes_config(P({1, 1}), P({1, 1, 1}), P({3}), P({1, 1})).holds);
    CHECK_FALSE(is_foulkes_config(P({3}), P({2}), P({2}), P({3})).holds);
    CHECK_FALSE(is_foulkes_config(P({2}), P({3}), P({2}), P({3})).holds);
    CHECK_THROWS_AS(is_foulkes_config(P({2}), P({3}), P({2}), P({2})), std::invalid_argument);
    CHECK_THROWS_AS(is_foulkes_config(P({1}), P({6}), P({2}), P({3})), std::invalid_argument);
    const ConfigCheck c = is_foulkes_config(P({2}), P({3}), P({3}), P({2}));
    CHECK(c.difference == parse_schur("s[2,2,2]"));
}

TEST_CASE("negative controls are not configurations")
{
    for (const auto& q : reference::negative_controls()) {
        const ConfigCheck c = is_foulkes_config(q.alpha, q.beta, q.gamma, q.delta);
        CHECK_FALSE(c.holds);
        REQUIRE(c.witness);
        CHECK(c.witness->second.min_coeff() < 0);
    }
}

TEST_CASE("e-condition")
{
    CHECK(e_condition(P({2}), P({3}), P({3}), P({2})));
    CHECK_FALSE(e_condition(P({1, 1}), P({1, 1, 1}), P({3}), P({1, 1})));
    for (int a = 2; a <= 3; ++a)
        for (int k = 1; k <= 2; ++k)
            CHECK(e_condition(P({a}), Partition::rectangle(6 / a, k), P({6 / a}), Partition::rectangle(a, k)));
}

TEST_CASE("single q-configurations")
{
    CHECK(is_q_foulkes_config(P({2}), P({3}), P({3}), P({2})).holds);
    CHECK_FALSE(is_q_foulkes_config(P({1, 1}), P({1, 1, 1}), P({3}), P({1, 1})).holds);
    CHECK(is_q_foulkes_config(P({2}), P({4, 4}), P({4}), P({2, 2})).holds);
    CHECK(is_q_foulkes_config(P({2}), P({3, 3, 3}), P({3}), P({2, 2, 2})).holds);
    // The degree-12 extra configuration, in the orientation the computation gives.
    CHECK(is_q_foulkes_config(P({2}), P({3, 3}), P({3}), P({2, 2})).holds);
    CHECK_FALSE(is_q_foulkes_config(P({3}), P({2, 2}), P({2}), P({3, 3})).holds);
}

TEST_CASE("enumeration small degrees")
{
    for (int n : {2, 3, 5, 7, 11, 13})
        CHECK(enumerate_foulkes_configs(n).empty());
    const auto six = enumerate_foulkes_configs(6);
    CHECK(six.size() == 4);
    const auto q6 = enumerate_q_configs(6);
    REQUIRE(q6.size() == 1);
    CHECK(q6.front().str() == "<[2],[3] : [3],[2]>_q");
    CHECK(q6.front().is_q_foulkes);
    CHECK(q6.front().passed_e_condition);
}

TEST_CASE("every q-configuration is a Foulkes configuration")
{
    for (int n = 4; n <= 12; ++n) {
        const auto f = enumerate_foulkes_configs(n);
        for (const auto& c : enumerate_q_configs(n)) {
            const bool found = std::any_of(f.begin(), f.end(), [&](const Configuration& x) {
                return x.alpha == c.alpha && x.beta == c.beta && x.gamma == c.gamma && x.delta == c.delta;
            });
            CHECK(found);
        }
    }
}

TEST_CASE("search is deterministic and independent of the thread count")
{
    auto render = [](const std::vector<Configuration>& cs) {
        std::string s;
        for (const auto& c : cs)
            s += c.str() + ";";
        return s;
    };
    const auto a = render(enumerate_foulkes_configs(12, 1));
    clear_config_caches();
    const auto b = render(enumerate_foulkes_configs(12, 3));
    CHECK(a == b);
    CHECK(render(enumerate_q_configs(12, 1)) == render(enumerate_q_configs(12, 4)));
}

TEST_CASE("e-condition biconditional report")
{
    const auto r = check_conjecture4(12);
    CHECK(r.holds());
    CHECK(r.both + r.neither == r.e_pairs);
    CHECK(r.both == static_cast<int>(enumerate_q_configs(12).size()));
}

TEST_CASE("guess patterns")
{
    const GuessVerdict v = check_guess_pattern(2, 4, 4, 2, 2);
    CHECK(v.q_config);
    CHECK_THROWS_AS(check_guess_pattern(3, 4, 2, 6, 1), std::invalid_argument);
    for (const auto& g : check_guess_patterns(12))
        CHECK(g.a * g.b * g.k == 12);
}

TEST_CASE("reference data shape")
{
    CHECK(reference::foulkes_counts().size() == 16);
    CHECK(reference::q_foulkes_counts().size() == 20);
    CHECK(reference::foulkes_list(6).size() == 4);
    CHECK(reference::foulkes_list(7).empty());
    CHECK(reference::q_foulkes_list(16).size() == 3);
}

TEST_CASE("plethysm vectors")
{
    for (const auto& c : candidates(8)) {
        const auto v = classical_plethysm_vector(c);
        REQUIRE(v);
        const SchurExpansion want = to_schur(plethysm(schur_gen(c.alpha), schur_gen(c.beta)));
        const auto& idx = PartitionIndex::of(8);
        REQUIRE(static_cast<int>(v->size()) == idx.size());
        for (int i = 0; i < idx.size(); ++i)
            CHECK(QPoly((*v)[static_cast<std::size_t>(i)]) == want.coeff(idx.at(i)));
        CHECK(q_plethysm(c).at_q(0) == plethysm(schur_gen(c.alpha), schur_gen(c.beta)));
    }
}

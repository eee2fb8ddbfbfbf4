#include "qfoulkes/configsearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "qfoulkes/characters.hpp"
#include "qfoulkes/hall_littlewood.hpp"
#include "qfoulkes/memo.hpp"
#include "qfoulkes/parallel.hpp"

namespace qfoulkes {

namespace {

using Vector = std::shared_ptr<const std::vector<std::int64_t>>;

Memo<Candidate, Vector>& classical_memo()
{
    static Memo<Candidate, Vector> m;
    return m;
}
Memo<Candidate, SymFunc>& e_memo()
{
    static Memo<Candidate, SymFunc> m;
    return m;
}
Memo<Candidate, SymFunc>& q_memo()
{
    static Memo<Candidate, SymFunc> m;
    return m;
}

void check_side(const Partition& x, const Partition& y)
{
    if (x == Partition{1} || y == Partition{1})
        throw std::invalid_argument("configuration partitions must differ from [1]");
    if (x.empty() || y.empty())
        throw std::invalid_argument("configuration partitions must be nonempty");
}

void check_quad(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& delta)
{
    check_side(alpha, beta);
    check_side(gamma, delta);
    if (alpha.weight() * beta.weight() != gamma.weight() * delta.weight())
        throw std::invalid_argument("configuration sides have different degrees");
}

SymFunc e_plethysm(const Candidate& c)
{
    return e_memo().get(c, [&c] { return plethysm(e_gen(conjugate(c.alpha)), e_gen(conjugate(c.beta))); });
}

SchurExpansion to_expansion(const std::vector<std::int64_t>& v, int n)
{
    const auto& idx = PartitionIndex::of(n);
    SchurExpansion out;
    for (int i = 0; i < idx.size(); ++i)
        if (v[static_cast<std::size_t>(i)] != 0)
            out.add_term(idx.at(i), QPoly(Rational(v[static_cast<std::size_t>(i)])));
    return out;
}

// v_hi - v_lo componentwise >= 0.  Equal vectors count: the reference
// tables include distinct sides whose plethysms coincide (two such pairs at
// n = 8), so "strict" only excludes identical sides.
bool weakly_above(const std::vector<std::int64_t>& hi, const std::vector<std::int64_t>& lo)
{
    for (std::size_t i = 0; i < hi.size(); ++i)
        if (hi[i] < lo[i])
            return false;
    return true;
}

ConfigCheck classical_check(const Candidate& lo, const Candidate& hi)
{
    ConfigCheck r;
    const auto a = classical_plethysm_vector(lo);
    const auto b = classical_plethysm_vector(hi);
    r.holds = weakly_above(*b, *a);
    std::vector<std::int64_t> diff(a->size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = (*b)[i] - (*a)[i];
    r.difference = to_expansion(diff, lo.weight());
    if (!r.holds)
        r.witness = positivity_witness(r.difference);
    return r;
}

ConfigCheck q_check(const Candidate& lo, const Candidate& hi)
{
    ConfigCheck r;
    r.difference = divide_by_one_minus_q(to_schur(q_plethysm(hi) - q_plethysm(lo)));
    r.holds = schur_positive(r.difference);
    if (!r.holds)
        r.witness = positivity_witness(r.difference);
    return r;
}

Configuration make_config(const Candidate& lo, const Candidate& hi)
{
    Configuration c;
    c.alpha = lo.alpha;
    c.beta = lo.beta;
    c.gamma = hi.alpha;
    c.delta = hi.beta;
    c.n = lo.weight();
    return c;
}

}  // namespace

std::string Configuration::str() const
{
    return "<" + alpha.str() + "," + beta.str() + " : " + gamma.str() + "," + delta.str() + ">" +
           (is_q_foulkes ? "_q" : "");
}

std::vector<Candidate> candidates(int n)
{
    std::vector<Candidate> out;
    for (int u = 2; u <= n / 2; ++u) {
        if (n % u)
            continue;
        const int v = n / u;
        if (v < 2)
            continue;
        for (const auto& alpha : partitions_of(u))
            for (const auto& beta : partitions_of(v))
                out.push_back({alpha, beta});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const std::vector<std::int64_t>> classical_plethysm_vector(const Candidate& c)
{
    return classical_memo().get(c, [&c] {
        const int n = c.weight();
        const SchurExpansion e = to_schur(plethysm(schur_gen(c.alpha), schur_gen(c.beta)));
        const auto& idx = PartitionIndex::of(n);
        auto v = std::make_shared<std::vector<std::int64_t>>(static_cast<std::size_t>(idx.size()), 0);
        for (const auto& [lambda, coeff] : e.terms()) {
            if (!coeff.is_constant() || !coeff.is_integral() || !coeff[0].get_num().fits_slong_p())
                throw InternalError("classical plethysm coefficient is not a machine integer");
            (*v)[static_cast<std::size_t>(idx.index(lambda))] = coeff[0].get_num().get_si();
        }
        return Vector(std::move(v));
    });
}

SymFunc q_plethysm(const Candidate& c)
{
    return q_memo().get(c, [&c] { return plethysm(q_schur_p(c.alpha), q_schur_p(c.beta)); });
}

ConfigCheck is_foulkes_config(const Partition& alpha, const Partition& beta, const Partition& gamma,
                              const Partition& delta)
{
    check_quad(alpha, beta, gamma, delta);
    if (alpha == gamma && beta == delta)
        return {};
    return classical_check({alpha, beta}, {gamma, delta});
}

bool e_condition(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& delta)
{
    check_quad(alpha, beta, gamma, delta);
    return e_plethysm({alpha, beta}) == e_plethysm({gamma, delta});
}

ConfigCheck is_q_foulkes_config(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                const Partition& delta)
{
    check_quad(alpha, beta, gamma, delta);
    if ((alpha == gamma && beta == delta) || !e_condition(alpha, beta, gamma, delta))
        return {};
    return q_check({alpha, beta}, {gamma, delta});
}

std::vector<Configuration> enumerate_foulkes_configs(int n, int jobs)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_foulkes_configs requires n >= 1");
    const auto cands = candidates(n);
    const auto vectors = parallel_map(cands, jobs, [](const Candidate& c) { return classical_plethysm_vector(c); });
    std::vector<Configuration> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t j = 0; j < cands.size(); ++j) {
            if (i == j || !weakly_above(*vectors[j], *vectors[i]))
                continue;
            Configuration c = make_config(cands[i], cands[j]);
            c.is_foulkes = true;
            std::vector<std::int64_t> diff(vectors[i]->size());
            for (std::size_t k = 0; k < diff.size(); ++k)
                diff[k] = (*vectors[j])[k] - (*vectors[i])[k];
            c.certificate = to_expansion(diff, n);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<Configuration> enumerate_q_configs(int n, int jobs)
{
    auto classical = enumerate_foulkes_configs(n, jobs);
    std::vector<Configuration> survivors;
    for (auto& c : classical) {
        c.passed_e_condition = e_condition(c.alpha, c.beta, c.gamma, c.delta);
        if (c.passed_e_condition)
            survivors.push_back(std::move(c));
    }
    auto checked = parallel_map(survivors, jobs, [](const Configuration& c) {
        return q_check({c.alpha, c.beta}, {c.gamma, c.delta});
    });
    std::vector<Configuration> out;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (!checked[i].holds)
            continue;
        Configuration c = std::move(survivors[i]);
        c.is_q_foulkes = true;
        c.certificate = std::move(checked[i].difference);
        out.push_back(std::move(c));
    }
    return out;
}

Conjecture4Report check_conjecture4(int n, int jobs)
{
    if (n < 1)
        throw std::invalid_argument("check_conjecture4 requires n >= 1");
    Conjecture4Report report;
    report.n = n;
    const auto cands = candidates(n);
    const auto eps = parallel_map(cands, jobs, [](const Candidate& c) { return e_plethysm(c); });
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = 0; j < cands.size(); ++j)
            if (i != j && eps[i] == eps[j])
                pairs.emplace_back(i, j);
    report.e_pairs = static_cast<int>(pairs.size());

    struct Outcome {
        bool classical;
        ConfigCheck q;
    };
    const auto outcomes = parallel_map(pairs, jobs, [&cands](const std::pair<std::size_t, std::size_t>& p) {
        const Candidate& lo = cands[p.first];
        const Candidate& hi = cands[p.second];
        return Outcome{weakly_above(*classical_plethysm_vector(hi), *classical_plethysm_vector(lo)),
                       q_check(lo, hi)};
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.classical && o.q.holds) {
            ++report.both;
        } else if (!o.classical && !o.q.holds) {
            ++report.neither;
        } else {
            Configuration c = make_config(cands[pairs[i].first], cands[pairs[i].second]);
            c.passed_e_condition = true;
            c.is_foulkes = o.classical;
            c.is_q_foulkes = o.q.holds;
            c.certificate = o.q.difference;
            c.witness = o.q.witness;
            report.one_sided.push_back(std::move(c));
        }
    }
    return report;
}

GuessVerdict check_guess_pattern(int a, int b, int c, int d, int k)
{
    if (k < 1 || a < 2 || !(a < c && c <= b) || a * b != c * d)
        throw std::invalid_argument("guess pattern requires ab = cd, k >= 1 and 2 <= a < c <= b");
    GuessVerdict v{a, b, c, d, k};
    const Partition bk = Partition::rectangle(b, k);
    const Partition dk = Partition::rectangle(d, k);
    v.q_config = is_q_foulkes_config(Partition{a}, bk, Partition{c}, dk).holds;
    const SymFunc lhs62 = plethysm(h_gen(b), schur_gen(Partition::rectangle(a, k)));
    const SymFunc rhs62 = plethysm(h_gen(c), schur_gen(dk));
    v.schur_pattern = schur_positive(to_schur(lhs62 - rhs62));
    const SymFunc hi63 = plethysm(h_gen(c), power(h_gen(d), static_cast<unsigned>(k)));
    const SymFunc lo63 = plethysm(h_gen(a), power(h_gen(b), static_cast<unsigned>(k)));
    v.h_power_pattern = schur_positive(to_schur(hi63 - lo63));
    return v;
}

std::vector<GuessVerdict> check_guess_patterns(int n, int jobs)
{
    struct Params {
        int a, b, c, d, k;
    };
    std::vector<Params> params;
    for (int k = 1; k <= n; ++k) {
        if (n % k)
            continue;
        const int m = n / k;
        for (int a = 2; a * a <= m; ++a) {
            if (m % a)
                continue;
            const int b = m / a;
            for (int c = a + 1; c <= b; ++c)
                if (m % c == 0)
                    params.push_back({a, b, c, m / c, k});
        }
    }
    return parallel_map(params, jobs, [](const Params& p) { return check_guess_pattern(p.a, p.b, p.c, p.d, p.k); });
}

void clear_config_caches()
{
    classical_memo().clear();
    e_memo().clear();
    q_memo().clear();
}

namespace reference {

const std::vector<int>& foulkes_counts()
{
    static const std::vector<int> v{0, 0, 0, 0, 0, 4, 0, 14, 0, 8, 0, 110, 0, 24, 17, 221};
    return v;
}

const std::vector<int>& q_foulkes_counts()
{
    static const std::vector<int> v{0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 5, 0, 1, 1, 3, 0, 6, 0, 5};
    return v;
}

namespace {

using P = Partition;

Quad quad(P a, P b, P c, P d) { return {std::move(a), std::move(b), std::move(c), std::move(d)}; }

}  // namespace

std::vector<Quad> foulkes_list(int n)
{
    switch (n) {
    case 6:
        return {quad({2}, {3}, {3}, {2}), quad({1, 1}, {1, 1, 1}, {3}, {1, 1}), quad({1, 1, 1}, {2}, {1, 1}, {2, 1}),
                quad({1, 1, 1}, {1, 1}, {2}, {2, 1})};
    case 8:
        return {quad({2}, {4}, {4}, {2}),
                quad({2}, {1, 1, 1, 1}, {4}, {1, 1}),
                quad({1, 1}, {4}, {3, 1}, {2}),
                quad({1, 1}, {2, 2}, {3, 1}, {2}),
                quad({1, 1}, {2, 2}, {3, 1}, {1, 1}),
                quad({1, 1}, {3, 1}, {2, 1, 1}, {2}),
                quad({1, 1}, {2, 1, 1}, {2, 1, 1}, {1, 1}),
                quad({1, 1}, {1, 1, 1, 1}, {3, 1}, {1, 1}),
                quad({2, 2}, {2}, {2}, {3, 1}),
                quad({2, 2}, {1, 1}, {2}, {2, 1, 1}),
                quad({2, 1, 1}, {2}, {1, 1}, {3, 1}),
                quad({2, 1, 1}, {1, 1}, {1, 1}, {2, 1, 1}),
                quad({1, 1, 1, 1}, {2}, {2}, {3, 1}),
                quad({1, 1, 1, 1}, {1, 1}, {2}, {2, 1, 1})};
    case 10:
        return {quad({2}, {5}, {5}, {2}),
                quad({2}, {2, 2, 1}, {3, 1, 1}, {1, 1}),
                quad({2}, {2, 1, 1, 1}, {3, 1, 1}, {1, 1}),
                quad({1, 1}, {3, 2}, {3, 1, 1}, {2}),
                quad({1, 1}, {4, 1}, {3, 1, 1}, {2}),
                quad({1, 1}, {1, 1, 1, 1, 1}, {5}, {1, 1}),
                quad({1, 1, 1, 1, 1}, {2}, {2}, {3, 1, 1}),
                quad({1, 1, 1, 1, 1}, {1, 1}, {1, 1}, {3, 1, 1})};
    default:
        return {};
    }
}

std::vector<Quad> q_foulkes_list(int n)
{
    switch (n) {
    case 16:
        return {quad({2}, {8}, {8}, {2}), quad({2}, {8}, {4}, {4}), quad({2}, {4, 4}, {4}, {2, 2})};
    case 18:
        return {quad({2}, {9}, {3}, {6}),       quad({2}, {9}, {6}, {3}),
                quad({2}, {9}, {9}, {2}),       quad({3}, {6}, {6}, {3}),
                quad({2}, {3, 3, 3}, {3}, {2, 2, 2}), quad({2}, {6, 3}, {3}, {4, 2})};
    case 20:
        return {quad({2}, {5, 5}, {5}, {2, 2}), quad({2}, {10}, {4}, {5}), quad({2}, {10}, {5}, {4}),
                quad({2}, {10}, {10}, {2}),     quad({4}, {5}, {5}, {4})};
    default:
        return {};
    }
}

std::vector<Quad> extra_q_configs()
{
    return {
        quad({2}, {6, 6}, {6}, {2, 2}),
        quad({2}, {6, 6}, {3}, {4, 4}),
        quad({2}, {6, 6}, {4}, {3, 3}),
        quad({3}, {4, 4}, {4}, {3, 3}),
        quad({3}, {5, 5}, {5}, {3, 3}),
        quad({2}, {4, 4, 4}, {4}, {2, 2, 2}),
        quad({2}, {5, 5, 5}, {5}, {2, 2, 2}),
        quad({2}, {3, 3, 3, 3}, {3}, {2, 2, 2, 2}),
        quad({2}, {3, 3, 3, 3, 3}, {3}, {2, 2, 2, 2, 2}),
        quad({2}, {6, 3}, {3}, {4, 2}),
        quad({2}, {8, 4}, {4}, {4, 2}),
        quad({2}, {9, 3}, {3}, {6, 2}),
        quad({2}, {9, 6}, {3}, {6, 4}),
        quad({2}, {6, 6, 3}, {3}, {4, 4, 2}),
        quad({2}, {10, 4}, {4}, {5, 2}),
        quad({2}, {10, 5}, {5}, {4, 2}),
        quad({2}, {12, 3}, {3}, {8, 2}),
    };
}

std::vector<Quad> negative_controls()
{
    return {quad({2}, {6, 3, 3}, {3}, {4, 2, 2}), quad({2}, {9, 3, 3}, {3}, {6, 2, 2}),
            quad({2}, {6, 3, 3, 3}, {3}, {4, 2, 2, 2})};
}

}  // namespace reference

}  // namespace qfoulkes

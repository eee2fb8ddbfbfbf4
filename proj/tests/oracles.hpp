#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these call into the engine beyond the SymFunc ring operations and
// the generators h_n, p_n.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qfoulkes/partition.hpp"
#include "qfoulkes/qpoly.hpp"
#include "qfoulkes/symfunc.hpp"

namespace oracle {

using qfoulkes::Integer;
using qfoulkes::Partition;
using qfoulkes::QPoly;
using qfoulkes::Rational;
using qfoulkes::SymFunc;

// Partitions of n by sorting all 2^{n-1} compositions.
inline std::vector<Partition> partitions_by_compositions(int n)
{
    if (n == 0)
        return {Partition{}};
    std::set<std::vector<int>> seen;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        std::sort(parts.rbegin(), parts.rend());
        seen.insert(parts);
    }
    std::vector<Partition> out;
    for (const auto& p : seen)
        out.emplace_back(p);
    return out;
}

// p(n) by the coin-change recursion.
inline std::int64_t partition_count_dp(int n)
{
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(n)];
}

// Number of standard tableaux by the branching rule (remove a corner).
inline Integer syt_count(const Partition& lambda)
{
    static std::map<Partition, Integer> memo;
    if (lambda.weight() <= 1)
        return 1;
    if (auto it = memo.find(lambda); it != memo.end())
        return it->second;
    Integer total = 0;
    std::vector<int> p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i + 1 < p.size() && p[i] == p[i + 1])
            continue;
        auto q = p;
        --q[i];
        total += syt_count(Partition::from_unsorted(q));
    }
    memo.emplace(lambda, total);
    return total;
}

inline QPoly q_number(int k)
{
    QPoly out;
    for (int i = 0; i < k; ++i)
        out += QPoly::monomial(1, i);
    return out;
}

inline QPoly q_fact(int n)
{
    QPoly out = 1;
    for (int k = 1; k <= n; ++k)
        out = out * q_number(k);
    return out;
}

// q^{n(lambda)} [n]_q! / prod [hook]_q with hooks counted cell by cell.
inline QPoly q_hook_formula(const Partition& lambda)
{
    QPoly denom = 1;
    const Partition conj = qfoulkes::conjugate(lambda);
    int nstat = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        nstat += i * lambda[i];
        for (int j = 0; j < lambda[i]; ++j)
            denom = denom * q_number((lambda[i] - j - 1) + (conj[j] - i - 1) + 1);
    }
    return qfoulkes::divide_exact(q_fact(lambda.weight()), denom) * QPoly::monomial(1, nstat);
}

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) by cofactor expansion
// along rows, memoized on the set of columns still available.
inline SymFunc jacobi_trudi(const Partition& lambda)
{
    const int l = lambda.length();
    if (l == 0)
        return SymFunc::constant(1);
    std::vector<SymFunc> h(static_cast<std::size_t>(lambda.weight() + l + 1));
    for (std::size_t k = 0; k < h.size(); ++k)
        h[k] = k == 0 ? SymFunc::constant(1) : qfoulkes::h_gen(static_cast<int>(k));
    auto entry = [&](int i, int j) -> const SymFunc* {
        const int k = lambda[i] - i + j;
        if (k < 0)
            return nullptr;
        return &h[static_cast<std::size_t>(k)];
    };
    std::map<unsigned, SymFunc> memo;
    auto det = [&](auto&& self, int row, unsigned used) -> SymFunc {
        if (row == l)
            return SymFunc::constant(1);
        if (auto it = memo.find(used); it != memo.end())
            return it->second;
        SymFunc total;
        int sign = 1;
        for (int j = 0; j < l; ++j) {
            if (used & (1u << j))
                continue;
            if (const SymFunc* e = entry(row, j)) {
                SymFunc term = *e * self(self, row + 1, used | (1u << j));
                total += sign == 1 ? term : -term;
            }
            sign = -sign;
        }
        memo.emplace(used, total);
        return total;
    };
    return det(det, 0, 0);
}

inline Rational rational_det(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

inline Rational rpow(const Rational& x, int e)
{
    Rational out = 1;
    for (int i = 0; i < e; ++i)
        out *= x;
    return out;
}

// s_lambda(x_1..x_k) as a ratio of alternants; needs distinct x_i and
// k >= l(lambda).
inline Rational bialternant(const Partition& lambda, const std::vector<Rational>& x)
{
    const int k = static_cast<int>(x.size());
    if (lambda.length() > k)
        return 0;
    std::vector<std::vector<Rational>> num(x.size(), std::vector<Rational>(x.size()));
    auto den = num;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            num[i][j] = rpow(x[i], lambda[j] + k - 1 - j);
            den[i][j] = rpow(x[i], k - 1 - j);
        }
    return rational_det(num) / rational_det(den);
}

// Sum_mu c_mu(qv) prod_j p_{mu_j}(x), straight from the definition.
inline Rational eval_power_sums(const SymFunc& f, const std::vector<Rational>& x, const Rational& qv)
{
    Rational total = 0;
    for (const auto& [mu, c] : f.terms()) {
        Rational term = c.eval(qv);
        for (int part : mu.parts()) {
            Rational p = 0;
            for (const auto& xi : x)
                p += rpow(xi, part);
            term *= p;
        }
        total += term;
    }
    return total;
}

// h_n(y_1..y_m) by peeling off the last variable.
inline Rational complete_homogeneous(int n, const std::vector<Rational>& y)
{
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (const auto& v : y)
        for (int d = 1; d <= n; ++d)
            row[static_cast<std::size_t>(d)] += v * row[static_cast<std::size_t>(d - 1)];
    return row[static_cast<std::size_t>(n)];
}

// All monomials of degree d in x, as values.
inline std::vector<Rational> monomial_values(int d, const std::vector<Rational>& x)
{
    std::vector<Rational> out;
    auto rec = [&](auto&& self, std::size_t i, int left, Rational acc) -> void {
        if (i + 1 == x.size()) {
            out.push_back(acc * rpow(x[i], left));
            return;
        }
        for (int e = 0; e <= left; ++e)
            self(self, i + 1, left - e, acc * rpow(x[i], e));
    };
    rec(rec, 0, d, Rational(1));
    return out;
}

// h_a[h_b](x) = h_a evaluated at the monomials of degree b.
inline Rational h_plethysm_value(int a, int b, const std::vector<Rational>& x)
{
    return complete_homogeneous(a, monomial_values(b, x));
}

// Pieri: h_k s_lambda = sum over mu/lambda horizontal strips of size k.
inline std::vector<Partition> pieri_shapes(const Partition& lambda, int k)
{
    std::vector<Partition> out;
    const int l = lambda.length();
    std::vector<int> mu(static_cast<std::size_t>(l) + 1, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == l + 1) {
            if (left == 0)
                out.push_back(Partition::from_unsorted(mu));
            return;
        }
        const int lo = lambda[i];
        const int hi = i == 0 ? lambda[0] + left : std::min(lambda[i - 1], lambda[i] + left);
        for (int v = lo; v <= hi; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, left - (v - lo));
        }
    };
    rec(rec, 0, k);
    return out;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int k)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<Rational> x;
    while (static_cast<int>(x.size()) < k) {
        const Rational v = qfoulkes::ratio(num(rng), den(rng));
        if (std::find(x.begin(), x.end(), v) == x.end())
            x.push_back(v);
    }
    return x;
}

}  // namespace oracle

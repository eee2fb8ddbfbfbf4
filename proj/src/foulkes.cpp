#include "qfoulkes/foulkes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "qfoulkes/hall_littlewood.hpp"
#include "qfoulkes/memo.hpp"

namespace qfoulkes {

namespace {

Integer factorial(int n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

SymFunc h1_pow(int e)
{
    if (e < 0)
        throw std::invalid_argument("negative power of h1");
    return power(h_gen(1), static_cast<unsigned>(e));
}

SymFunc scaled(const SymFunc& f, const Rational& c) { return f * QPoly(c); }

Memo<std::pair<int, int>, SymFunc>& h_memo()
{
    static Memo<std::pair<int, int>, SymFunc> m;
    return m;
}
Memo<std::pair<int, int>, SymFunc>& hl_memo()
{
    static Memo<std::pair<int, int>, SymFunc> m;
    return m;
}
Memo<std::pair<int, int>, SchurExpansion>& fq_memo()
{
    static Memo<std::pair<int, int>, SchurExpansion> m;
    return m;
}
Memo<std::pair<int, int>, SymFunc>& fq1_memo()
{
    static Memo<std::pair<int, int>, SymFunc> m;
    return m;
}

void require_ordered(int a, int b, const char* who)
{
    if (a < 1 || a > b)
        throw std::invalid_argument(std::string(who) + " requires 1 <= a <= b");
}

void require_generalized(int a, int b, int c, int d)
{
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw std::invalid_argument("generalized: parameters must be positive");
    if (a * b != c * d)
        throw std::invalid_argument("generalized: requires ab = cd");
    if (!(a <= c && c <= b))
        throw std::invalid_argument("generalized: requires a <= c <= b");
}

// Exact quotient of f by p1^m, or nullopt when some term lacks the factor.
std::optional<SymFunc> divide_by_p1_power(const SymFunc& f, int m)
{
    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        if (mu.multiplicity(1) < m)
            return std::nullopt;
        std::vector<int> parts(mu.parts().begin(), mu.parts().end());
        parts.resize(parts.size() - static_cast<std::size_t>(m));
        out.add_term(Partition(parts), c);
    }
    return out;
}

}  // namespace

FoulkesReport make_report(std::string kind, std::vector<std::pair<std::string, int>> params,
                          SchurExpansion expansion, std::chrono::steady_clock::time_point started)
{
    FoulkesReport r;
    r.kind = std::move(kind);
    r.params = std::move(params);
    r.positive = schur_positive(expansion);
    if (!r.positive)
        r.witness = positivity_witness(expansion);
    r.expansion = std::move(expansion);
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
               .count();
    return r;
}

SymFunc h_plethysm(int a, int b)
{
    return h_memo().get({a, b}, [a, b] { return plethysm(h_gen(a), h_gen(b)); });
}

SymFunc hl_plethysm(int a, int b)
{
    return hl_memo().get({a, b}, [a, b] { return plethysm(hl_h(a), hl_h(b)); });
}

SchurExpansion f_classic(int a, int b)
{
    require_ordered(a, b, "f_classic");
    return to_schur(h_plethysm(b, a) - h_plethysm(a, b));
}

SchurExpansion f_q(int a, int b)
{
    require_ordered(a, b, "f_q");
    return fq_memo().get({a, b}, [a, b] {
        if (a == b)
            return SchurExpansion{};
        return divide_by_one_minus_q(to_schur(hl_plethysm(b, a) - hl_plethysm(a, b)));
    });
}

SymFunc f_q_at1(int a, int b)
{
    require_ordered(a, b, "f_q_at1");
    return fq1_memo().get({a, b}, [a, b] {
        if (a == b)
            return SymFunc{};
        return divide_by_one_minus_q(hl_plethysm(b, a) - hl_plethysm(a, b)).at_q(1);
    });
}

FoulkesReport check_conjecture1(int a, int b)
{
    const auto t0 = std::chrono::steady_clock::now();
    return make_report("conjecture1", {{"a", a}, {"b", b}}, f_q(a, b), t0);
}

SchurExpansion stability_diff(int a, int b)
{
    require_ordered(a, b, "stability_diff");
    return bar(f_q(a, b + 1)) - bar(f_q(a, b));
}

SchurExpansion stability_diff_classic(int a, int b)
{
    require_ordered(a, b, "stability_diff_classic");
    return bar(f_classic(a, b + 1)) - bar(f_classic(a, b));
}

SchurExpansion manivel_diff(int a, int b)
{
    if (a < 1 || a >= b)
        throw std::invalid_argument("manivel_diff requires 0 < a < b");
    return stability_diff(a + 1, b) - stability_diff(a, b);
}

Integer dim_h_plethysm(int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("dim_h_plethysm requires a, b >= 1");
    Integer den = factorial(a);
    const Integer fb = factorial(b);
    for (int i = 0; i < a; ++i)
        den *= fb;
    return factorial(a * b) / den;
}

QPoly dim_Fq_closed(int a, int b)
{
    if (a < 1 || a >= b)
        throw std::invalid_argument("dim_Fq_closed requires 0 < a < b");
    const QPoly qa = q_factorial(a);
    const QPoly qb = q_factorial(b);
    const Integer fa = factorial(a);
    const Integer fb = factorial(b);
    Integer fa_pow_b = 1, fb_pow_a = 1;
    mpz_pow_ui(fa_pow_b.get_mpz_t(), fa.get_mpz_t(), static_cast<unsigned long>(b));
    mpz_pow_ui(fb_pow_a.get_mpz_t(), fb.get_mpz_t(), static_cast<unsigned long>(a));
    const QPoly first = qb * qa.pow(static_cast<unsigned>(b)) * ratio(Integer(1), fb * fa_pow_b);
    const QPoly second = qa * qb.pow(static_cast<unsigned>(a)) * ratio(Integer(1), fa * fb_pow_a);
    return divide_by_one_minus_q(first - second) * Rational(factorial(a * b));
}

Rational dim_Fq_at1(int a, int b)
{
    if (a < 1 || a >= b)
        throw std::invalid_argument("dim_Fq_at1 requires 0 < a < b");
    return ratio(factorial(a * b) * (a - 1) * (b - 1) * (b - a), 4);
}

EOParts eo_parts(int b)
{
    if (b < 1)
        throw std::invalid_argument("eo_parts requires b >= 1");
    const SymFunc plus = power(h_gen(2) + e_gen(2), static_cast<unsigned>(b));
    const SymFunc minus = power(h_gen(2) - e_gen(2), static_cast<unsigned>(b));
    const Rational half(1, 2);
    return {scaled(plus + minus, half), scaled(plus - minus, half)};
}

SymFunc lemma31(int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("lemma31 requires a, b >= 1");
    SymFunc out;
    const Integer c1 = a * binomial(b, 2);
    if (c1 != 0)
        out += scaled(h1_pow(a * b - 2) * e_gen(2), Rational(c1));
    const Integer c2 = binomial(a, 2);
    if (c2 != 0)
        out += scaled(h1_pow((a - 2) * b) * eo_parts(b).odd, Rational(c2));
    return out;
}

SymFunc lemma31_engine(int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("lemma31_engine requires a, b >= 1");
    const SymFunc num = p_gen(Partition::rectangle(1, a * b)) - hl_plethysm(a, b);
    return divide_by_one_minus_q(num).at_q(1);
}

SymFunc f_q1_closed(int a, int b)
{
    if (a <= 1 || a >= b)
        throw std::invalid_argument("f_q1_closed requires 1 < a < b");
    SymFunc out = scaled(h1_pow(a * b - 2) * e_gen(2), Rational(a * b * (b - a)));
    out += scaled(h1_pow((a - 2) * b) * eo_parts(b).odd, Rational(a * (a - 1)));
    out -= scaled(h1_pow(a * (b - 2)) * eo_parts(a).odd, Rational(b * (b - 1)));
    return scaled(out, Rational(1, 2));
}

SymFunc theta_direct(int a, int b)
{
    if (a < 2 || a > b)
        throw std::invalid_argument("theta_direct requires 2 <= a <= b");
    const SymFunc lhs = f_q_at1(a, b + 1);
    const SymFunc base = h1_pow(a) * f_q_at1(a, b);
    const int m = (a - 2) * b;
    auto quotient = divide_by_p1_power(lhs - base, m);
    if (!quotient)
        throw NoSolution("F_{a,b+1}(1) - h1^a F_{a,b}(1) is not divisible by h1^" + std::to_string(m));
    SymFunc theta = scaled(*quotient, Rational(1, 2));
    if (base + scaled(h1_pow(m) * theta, Rational(2)) != lhs)
        throw NoSolution("theta_direct: multiplicative check failed");
    return theta;
}

QPoly theta_rho(int a)
{
    std::vector<Rational> coeffs;
    for (int k = 1; 2 * k + 1 <= a + 1; ++k) {
        coeffs.resize(static_cast<std::size_t>(2 * k + 2), Rational(0));
        coeffs[static_cast<std::size_t>(2 * k + 1)] = Rational(k * a * binomial(a + 1, 2 * k + 1));
    }
    return QPoly(std::move(coeffs));
}

QPoly theta_poly(int n, int a)
{
    if (n < 0)
        throw std::invalid_argument("theta_poly requires n >= 0");
    const QPoly z = QPoly::q();
    std::vector<QPoly> t;
    t.push_back(theta_rho(a - 1));
    t.push_back(theta_rho(a));
    QPoly t2;
    for (int k = 1; 2 * k + 1 <= a + 2; ++k) {
        const QPoly zk = QPoly::monomial(1, 2 * k + 1);
        t2 += zk * Rational(k * (a - 1) * binomial(a + 2, 2 * k + 1));
        t2 += zk * (QPoly(1) + z) * Rational(2 * k * binomial(a + 1, 2 * k + 1));
    }
    t.push_back(t2);
    for (int i = 3; i <= n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        t.push_back((QPoly(3) + z) * t[u - 1] + (QPoly(1) + z) * (z - QPoly(3)) * t[u - 2] +
                    (QPoly(1) + z).pow(2) * (QPoly(1) - z) * t[u - 3]);
    }
    return t[static_cast<std::size_t>(n)];
}

namespace {

SymFunc theta_recurrence_step(const SymFunc& t1, const SymFunc& t2, const SymFunc& t3)
{
    const SymFunc h2 = h_gen(2);
    const SymFunc e2 = e_gen(2);
    return (scaled(h2, 3) + e2) * t1 - h1_pow(2) * (scaled(h2, 3) - e2) * t2 + h1_pow(4) * (h2 - e2) * t3;
}

std::optional<SymFunc> theta_bridge(int a, int b)
{
    const QPoly theta = theta_poly(b - a, a);
    if (theta.degree() > b)
        return std::nullopt;
    SymFunc out;
    const SymFunc h2 = h_gen(2);
    const SymFunc e2 = e_gen(2);
    for (int k = 0; k <= theta.degree(); ++k)
        if (theta[k] != 0)
            out += scaled(power(e2, static_cast<unsigned>(k)) * power(h2, static_cast<unsigned>(b - k)), theta[k]);
    return out;
}

}  // namespace

ThetaReport theta_recurrence_check(int a, int bmax)
{
    if (a < 2)
        throw std::invalid_argument("theta_recurrence_check requires a >= 2");
    ThetaReport report{a, bmax, {}};
    const SymFunc h2 = h_gen(2);
    const SymFunc e2 = e_gen(2);
    std::vector<SymFunc> chain;
    std::vector<std::optional<SymFunc>> direct;
    for (int b = a; b <= bmax; ++b) {
        ThetaRow row;
        row.b = b;
        try {
            row.direct = theta_direct(a, b);
            row.direct_form = H1H2E2Form::from_symfunc(*row.direct);
            row.direct_natural = row.direct_form && row.direct_form->is_natural();
        } catch (const NoSolution&) {
        }
        const int i = b - a;
        if (i == 0) {
            // Theta_{a-1}(a); the a = 1 family is identically zero since F_{1,b} = 0.
            row.chain = a - 1 >= 2 ? theta_direct(a - 1, a) : SymFunc{};
        } else if (i == 1) {
            const auto eo = eo_parts(a);
            row.chain = e2 * eo.even * QPoly(ratio(a * a, 2)) + h2 * eo.odd * QPoly(ratio(a, 2));
        } else if (i == 2) {
            const auto eo = eo_parts(a + 1);
            row.chain = e2 * eo.even * QPoly(ratio((a + 1) * (a + 1) - 2, 2)) -
                          h2 * eo.odd * QPoly(ratio(a + 1, 2)) +
                          e2 * (scaled(e2, a) + h2) * power(h2 - e2, static_cast<unsigned>(a));
        } else {
            const auto u = static_cast<std::size_t>(i);
            row.chain = theta_recurrence_step(chain[u - 1], chain[u - 2], chain[u - 3]);
            const auto u1 = direct[u - 1], u2 = direct[u - 2], u3 = direct[u - 3];
            if (u1 && u2 && u3) {
                row.recurrence_from_direct = theta_recurrence_step(*u1, *u2, *u3);
                if (row.direct)
                    row.recurrence_agrees = *row.recurrence_from_direct == *row.direct;
            }
        }
        row.chain_agrees = row.direct && row.chain == *row.direct;
        row.bridge = theta_bridge(a, b);
        row.bridge_agrees = row.direct && row.bridge && *row.bridge == *row.direct;
        chain.push_back(row.chain);
        direct.push_back(row.direct);
        report.rows.push_back(std::move(row));
    }
    return report;
}

FoulkesReport check_3_5(int a, int b)
{
    if (a <= 1 || a >= b)
        throw std::invalid_argument("check_3_5 requires 1 < a < b");
    const auto t0 = std::chrono::steady_clock::now();
    const SymFunc lhs = h_plethysm(b - 1, a) * h_gen(a - 1);
    const SymFunc rhs = h_plethysm(a - 1, b) * h_gen(b - 1);
    return make_report("product-inequality", {{"a", a}, {"b", b}}, to_schur(lhs - rhs), t0);
}

SchurExpansion generalized_f_q(int a, int b, int c, int d)
{
    require_generalized(a, b, c, d);
    return divide_by_one_minus_q(to_schur(hl_plethysm(c, d) - hl_plethysm(a, b)));
}

SchurExpansion generalized_classic(int a, int b, int c, int d)
{
    require_generalized(a, b, c, d);
    return to_schur(h_plethysm(c, d) - h_plethysm(a, b));
}

SymFunc generalized_at1(int a, int b, int c, int d)
{
    require_generalized(a, b, c, d);
    return divide_by_one_minus_q(hl_plethysm(c, d) - hl_plethysm(a, b)).at_q(1);
}

SymFunc generalized_q1_closed(int a, int b, int c, int d)
{
    require_generalized(a, b, c, d);
    const int n = a * b;
    SymFunc out;
    if (n >= 2)
        out += scaled(h1_pow(n - 2) * e_gen(2), Rational(n * (b - d)));
    if (a > 1)
        out += scaled(h1_pow(n - 2 * b) * eo_parts(b).odd, Rational(a * (a - 1)));
    if (c > 1)
        out -= scaled(h1_pow(n - 2 * d) * eo_parts(d).odd, Rational(c * (c - 1)));
    return scaled(out, Rational(1, 2));
}

SymFunc iterated_h(std::span<const int> seq)
{
    if (seq.empty())
        throw std::invalid_argument("iterated_h requires a nonempty sequence");
    for (int x : seq)
        if (x < 1)
            throw std::invalid_argument("iterated_h requires entries >= 1");
    if (seq.size() == 2)
        return h_plethysm(seq[0], seq[1]);
    SymFunc g = h_gen(seq.back());
    for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it)
        g = plethysm(h_gen(*it), g);
    return g;
}

SchurExpansion alternating_sum(std::span<const int> seq)
{
    if (seq.empty())
        throw std::invalid_argument("alternating_sum requires a nonempty sequence");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] <= 1)
            throw std::invalid_argument("alternating_sum requires entries > 1");
        if (i > 0 && seq[i] >= seq[i - 1])
            throw std::invalid_argument("alternating_sum requires a strictly decreasing sequence");
    }
    std::vector<int> perm(seq.size());
    std::iota(perm.begin(), perm.end(), 0);
    SymFunc total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        std::vector<int> word;
        for (int p : perm)
            word.push_back(seq[static_cast<std::size_t>(p)]);
        const SymFunc term = iterated_h(word);
        if (inversions % 2)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return to_schur(total);
}

SchurExpansion immanant_case(int a, int b, int c)
{
    if (!(a < b && b < c) || a < 1)
        throw std::invalid_argument("immanant_case requires 0 < a < b < c");
    const std::vector<int> cba{c, b, a}, bac{b, a, c}, acb{a, c, b};
    return to_schur(scaled(iterated_h(cba), 2) - iterated_h(bac) - iterated_h(acb));
}

void clear_foulkes_caches()
{
    h_memo().clear();
    hl_memo().clear();
    fq_memo().clear();
    fq1_memo().clear();
}

}  // namespace qfoulkes

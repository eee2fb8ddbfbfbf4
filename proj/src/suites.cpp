#include "qfoulkes/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "qfoulkes/configsearch.hpp"
#include "qfoulkes/foulkes.hpp"
#include "qfoulkes/hall_littlewood.hpp"

namespace qfoulkes {

namespace {

CheckResult compare(std::string name, const SchurExpansion& got, const SchurExpansion& want)
{
    CheckResult r{std::move(name), got == want, {}};
    if (!r.passed)
        r.detail = "got " + got.str() + "; expected " + want.str();
    return r;
}

CheckResult compare(std::string name, const SymFunc& got, const SymFunc& want)
{
    CheckResult r{std::move(name), got == want, {}};
    if (!r.passed)
        r.detail = "difference " + to_schur(got - want).str();
    return r;
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {name, false, std::string("exception: ") + e.what()};
    }
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

SymFunc h1(int e) { return power(h_gen(1), static_cast<unsigned>(e)); }
SymFunc h2(int e) { return power(h_gen(2), static_cast<unsigned>(e)); }
SymFunc e2(int e) { return power(e_gen(2), static_cast<unsigned>(e)); }
SymFunc times(const SymFunc& f, long c) { return f * QPoly(c); }

// The nine displayed values of F_{a,b}(x;1).
std::vector<std::tuple<int, int, SymFunc>> q1_table()
{
    return {
        {2, 3, times(e2(3), 4)},
        {2, 4, times(e2(3) * (e2(1) + times(h2(1), 2)), 8)},
        {2, 5, times(e2(3) * (times(e2(2), 2) + times(h2(1) * e2(1), 5) + times(h2(2), 5)), 8)},
        {3, 4, times(h1(4) * e2(3) * h2(1), 24)},
        {3, 5, times(h1(5) * e2(3) * (e2(2) + times(h2(1) * e2(1), 5) + times(h2(2), 10)), 8)},
        {3, 6, times(h1(6) * e2(3) *
                         (e2(3) + times(e2(2) * h2(1), 9) + times(e2(1) * h2(2), 15) + times(h2(3), 15)),
                     12)},
        {4, 5, times(h1(10) * e2(3) * (e2(2) + times(h2(2), 5)), 16)},
        {4, 6, times(h1(12) * e2(3) *
                         (e2(3) + times(e2(2) * h2(1), 4) + times(e2(1) * h2(2), 5) + times(h2(3), 10)),
                     24)},
        {4, 7, times(h1(14) * e2(3) *
                         (times(e2(4), 2) + times(e2(3) * h2(1), 7) + times(e2(2) * h2(2), 21) +
                          times(e2(1) * h2(3), 21) + times(h2(4), 21)),
                     24)},
    };
}

}  // namespace

std::vector<CheckResult> suite_paper_goldens()
{
    std::vector<CheckResult> out;
    auto add = [&out](const std::string& name, const std::function<CheckResult()>& body) {
        out.push_back(guarded(name, body));
    };

    add("f_{2,3}", [] { return compare("f_{2,3}", f_classic(2, 3), parse_schur("s[2,2,2]")); });
    add("f_{2,4}", [] { return compare("f_{2,4}", f_classic(2, 4), parse_schur("s[4,2,2] + s[2,2,2,2]")); });
    add("f_{3,4}", [] {
        return compare("f_{3,4}", f_classic(3, 4), parse_schur("s[7,3,2] + s[5,4,2,1] + s[6,2,2,2]"));
    });
    add("H_3 Schur form", [] {
        return compare("H_3 Schur form", to_schur(hl_h(3)), parse_schur("s[3] + (q+q^2)*s[2,1] + q^3*s[1,1,1]"));
    });
    add("H_3 power-sum form", [] {
        const QPoly t = one_minus_q();
        SymFunc want;
        want.add_term(Partition{1, 1, 1}, q_int(2) * q_int(3) * Rational(1, 6));
        want.add_term(Partition{2, 1}, q_int(3) * t * Rational(1, 2));
        want.add_term(Partition{3}, q_int(2) * t * t * Rational(1, 3));
        return compare("H_3 power-sum form", hl_h(3), want);
    });
    add("F_{2,3}(x;q)", [] {
        SchurExpansion want = parse_schur("(q^3+q^2+q+1)*s[2,2,2]");
        SchurExpansion inner = parse_schur(
            "(q^2+q)*s[3,3] + (q^3+q^2+q+1)*s[3,2,1] + (q^2+q)*s[3,1,1,1] + (q^4+q^3+2*q^2+q+1)*s[2,2,1,1]"
            " + (2*q^3+q^2+q)*s[2,1,1,1,1] + (q^4+q^2)*s[1,1,1,1,1,1]");
        want += inner * QPoly::parse("q^2+q");
        return compare("F_{2,3}(x;q)", f_q(2, 3), want);
    });
    add("S_32(x;q)", [] {
        return compare("S_32(x;q)", q_schur(Partition{3, 2}),
                       parse_schur("s[3,2] + q*s[3,1,1] + (q+q^2)*s[2,2,1] + (q^2+q^3)*s[2,1,1,1] + q^4*s[1,1,1,1,1]"));
    });
    add("S_32(x;1)", [] {
        return compare("S_32(x;1)", from_schur(q_schur(Partition{3, 2})).at_q(1), h_gen(1) * e2(2));
    });
    add("h_3[h_4] - h_2[h_6]", [] {
        return compare("h_3[h_4] - h_2[h_6]", generalized_classic(2, 6, 3, 4),
                       parse_schur("s[9,3] + s[4,4,4] + s[6,4,2] + s[7,4,1] + s[8,2,2]"));
    });
    add("generalized q=1 limit (2,6,3,4)", [] {
        const SymFunc want = times(e2(1) * (times(e2(5), 6) + times(e2(4) * h2(1), 27) + times(e2(3) * h2(2), 48) +
                                            times(e2(2) * h2(3), 58) + times(e2(1) * h2(4), 18) + times(h2(5), 3)),
                                   2);
        return compare("generalized q=1 limit (2,6,3,4)", generalized_at1(2, 6, 3, 4), want);
    });
    add("bar example", [] {
        return compare("bar example", bar(parse_schur("s[6,2,2] + s[4,4,2] + s[4,2,2,2] + s[2,2,2,2,2]")),
                       parse_schur("s[2,2] + s[4,2] + s[2,2,2] + s[2,2,2,2]"));
    });
    add("bar f_{2,4} - bar f_{2,3}",
        [] { return compare("bar f_{2,4} - bar f_{2,3}", stability_diff_classic(2, 3), parse_schur("s[2,2,2]")); });
    add("bar f_{2,5} - bar f_{2,4}", [] {
        return compare("bar f_{2,5} - bar f_{2,4}", stability_diff_classic(2, 4), parse_schur("s[4,2] + s[2,2,2,2]"));
    });
    add("bar f_{2,6} - bar f_{2,5}", [] {
        return compare("bar f_{2,6} - bar f_{2,5}", stability_diff_classic(2, 5),
                       parse_schur("s[4,4] + s[4,2,2] + s[2,2,2,2,2]"));
    });
    add("bar F_{2,4} - bar F_{2,3}", [] {
        // The display labels the one-column shapes 1^{k+1}; degrees force 1^k.
        SchurExpansion inner = parse_schur(
            "(q^3+2*q^4+2*q^5+q^6)*s[3] + (q^2+2*q^3+3*q^4+3*q^5+2*q^6+q^7)*s[2,1]"
            " + (q^3+2*q^4+2*q^5+q^6)*s[1,1,1] + (q^2+2*q^4+q^6)*s[4]"
            " + (q+2*q^2+6*q^3+7*q^4+9*q^5+6*q^6+4*q^7+q^8)*s[3,1]"
            " + (q+3*q^2+4*q^3+7*q^4+5*q^5+6*q^6+2*q^7+2*q^8)*s[2,2]"
            " + (2*q^2+6*q^3+10*q^4+13*q^5+11*q^6+8*q^7+3*q^8+q^9)*s[2,1,1]"
            " + (q^3+4*q^4+6*q^5+7*q^6+4*q^7+2*q^8)*s[1,1,1,1]"
            " + (q+2*q^2+5*q^3+6*q^4+8*q^5+6*q^6+5*q^7+2*q^8+q^9)*s[3,2]"
            " + (3*q^2+4*q^3+10*q^4+9*q^5+11*q^6+6*q^7+4*q^8+q^9)*s[3,1,1]"
            " + (2*q+4*q^2+9*q^3+12*q^4+15*q^5+13*q^6+11*q^7+6*q^8+3*q^9+q^10)*s[2,2,1]"
            " + (2*q^2+6*q^3+11*q^4+16*q^5+17*q^6+14*q^7+9*q^8+4*q^9+q^10)*s[2,1,1,1]"
            " + (q^3+3*q^4+6*q^5+7*q^6+8*q^7+5*q^8+3*q^9+q^10)*s[1,1,1,1,1]"
            " + (1+2*q^2+q^3+4*q^4+2*q^5+5*q^6+q^7+3*q^8+q^10)*s[2,2,2]"
            " + (q+q^2+4*q^3+5*q^4+9*q^5+8*q^6+9*q^7+5*q^8+4*q^9+q^10+q^11)*s[2,2,1,1]"
            " + (q^2+q^3+5*q^4+5*q^5+9*q^6+7*q^7+7*q^8+3*q^9+2*q^10)*s[2,1,1,1,1]"
            " + (q^3+q^4+3*q^5+3*q^6+4*q^7+3*q^8+3*q^9+q^10+q^11)*s[1,1,1,1,1,1]"
            " + (q^4+q^6+q^8+q^10)*s[1,1,1,1,1,1,1]");
        return compare("bar F_{2,4} - bar F_{2,3}", stability_diff(2, 3), inner * QPoly::parse("1+q"));
    });
    for (const auto& [a, b, want] : q1_table()) {
        const std::string name = "F_{" + std::to_string(a) + "," + std::to_string(b) + "}(x;1)";
        add(name, [&, a = a, b = b] { return compare(name, f_q_at1(a, b), want); });
    }
    add("dim F_{2,3} at q=1", [] {
        const QPoly d = dim_of(from_schur(f_q(2, 3)));
        CheckResult r{"dim F_{2,3} at q=1", d.eval(1) == 360 && dim_Fq_at1(2, 3) == 360, {}};
        if (!r.passed)
            r.detail = "engine " + rational_str(d.eval(1)) + ", closed form " + rational_str(dim_Fq_at1(2, 3));
        return r;
    });
    return out;
}

std::vector<CheckResult> suite_tables(int degree_cap, int jobs)
{
    std::vector<CheckResult> out;
    const auto& t1 = reference::foulkes_counts();
    const auto& t2 = reference::q_foulkes_counts();

    auto list_matches = [](const std::vector<Configuration>& found, const std::vector<reference::Quad>& listed) {
        if (found.size() != listed.size())
            return false;
        for (const auto& q : listed) {
            const bool hit = std::any_of(found.begin(), found.end(), [&q](const Configuration& c) {
                return c.alpha == q.alpha && c.beta == q.beta && c.gamma == q.gamma && c.delta == q.delta;
            });
            if (!hit)
                return false;
        }
        return true;
    };

    for (int n = 1; n <= std::min<int>(degree_cap, static_cast<int>(t1.size())); ++n) {
        const std::string name = "Foulkes configurations n=" + std::to_string(n);
        out.push_back(guarded(name, [&, n] {
            const auto found = enumerate_foulkes_configs(n, jobs);
            CheckResult r{name, static_cast<int>(found.size()) == t1[static_cast<std::size_t>(n - 1)], {}};
            const auto listed = reference::foulkes_list(n);
            if (!listed.empty() && !list_matches(found, listed))
                r.passed = false;
            r.detail = "found " + std::to_string(found.size()) + ", table " +
                       std::to_string(t1[static_cast<std::size_t>(n - 1)]);
            return r;
        }));
    }
    for (int n = 1; n <= std::min<int>(degree_cap, static_cast<int>(t2.size())); ++n) {
        const std::string name = "q-Foulkes configurations n=" + std::to_string(n);
        out.push_back(guarded(name, [&, n] {
            const auto found = enumerate_q_configs(n, jobs);
            CheckResult r{name, static_cast<int>(found.size()) == t2[static_cast<std::size_t>(n - 1)], {}};
            const auto listed = reference::q_foulkes_list(n);
            if (!listed.empty() && !list_matches(found, listed))
                r.passed = false;
            r.detail = "found " + std::to_string(found.size()) + ", table " +
                       std::to_string(t2[static_cast<std::size_t>(n - 1)]);
            return r;
        }));
    }
    for (int n = 1; n <= std::min(degree_cap, 16); ++n) {
        const std::string name = "e-condition biconditional n=" + std::to_string(n);
        out.push_back(guarded(name, [&, n] {
            const auto rep = check_conjecture4(n, jobs);
            CheckResult r{name, rep.holds(), {}};
            r.detail = std::to_string(rep.e_pairs) + " e-pairs, " + std::to_string(rep.one_sided.size()) + " one-sided";
            return r;
        }));
    }
    return out;
}

namespace {

// Random Schur-positive expansion of degree n with N[q] coefficients.
SchurExpansion random_positive(std::mt19937_64& rng, int n, int terms)
{
    const auto parts = partitions_of(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::uniform_int_distribution<int> coef(0, 2);
    SchurExpansion out;
    for (int t = 0; t < terms; ++t) {
        std::vector<Rational> c(3);
        for (auto& x : c)
            x = coef(rng);
        out.add_term(parts[pick(rng)], QPoly(std::move(c)));
    }
    return out;
}

// Random element with rational q-coefficients, possibly inhomogeneous.
SymFunc random_symfunc(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    SymFunc out;
    for (int t = 0; t < 4; ++t) {
        const auto parts = partitions_of(deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        out.add_term(parts[pick(rng)], QPoly(std::vector<Rational>{ratio(num(rng), den(rng)), num(rng)}));
    }
    return out;
}

SymFunc random_homogeneous(std::mt19937_64& rng, int n)
{
    SymFunc out;
    const SymFunc raw = random_symfunc(rng, n);
    for (const auto& [k, c] : raw.terms())
        if (k.weight() == n)
            out.add_term(k, c);
    if (out.is_zero())
        out = p_gen(Partition::rectangle(1, n));
    return out;
}

}  // namespace

std::vector<CheckResult> suite_properties(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    auto add = [&out](const std::string& name, const std::function<bool(std::string&)>& body) {
        out.push_back(guarded(name, [&] {
            CheckResult r{name, false, {}};
            r.passed = body(r.detail);
            return r;
        }));
    };
    constexpr int trials = 20;

    add("basis round trip", [&](std::string& detail) {
        for (int t = 0; t < trials; ++t) {
            const SymFunc f = random_symfunc(rng, 8);
            if (from_schur(to_schur(f)) != f) {
                detail = f.str();
                return false;
            }
        }
        return true;
    });
    add("omega involution", [&](std::string& detail) {
        for (int t = 0; t < trials; ++t) {
            const SymFunc f = random_symfunc(rng, 8);
            if (omega(omega(f)) != f || to_schur(omega(f)) != omega(to_schur(f))) {
                detail = f.str();
                return false;
            }
        }
        return true;
    });
    add("plethysm associativity", [&](std::string& detail) {
        for (int t = 0; t < trials / 2; ++t) {
            const SymFunc f = random_homogeneous(rng, 2);
            const SymFunc g = random_homogeneous(rng, 2);
            const SymFunc h = random_homogeneous(rng, 3);
            if (plethysm(plethysm(f, g), h) != plethysm(f, plethysm(g, h))) {
                detail = f.str() + " ; " + g.str() + " ; " + h.str();
                return false;
            }
        }
        return true;
    });
    add("p_1 is the plethystic identity", [&](std::string& detail) {
        for (int t = 0; t < trials; ++t) {
            const SymFunc f = random_symfunc(rng, 6);
            if (plethysm(p_gen(1), f) != f || plethysm(f, p_gen(1)) != f) {
                detail = f.str();
                return false;
            }
        }
        return true;
    });
    add("perp adjoint to multiplication", [&](std::string& detail) {
        for (int t = 0; t < trials; ++t) {
            const SymFunc f = random_symfunc(rng, 3);
            const SymFunc g = random_symfunc(rng, 6);
            const SymFunc h = random_symfunc(rng, 4);
            if (scalar(perp(f, g), h) != scalar(g, f * h)) {
                detail = f.str() + " ; " + g.str() + " ; " + h.str();
                return false;
            }
        }
        return true;
    });
    add("Schur-positivity order properties", [&](std::string& detail) {
        std::uniform_int_distribution<int> deg(1, 3);
        for (int t = 0; t < trials; ++t) {
            const int m = deg(rng), n = deg(rng);
            const SchurExpansion f1 = random_positive(rng, m, 2);
            const SchurExpansion f2 = f1 + random_positive(rng, m, 2);
            const SchurExpansion g1 = random_positive(rng, n, 2);
            const SchurExpansion g2 = g1 + random_positive(rng, n, 2);
            const SymFunc F1 = from_schur(f1), F2 = from_schur(f2), G1 = from_schur(g1), G2 = from_schur(g2);
            const bool p1 = schur_leq(f1 + g1, f2 + g2);
            const bool p2 = schur_leq(F1 * G1, F2 * G2);
            // Monotone form; the reversed roles f2, f1 do not give an order relation.
            const bool p3 = schur_leq(perp(F1, G1), perp(F2, G2));
            const bool p4 = schur_leq(plethysm(F1, G1), plethysm(F2, G2));
            const bool p5 = schur_leq(from_schur(bar(f1)) * from_schur(bar(g1)), from_schur(bar(to_schur(F1 * G1))));
            if (!(p1 && p2 && p3 && p4 && p5)) {
                detail = "f1=" + f1.str() + " f2=" + f2.str() + " g1=" + g1.str() + " g2=" + g2.str();
                return false;
            }
        }
        return true;
    });
    add("Hermite support of f_{a,b}, ab <= 20", [&](std::string& detail) {
        for (int a = 2; a * a <= 20; ++a)
            for (int b = a; a * b <= 20; ++b) {
                const SchurExpansion f = f_classic(a, b);
                for (const auto& [lambda, c] : f.terms())
                    if (lambda.length() < 3) {
                        detail = "f_{" + std::to_string(a) + "," + std::to_string(b) + "} contains s" + lambda.str();
                        return false;
                    }
            }
        return true;
    });
    return out;
}

}  // namespace qfoulkes

#include "qfoulkes/h1h2e2.hpp"

#include <vector>

namespace qfoulkes {

namespace {

Integer binomial(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

void H1H2E2Form::add(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<H1H2E2Form> H1H2E2Form::from_symfunc(const SymFunc& f)
{
    H1H2E2Form out;
    for (const auto& [mu, c] : f.terms()) {
        if (!c.is_constant() || (mu.length() > 0 && mu[0] > 2))
            return std::nullopt;
        const Rational value = c[0];
        const int ones = mu.multiplicity(1);
        const int twos = mu.multiplicity(2);
        // p1^{2m+r} p2^t = h1^r (h2 + e2)^m (h2 - e2)^t
        const int r = ones % 2;
        const int m = ones / 2;
        for (int i = 0; i <= m; ++i) {
            const Integer bi = binomial(m, i);
            for (int j = 0; j <= twos; ++j) {
                Integer bj = binomial(twos, j);
                if (j % 2)
                    bj = -bj;
                const int e2 = i + j;
                const int h2 = (m - i) + (twos - j);
                out.add({r, h2, e2}, value * Rational(bi * bj));
            }
        }
    }
    return out;
}

SymFunc H1H2E2Form::to_symfunc() const
{
    SymFunc out;
    const SymFunc h1 = h_gen(1);
    const SymFunc h2 = h_gen(2);
    const SymFunc e2 = e_gen(2);
    for (const auto& [m, c] : terms_) {
        const auto [i, j, k] = m;
        SymFunc term = power(h1, static_cast<unsigned>(i)) * power(h2, static_cast<unsigned>(j)) *
                       power(e2, static_cast<unsigned>(k));
        out += term * QPoly(c);
    }
    return out;
}

bool H1H2E2Form::is_natural() const
{
    for (const auto& [m, c] : terms_)
        if (c < 0 || c.get_den() != 1)
            return false;
    return true;
}

std::string H1H2E2Form::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    auto factor = [](const char* name, int e) -> std::string {
        if (e == 0)
            return "";
        return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
    };
    // Highest e2 power first, the way the closed forms are usually written.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const auto [i, j, k] = m;
        std::vector<std::string> parts;
        if (abs(c) != 1 || (i == 0 && j == 0 && k == 0))
            parts.push_back(Rational(abs(c)).get_str());
        for (auto f : {factor("h1", i), factor("h2", j), factor("e2", k)})
            if (!f.empty())
                parts.push_back(f);
        std::string mono;
        for (std::size_t p = 0; p < parts.size(); ++p)
            mono += (p ? "*" : "") + parts[p];
        if (out.empty())
            out = (c < 0 ? "-" : "") + mono;
        else
            out += (c < 0 ? " - " : " + ") + mono;
    }
    return out;
}

}  // namespace qfoulkes

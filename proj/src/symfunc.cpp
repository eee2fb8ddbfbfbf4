#include "qfoulkes/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "qfoulkes/characters.hpp"

namespace qfoulkes {

SymFunc p_gen(int k)
{
    if (k < 1)
        throw std::invalid_argument("p_gen requires k >= 1");
    return SymFunc(Partition{k}, 1);
}

SymFunc p_gen(const Partition& mu)
{
    return SymFunc(mu, 1);
}

SymFunc h_gen(int n)
{
    if (n < 0)
        throw std::invalid_argument("h_gen requires n >= 0");
    SymFunc out;
    for (const auto& mu : PartitionIndex::of(n).all())
        out.add_term(mu, QPoly(ratio(Integer(1), z_of(mu))));
    return out;
}

SymFunc e_gen(int n)
{
    if (n < 0)
        throw std::invalid_argument("e_gen requires n >= 0");
    SymFunc out;
    for (const auto& mu : PartitionIndex::of(n).all())
        out.add_term(mu, QPoly(ratio(Integer(cycle_sign(mu)), z_of(mu))));
    return out;
}

SymFunc h_gen(const Partition& lambda)
{
    SymFunc out = SymFunc::constant(1);
    for (int part : lambda.parts())
        out *= h_gen(part);
    return out;
}

SymFunc e_gen(const Partition& lambda)
{
    SymFunc out = SymFunc::constant(1);
    for (int part : lambda.parts())
        out *= e_gen(part);
    return out;
}

SymFunc schur_gen(const Partition& lambda)
{
    const int n = lambda.weight();
    const auto table = CharacterTable::global().degree(n);
    const auto& idx = PartitionIndex::of(n);
    const auto row = table->row(idx.index(lambda));
    SymFunc out;
    for (int j = 0; j < idx.size(); ++j) {
        const auto chi = row[static_cast<std::size_t>(j)];
        if (chi != 0)
            out.add_term(idx.at(j), ratio(Integer(static_cast<long>(chi)), z_of(idx.at(j))));
    }
    return out;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g)
{
    SymFunc::Terms acc;
    for (const auto& [mu, c] : f.terms())
        for (const auto& [nu, d] : g.terms()) {
            QPoly prod = c * d;
            auto [it, inserted] = acc.try_emplace(merge(mu, nu), prod);
            if (!inserted)
                it->second += prod;
        }
    return SymFunc(std::move(acc));
}

SymFunc& operator*=(SymFunc& f, const SymFunc& g)
{
    f = f * g;
    return f;
}

SymFunc power(const SymFunc& f, unsigned e)
{
    SymFunc result = SymFunc::constant(1);
    SymFunc base = f;
    while (e) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e)
            base = base * base;
    }
    return result;
}

SymFunc adams(const SymFunc& g, int k)
{
    if (k == 1)
        return g;
    SymFunc out;
    for (const auto& [mu, c] : g.terms())
        out.add_term(scale_parts(mu, k), c.substitute_power(k));
    return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g)
{
    std::map<int, SymFunc> adams_cache;
    auto adams_of = [&](int k) -> const SymFunc& {
        auto it = adams_cache.find(k);
        if (it == adams_cache.end())
            it = adams_cache.emplace(k, adams(g, k)).first;
        return it->second;
    };
    // prod(mu) = prod(mu minus its smallest part) * p_{smallest}[g]
    std::map<Partition, SymFunc> products;
    products.emplace(Partition{}, SymFunc::constant(1));
    auto product_of = [&](auto&& self, const Partition& mu) -> const SymFunc& {
        auto it = products.find(mu);
        if (it != products.end())
            return it->second;
        std::vector<int> head(mu.parts().begin(), mu.parts().end() - 1);
        const SymFunc& prefix = self(self, Partition(std::move(head)));
        SymFunc value = prefix * adams_of(mu.parts().back());
        return products.emplace(mu, std::move(value)).first->second;
    };

    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        const SymFunc& prod = product_of(product_of, mu);
        for (const auto& [nu, d] : prod.terms())
            out.add_term(nu, c * d);
    }
    return out;
}

QPoly scalar(const SymFunc& f, const SymFunc& g)
{
    QPoly out;
    const SymFunc& small = f.size() <= g.size() ? f : g;
    const SymFunc& large = f.size() <= g.size() ? g : f;
    for (const auto& [mu, c] : small.terms()) {
        auto it = large.terms().find(mu);
        if (it == large.terms().end())
            continue;
        out += c * it->second * Rational(z_of(mu));
    }
    return out;
}

SymFunc omega(const SymFunc& f)
{
    SymFunc out;
    for (const auto& [mu, c] : f.terms())
        out.add_term(mu, cycle_sign(mu) == 1 ? c : -c);
    return out;
}

SchurExpansion omega(const SchurExpansion& e)
{
    SchurExpansion out;
    for (const auto& [lambda, c] : e.terms())
        out.add_term(conjugate(lambda), c);
    return out;
}

SymFunc perp(const SymFunc& f, const SymFunc& g)
{
    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        for (const auto& [nu, d] : g.terms()) {
            // p_mu^perp p_nu = prod_k k^{m_k} n_k!/(n_k - m_k)! p_{nu - mu}
            Integer factor = 1;
            std::vector<int> rest;
            bool contained = true;
            const auto& a = mu.parts();
            const auto& b = nu.parts();
            std::size_t i = 0;
            std::size_t j = 0;
            while (j < b.size()) {
                const int k = b[j];
                std::size_t j2 = j;
                while (j2 < b.size() && b[j2] == k)
                    ++j2;
                while (i < a.size() && a[i] > k) {
                    contained = false;
                    ++i;
                }
                std::size_t i2 = i;
                while (i2 < a.size() && a[i2] == k)
                    ++i2;
                const auto have = static_cast<long>(j2 - j);
                const auto take = static_cast<long>(i2 - i);
                if (take > have) {
                    contained = false;
                    break;
                }
                for (long t = 0; t < take; ++t)
                    factor *= k * (have - t);
                for (long t = 0; t < have - take; ++t)
                    rest.push_back(k);
                i = i2;
                j = j2;
            }
            if (i < a.size())
                contained = false;
            if (!contained)
                continue;
            out.add_term(Partition(std::move(rest)), c * d * Rational(factor));
        }
    }
    return out;
}

QPoly dim_of(const SymFunc& f)
{
    if (f.is_zero())
        return {};
    const auto n = f.degree();
    if (!n)
        throw std::invalid_argument("dim_of requires a homogeneous symmetric function");
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(*n));
    return f.coeff(Partition::rectangle(1, *n)) * Rational(fact);
}

namespace {

struct IntegerPoly {
    std::vector<Integer> coeffs;
};

// Numerators of the given coefficients over a common denominator.
Integer clear_denominators(const std::vector<const QPoly*>& polys, std::vector<IntegerPoly>& out)
{
    Integer den = 1;
    for (const QPoly* p : polys) {
        Integer d = p->denominator_lcm();
        if (d != 1)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    out.resize(polys.size());
    for (std::size_t t = 0; t < polys.size(); ++t) {
        const auto& cs = polys[t]->coeffs();
        out[t].coeffs.resize(cs.size());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (cs[k] == 0)
                continue;
            mpz_divexact(out[t].coeffs[k].get_mpz_t(), den.get_mpz_t(), cs[k].get_den_mpz_t());
            out[t].coeffs[k] *= cs[k].get_num();
        }
    }
    return den;
}

QPoly over(std::vector<Integer>& acc, const Integer& den)
{
    std::vector<Rational> cs(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        mpz_set(cs[k].get_num_mpz_t(), acc[k].get_mpz_t());
        mpz_set(cs[k].get_den_mpz_t(), den.get_mpz_t());
        cs[k].canonicalize();
    }
    return QPoly(std::move(cs));
}

}  // namespace

SchurExpansion to_schur(const SymFunc& f)
{
    SchurExpansion out;
    std::map<int, std::vector<std::pair<const Partition*, const QPoly*>>> by_degree;
    for (const auto& [mu, c] : f.terms())
        by_degree[mu.weight()].emplace_back(&mu, &c);

    for (const auto& [n, terms] : by_degree) {
        const auto table = CharacterTable::global().degree(n);
        const auto& idx = PartitionIndex::of(n);
        std::vector<int> cols;
        std::vector<const QPoly*> polys;
        std::size_t width = 0;
        for (const auto& [mu, c] : terms) {
            cols.push_back(idx.index(*mu));
            polys.push_back(c);
            width = std::max(width, c->coeffs().size());
        }
        std::vector<IntegerPoly> nums;
        const Integer den = clear_denominators(polys, nums);

        std::vector<Integer> acc(width);
        for (int i = 0; i < idx.size(); ++i) {
            const auto row = table->row(i);
            for (auto& a : acc)
                a = 0;
            for (std::size_t t = 0; t < cols.size(); ++t) {
                const long chi = static_cast<long>(row[static_cast<std::size_t>(cols[t])]);
                if (chi == 0)
                    continue;
                const auto& num = nums[t].coeffs;
                for (std::size_t k = 0; k < num.size(); ++k) {
                    if (chi > 0)
                        mpz_addmul_ui(acc[k].get_mpz_t(), num[k].get_mpz_t(), static_cast<unsigned long>(chi));
                    else
                        mpz_submul_ui(acc[k].get_mpz_t(), num[k].get_mpz_t(), static_cast<unsigned long>(-chi));
                }
            }
            QPoly coeff = over(acc, den);
            if (!coeff.is_zero())
                out.add_term(idx.at(i), std::move(coeff));
        }
    }
    return out;
}

SymFunc from_schur(const SchurExpansion& e)
{
    SymFunc out;
    std::map<int, std::vector<std::pair<const Partition*, const QPoly*>>> by_degree;
    for (const auto& [lambda, c] : e.terms())
        by_degree[lambda.weight()].emplace_back(&lambda, &c);

    for (const auto& [n, terms] : by_degree) {
        const auto table = CharacterTable::global().degree(n);
        const auto& idx = PartitionIndex::of(n);
        std::vector<int> rows;
        std::vector<const QPoly*> polys;
        std::size_t width = 0;
        for (const auto& [lambda, c] : terms) {
            rows.push_back(idx.index(*lambda));
            polys.push_back(c);
            width = std::max(width, c->coeffs().size());
        }
        std::vector<IntegerPoly> nums;
        const Integer den = clear_denominators(polys, nums);

        std::vector<Integer> acc(width);
        for (int j = 0; j < idx.size(); ++j) {
            for (auto& a : acc)
                a = 0;
            for (std::size_t t = 0; t < rows.size(); ++t) {
                const long chi = static_cast<long>(table->value(rows[t], j));
                if (chi == 0)
                    continue;
                const auto& num = nums[t].coeffs;
                for (std::size_t k = 0; k < num.size(); ++k) {
                    if (chi > 0)
                        mpz_addmul_ui(acc[k].get_mpz_t(), num[k].get_mpz_t(), static_cast<unsigned long>(chi));
                    else
                        mpz_submul_ui(acc[k].get_mpz_t(), num[k].get_mpz_t(), static_cast<unsigned long>(-chi));
                }
            }
            QPoly coeff = over(acc, den * z_of(idx.at(j)));
            if (!coeff.is_zero())
                out.add_term(idx.at(j), std::move(coeff));
        }
    }
    return out;
}

SchurExpansion bar(const SchurExpansion& e)
{
    SchurExpansion out;
    for (const auto& [lambda, c] : e.terms())
        out.add_term(remove_largest_part(lambda), c);
    return out;
}

bool schur_positive(const SchurExpansion& e)
{
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.second.is_natural(); });
}

bool schur_positive(const SymFunc& f)
{
    return schur_positive(to_schur(f));
}

bool schur_leq(const SchurExpansion& f, const SchurExpansion& g)
{
    return schur_positive(g - f);
}

bool schur_leq(const SymFunc& f, const SymFunc& g)
{
    return schur_positive(to_schur(g - f));
}

bool schur_lt(const SchurExpansion& f, const SchurExpansion& g)
{
    const SchurExpansion diff = g - f;
    return !diff.is_zero() && schur_positive(diff);
}

bool schur_lt(const SymFunc& f, const SymFunc& g)
{
    return schur_lt(SchurExpansion{}, to_schur(g - f));
}

std::optional<std::pair<Partition, QPoly>> positivity_witness(const SchurExpansion& e)
{
    std::optional<std::pair<Partition, QPoly>> worst;
    Rational worst_value;
    for (const auto& [lambda, c] : e.terms()) {
        if (c.is_natural())
            continue;
        const Rational m = c.min_coeff();
        if (!worst || m < worst_value) {
            worst.emplace(lambda, c);
            worst_value = m;
        }
    }
    return worst;
}

Rational eval_in_vars(const SymFunc& f, std::span<const Rational> point, const Rational& qv)
{
    std::map<int, Rational> power_sums;
    auto power_sum = [&](int k) -> const Rational& {
        auto it = power_sums.find(k);
        if (it != power_sums.end())
            return it->second;
        Rational total = 0;
        for (const auto& x : point) {
            Rational xk = 1;
            for (int i = 0; i < k; ++i)
                xk *= x;
            total += xk;
        }
        return power_sums.emplace(k, total).first->second;
    };
    Rational out = 0;
    for (const auto& [mu, c] : f.terms()) {
        Rational term = c.eval(qv);
        for (int part : mu.parts())
            term *= power_sum(part);
        out += term;
    }
    return out;
}

namespace {

template <typename Basis>
Expansion<Basis> parse_expansion(std::string_view text, char symbol)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    Expansion<Basis> out;
    if (s.empty() || s == "0")
        return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        int depth = 0;
        std::size_t end = pos;
        while (end < s.size()) {
            char ch = s[end];
            if (ch == '(' || ch == '[')
                ++depth;
            else if (ch == ')' || ch == ']')
                --depth;
            else if ((ch == '+' || ch == '-') && depth == 0 && end > pos)
                break;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end;
        QPoly coeff = 1;
        Partition key;
        auto at = term.rfind(symbol);
        if (at == std::string::npos || at + 1 >= term.size() || term[at + 1] != '[') {
            coeff = QPoly::parse(term);
        } else {
            key = Partition::parse(term.substr(at + 1));
            std::string c = term.substr(0, at);
            if (!c.empty() && c.back() == '*')
                c.pop_back();
            if (!c.empty()) {
                if (c.front() == '(' && c.back() == ')')
                    c = c.substr(1, c.size() - 2);
                coeff = QPoly::parse(c);
            }
        }
        out.add_term(key, sign == 1 ? coeff : -coeff);
    }
    return out;
}

}  // namespace

SchurExpansion parse_schur(std::string_view text)
{
    return parse_expansion<SchurBasis>(text, 's');
}

SymFunc parse_power_sums(std::string_view text)
{
    return parse_expansion<PowerSumBasis>(text, 'p');
}

}  // namespace qfoulkes

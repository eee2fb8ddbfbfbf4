#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "qfoulkes/partition.hpp"
#include "qfoulkes/qpoly.hpp"

namespace qfoulkes {

struct PowerSumBasis {
    static constexpr const char* symbol = "p";
};
struct SchurBasis {
    static constexpr const char* symbol = "s";
};

/// Sparse linear combination of basis elements indexed by partitions, with
/// QPoly coefficients.  Zero coefficients are never stored.
template <typename Basis>
class Expansion {
public:
    using Terms = std::map<Partition, QPoly>;

    Expansion() = default;
    Expansion(const Partition& key, QPoly coeff) { add_term(key, std::move(coeff)); }
    explicit Expansion(Terms terms)
    {
        for (auto& [k, c] : terms)
            add_term(k, std::move(c));
    }

    /// Constant c times the basis element of the empty partition.
    static Expansion constant(QPoly c) { return Expansion(Partition{}, std::move(c)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    QPoly coeff(const Partition& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? QPoly{} : it->second;
    }

    void add_term(const Partition& key, QPoly coeff)
    {
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(key, std::move(coeff));
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// The common weight of all keys, or nullopt when empty or mixed.
    std::optional<int> degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        const int d = terms_.begin()->first.weight();
        if (terms_.rbegin()->first.weight() != d)
            return std::nullopt;
        return d;
    }
    bool is_homogeneous() const { return terms_.empty() || degree().has_value(); }

    Expansion homogeneous_part(int n) const
    {
        Expansion out;
        for (const auto& [k, c] : terms_)
            if (k.weight() == n)
                out.terms_.emplace(k, c);
        return out;
    }

    /// Coefficients evaluated at q = v.
    Expansion at_q(const Rational& v) const
    {
        Expansion out;
        for (const auto& [k, c] : terms_)
            out.add_term(k, QPoly(c.eval(v)));
        return out;
    }

    /// Coefficients with q -> q^k.
    Expansion substitute_q_power(int k) const
    {
        Expansion out;
        for (const auto& [key, c] : terms_)
            out.terms_.emplace(key, c.substitute_power(k));
        return out;
    }

    bool is_q_free() const
    {
        for (const auto& [k, c] : terms_)
            if (!c.is_constant())
                return false;
        return true;
    }

    /// Applies f to every coefficient, dropping zeros.
    template <typename F>
    Expansion map_coeffs(F&& f) const
    {
        Expansion out;
        for (const auto& [k, c] : terms_)
            out.add_term(k, f(c));
        return out;
    }

    Expansion& operator+=(const Expansion& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    Expansion& operator-=(const Expansion& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    Expansion& operator*=(const QPoly& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, x] : terms_)
            x *= c;
        return *this;
    }
    Expansion operator-() const
    {
        Expansion out = *this;
        for (auto& [k, x] : out.terms_)
            x = -x;
        return out;
    }

    friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
    friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
    friend Expansion operator*(Expansion a, const QPoly& c) { return a *= c; }
    friend Expansion operator*(const QPoly& c, Expansion a) { return a *= c; }
    friend bool operator==(const Expansion& a, const Expansion& b) { return a.terms_ == b.terms_; }

    /// "(1 + q)*s[2,1] + s[3]"-style text, terms in key order.
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty())
                out += " + ";
            if (c == QPoly(1)) {
            } else if (c.coeffs().size() == 1 && c.valuation() == 0) {
                out += c.str() + "*";
            } else {
                out += "(" + c.str() + ")*";
            }
            out += std::string(Basis::symbol) + k.str();
        }
        return out;
    }

private:
    Terms terms_;
};

/// Symmetric function in the power-sum basis: key mu stands for p_mu.
using SymFunc = Expansion<PowerSumBasis>;
/// Schur-basis expansion: key lambda stands for s_lambda.  May be inhomogeneous.
using SchurExpansion = Expansion<SchurBasis>;

// Generators.
SymFunc p_gen(int k);
SymFunc p_gen(const Partition& mu);
SymFunc h_gen(int n);
SymFunc e_gen(int n);
/// h_lambda = h_{lambda_1} h_{lambda_2} ...
SymFunc h_gen(const Partition& lambda);
/// e_lambda = e_{lambda_1} e_{lambda_2} ...
SymFunc e_gen(const Partition& lambda);
SymFunc schur_gen(const Partition& lambda);

/// Ring product; p_mu p_nu = p_{mu u nu}.
SymFunc operator*(const SymFunc& f, const SymFunc& g);
SymFunc& operator*=(SymFunc& f, const SymFunc& g);
SymFunc power(const SymFunc& f, unsigned e);

/// p_k[g]: keys scaled by k and q -> q^k in the coefficients.
SymFunc adams(const SymFunc& g, int k);

/// Plethysm f[g].  The coefficients of f pass through unchanged; those of g
/// are transformed by p_k[q] = q^k.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Hall scalar product: <p_mu, p_nu> = delta z_mu, bilinear in the coefficients.
QPoly scalar(const SymFunc& f, const SymFunc& g);

/// omega: p_mu -> (-1)^{|mu| - l(mu)} p_mu.
SymFunc omega(const SymFunc& f);
SchurExpansion omega(const SchurExpansion& e);

/// f^perp g, the adjoint of multiplication by f.
SymFunc perp(const SymFunc& f, const SymFunc& g);

/// <p_1^n, f> for homogeneous f of degree n.  Throws std::invalid_argument
/// on inhomogeneous input.
QPoly dim_of(const SymFunc& f);

SchurExpansion to_schur(const SymFunc& f);
SymFunc from_schur(const SchurExpansion& e);

/// s_mu -> s_{mu minus its largest part}, extended linearly.
SchurExpansion bar(const SchurExpansion& e);

/// Every coefficient lies in N[q].
bool schur_positive(const SchurExpansion& e);
bool schur_positive(const SymFunc& f);
/// g - f is Schur-positive.
bool schur_leq(const SchurExpansion& f, const SchurExpansion& g);
bool schur_leq(const SymFunc& f, const SymFunc& g);
/// g - f is Schur-positive and nonzero.
bool schur_lt(const SchurExpansion& f, const SchurExpansion& g);
bool schur_lt(const SymFunc& f, const SymFunc& g);

/// The term holding the smallest coefficient, if any coefficient fails to be
/// in N[q]; nullopt for Schur-positive input.
std::optional<std::pair<Partition, QPoly>> positivity_witness(const SchurExpansion& e);

/// Exact value of f at x = point (remaining variables zero) and q = qv.
Rational eval_in_vars(const SymFunc& f, std::span<const Rational> point, const Rational& qv);

/// (1 - q)^{-1} applied coefficientwise.  Throws NotDivisible.
template <typename Basis>
Expansion<Basis> divide_by_one_minus_q(const Expansion<Basis>& e)
{
    return e.map_coeffs([](const QPoly& c) { return divide_by_one_minus_q(c); });
}

/// Parses "s[2,2,2] + (1+q)*s[3,3] - 2*s[4,2]" into a Schur expansion, or the
/// analogous "p[...]" text into a SymFunc.
SchurExpansion parse_schur(std::string_view text);
SymFunc parse_power_sums(std::string_view text);

}  // namespace qfoulkes

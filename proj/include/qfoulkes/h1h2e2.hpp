#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "qfoulkes/symfunc.hpp"

namespace qfoulkes {

/// Element of the subring Q[h1, h2, e2] written in the basis
/// h1^i h2^j e2^k with i in {0, 1}.
///
/// h1^2 = h2 + e2, so every polynomial in h1, h2, e2 reduces uniquely to this
/// form, and it has natural coefficients iff the element lies in N[h1, h2, e2].
class H1H2E2Form {
public:
    /// (i, j, k) for h1^i h2^j e2^k.
    using Monomial = std::tuple<int, int, int>;

    H1H2E2Form() = default;

    /// nullopt when f has q-dependent coefficients or a power sum p_k, k > 2.
    static std::optional<H1H2E2Form> from_symfunc(const SymFunc& f);

    SymFunc to_symfunc() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_natural() const;

    /// "6*h2*e2^3 + 2*e2^4"; "0" for zero.
    std::string str() const;

    friend bool operator==(const H1H2E2Form&, const H1H2E2Form&) = default;

private:
    void add(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

}  // namespace qfoulkes

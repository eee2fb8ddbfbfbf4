#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qfoulkes {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a polynomial claimed to vanish at q = 1 does not.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact univariate polynomial in q with rational coefficients.
///
/// coeffs()[k] is the coefficient of q^k.  The representation is dense and
/// normalized: no trailing zeros, and the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rational& c);  // NOLINT: constants convert implicitly
    QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT
    QPoly(int c) : QPoly(Rational(c)) {}  // NOLINT
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly monomial(const Rational& c, int k);
    static QPoly q() { return monomial(1, 1); }

    /// Parses "1 + 2*q - 3/4*q^3" (also accepts "q2" style exponents and spaces).
    static QPoly parse(std::string_view text);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of q^k (zero outside the stored range).
    Rational operator[](int k) const;
    /// Lowest power with a nonzero coefficient; -1 for zero.
    int valuation() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& c);
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend QPoly operator*(const Rational& c, QPoly a) { return a *= c; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    Rational eval(const Rational& v) const;
    /// q -> q^k.
    QPoly substitute_power(int k) const;
    QPoly pow(unsigned e) const;

    /// True iff every coefficient is a nonnegative integer.
    bool is_natural() const;
    bool is_integral() const;
    /// Smallest coefficient (0 for the zero polynomial).
    Rational min_coeff() const;

    /// Common denominator of all coefficients (1 for zero).
    Integer denominator_lcm() const;

    /// Text form, ascending degree: "1 + 2*q + q^3"; "0" for zero.
    std::string str() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// [k]_q = 1 + q + ... + q^{k-1}.
QPoly q_int(int k);
/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
QPoly q_factorial(int n);
/// (1 - q).
QPoly one_minus_q();

/// r with (1 - q) r = p.  Throws NotDivisible when p(1) != 0.
QPoly divide_by_one_minus_q(const QPoly& p);

/// Polynomial long division: quotient and remainder with deg r < deg b.
struct QPolyDivision {
    QPoly quotient;
    QPoly remainder;
};
QPolyDivision divide(const QPoly& a, const QPoly& b);

/// Exact quotient a / b; throws NotDivisible on a nonzero remainder.
QPoly divide_exact(const QPoly& a, const QPoly& b);

/// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
inline Rational ratio(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Decimal or "num/den" text of a rational.
std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace qfoulkes

#include "qfoulkes/qpoly.hpp"

#include <algorithm>
#include <cctype>

namespace qfoulkes {

QPoly::QPoly(const Rational& c)
{
    if (c != 0) {
        coeffs_.push_back(c);
        coeffs_.back().canonicalize();
    }
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    normalize();
}

QPoly QPoly::monomial(const Rational& c, int k)
{
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

void QPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational QPoly::operator[](int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

int QPoly::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return static_cast<int>(k);
    return -1;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o)
{
    *this = *this * o;
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly r = *this;
    for (auto& x : r.coeffs_)
        x = -x;
    return r;
}

Integer QPoly::denominator_lcm() const
{
    Integer d = 1;
    for (const auto& c : coeffs_)
        if (c.get_den() != 1)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    return d;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.coeffs_.size() == 1)
        return b * a.coeffs_[0];
    if (b.coeffs_.size() == 1)
        return a * b.coeffs_[0];

    // Clear denominators once, convolve over the integers, then divide back.
    auto scaled = [](const QPoly& p, const Integer& d) {
        std::vector<Integer> out(p.coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            const auto& c = p.coeffs_[i];
            if (c == 0)
                continue;
            mpz_divexact(out[i].get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
            out[i] *= c.get_num();
        }
        return out;
    };
    const Integer da = a.denominator_lcm();
    const Integer db = b.denominator_lcm();
    const auto A = scaled(a, da);
    const auto B = scaled(b, db);
    std::vector<Integer> C(A.size() + B.size() - 1);
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i] == 0)
            continue;
        for (std::size_t j = 0; j < B.size(); ++j)
            mpz_addmul(C[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
    }
    const Integer den = da * db;
    QPoly r;
    r.coeffs_.resize(C.size());
    for (std::size_t k = 0; k < C.size(); ++k) {
        mpz_set(r.coeffs_[k].get_num_mpz_t(), C[k].get_mpz_t());
        mpz_set(r.coeffs_[k].get_den_mpz_t(), den.get_mpz_t());
        r.coeffs_[k].canonicalize();
    }
    r.normalize();
    return r;
}

Rational QPoly::eval(const Rational& v) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * v + *it;
    return acc;
}

QPoly QPoly::substitute_power(int k) const
{
    if (k == 1 || coeffs_.size() <= 1)
        return *this;
    QPoly r;
    r.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return r;
}

QPoly QPoly::pow(unsigned e) const
{
    QPoly result = 1;
    QPoly base = *this;
    while (e) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e)
            base *= base;
    }
    return result;
}

bool QPoly::is_natural() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1 && c >= 0; });
}

bool QPoly::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational QPoly::min_coeff() const
{
    if (coeffs_.empty())
        return 0;
    return *std::min_element(coeffs_.begin(), coeffs_.end());
}

std::string rational_str(const Rational& r)
{
    return r.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty())
        throw std::invalid_argument("empty rational");
    if (s.front() == '+')
        s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string QPoly::str() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + "*";
        out += "q";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

QPoly QPoly::parse(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw std::invalid_argument("empty polynomial text");
    QPoly result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty())
            throw std::invalid_argument("bad polynomial text '" + std::string(text) + "'");
        Rational coeff = 1;
        int power = 0;
        auto qpos = term.find('q');
        if (qpos == std::string::npos) {
            coeff = parse_rational(term);
        } else {
            std::string c = term.substr(0, qpos);
            if (!c.empty() && c.back() == '*')
                c.pop_back();
            if (!c.empty())
                coeff = parse_rational(c);
            std::string e = term.substr(qpos + 1);
            if (!e.empty() && e.front() == '^')
                e.erase(0, 1);
            power = e.empty() ? 1 : std::stoi(e);
            if (power < 0)
                throw std::invalid_argument("negative exponent in '" + std::string(text) + "'");
        }
        result += monomial(coeff * sign, power);
    }
    return result;
}

QPoly q_int(int k)
{
    if (k < 1)
        throw std::invalid_argument("q_int requires k >= 1");
    return QPoly(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)));
}

QPoly q_factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("q_factorial requires n >= 0");
    QPoly r = 1;
    for (int k = 2; k <= n; ++k)
        r *= q_int(k);
    return r;
}

QPoly one_minus_q()
{
    return QPoly(std::vector<Rational>{1, -1});
}

QPoly divide_by_one_minus_q(const QPoly& p)
{
    if (p.is_zero())
        return {};
    // (1 - q) r = p  =>  r_k = p_0 + ... + p_k, and the full sum must vanish.
    std::vector<Rational> r(p.coeffs().size());
    Rational running = 0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        running += p.coeffs()[k];
        r[k] = running;
    }
    if (running != 0)
        throw NotDivisible("polynomial does not vanish at q = 1: " + p.str());
    return QPoly(std::move(r));
}

QPolyDivision divide(const QPoly& a, const QPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    const Rational lead = b.coeffs().back();
    if (a.degree() < db)
        return {QPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly divide_exact(const QPoly& a, const QPoly& b)
{
    auto [quot, rem] = divide(a, b);
    if (!rem.is_zero())
        throw NotDivisible("inexact division of " + a.str() + " by " + b.str());
    return quot;
}

}  // namespace qfoulkes

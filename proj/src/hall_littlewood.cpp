#include "qfoulkes/hall_littlewood.hpp"

#include <algorithm>
#include <functional>

#include "qfoulkes/characters.hpp"
#include "qfoulkes/memo.hpp"

namespace qfoulkes {

std::vector<int> Word::content() const
{
    std::vector<int> out;
    for (int x : letters) {
        if (x < 1)
            throw std::invalid_argument("word letters must be positive");
        if (static_cast<std::size_t>(x) > out.size())
            out.resize(static_cast<std::size_t>(x), 0);
        ++out[static_cast<std::size_t>(x - 1)];
    }
    return out;
}

bool Tableau::is_semistandard() const
{
    if (static_cast<int>(rows.size()) != shape.length())
        return false;
    std::vector<int> counts;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape[static_cast<int>(i)])
            return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int x = rows[i][j];
            if (x < 1)
                return false;
            if (j > 0 && rows[i][j - 1] > x)
                return false;
            if (i > 0 && rows[i - 1][j] >= x)
                return false;
            if (static_cast<std::size_t>(x) > counts.size())
                counts.resize(static_cast<std::size_t>(x), 0);
            ++counts[static_cast<std::size_t>(x - 1)];
        }
    }
    for (int c = 0; c < content.length() || c < static_cast<int>(counts.size()); ++c) {
        const int have = c < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(c)] : 0;
        if (have != content[c])
            return false;
    }
    return true;
}

int charge(std::span<const int> word)
{
    Word w{std::vector<int>(word.begin(), word.end())};
    const auto content = w.content();
    for (std::size_t i = 1; i < content.size(); ++i)
        if (content[i] > content[i - 1])
            throw NotPartitionContent("charge requires partition content");

    const int len = static_cast<int>(word.size());
    std::vector<bool> used(word.size(), false);
    int remaining = len;
    int total = 0;
    while (remaining > 0) {
        int pos = len;  // just right of the last letter
        int index = 0;
        for (int letter = 1;; ++letter) {
            int found = -1;
            bool wrapped = false;
            for (int step = 1; step <= len; ++step) {
                int p = pos - step;
                if (p < 0) {
                    p += len;
                    wrapped = true;
                }
                if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == letter) {
                    found = p;
                    break;
                }
            }
            if (found < 0)
                break;
            if (letter > 1 && wrapped)
                ++index;
            total += index;
            used[static_cast<std::size_t>(found)] = true;
            --remaining;
            pos = found;
        }
    }
    return total;
}

Word reading_word(const Tableau& t)
{
    Word w;
    for (auto row = t.rows.rbegin(); row != t.rows.rend(); ++row)
        w.letters.insert(w.letters.end(), row->begin(), row->end());
    return w;
}

std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content)
{
    std::vector<Tableau> out;
    if (shape.weight() != content.weight())
        return out;
    const int rows = shape.length();
    std::vector<int> current(static_cast<std::size_t>(rows), 0);
    std::vector<std::vector<int>> filling(static_cast<std::size_t>(rows));

    // Letter `letter` occupies a horizontal strip added to `current`.
    std::function<void(int)> place_letter;
    std::function<void(int, int, int, std::vector<int>&)> choose_strip =
        [&](int letter, int row, int left, std::vector<int>& next) {
            if (row == rows) {
                if (left != 0)
                    return;
                std::vector<int> saved = current;
                for (int r = 0; r < rows; ++r)
                    for (int j = current[static_cast<std::size_t>(r)]; j < next[static_cast<std::size_t>(r)]; ++j)
                        filling[static_cast<std::size_t>(r)].push_back(letter);
                current = next;
                place_letter(letter + 1);
                current = saved;
                for (int r = 0; r < rows; ++r)
                    filling[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(current[static_cast<std::size_t>(r)]));
                return;
            }
            const int lo = current[static_cast<std::size_t>(row)];
            int hi = shape[row];
            if (row > 0)
                hi = std::min(hi, current[static_cast<std::size_t>(row - 1)]);
            for (int len = lo; len <= hi && len - lo <= left; ++len) {
                next[static_cast<std::size_t>(row)] = len;
                choose_strip(letter, row + 1, left - (len - lo), next);
            }
        };
    place_letter = [&](int letter) {
        if (letter > content.length()) {
            out.push_back(Tableau{shape, filling, content});
            return;
        }
        std::vector<int> next(static_cast<std::size_t>(rows), 0);
        choose_strip(letter, 0, content[letter - 1], next);
    };
    place_letter(1);
    return out;
}

KostkaFoulkesTable& KostkaFoulkesTable::global()
{
    static KostkaFoulkesTable table;
    return table;
}

QPoly KostkaFoulkesTable::get(const Partition& lambda, const Partition& mu)
{
    Key key{lambda, mu};
    {
        std::lock_guard lock(mutex_);
        auto it = table_.find(key);
        if (it != table_.end())
            return it->second;
    }
    QPoly value;
    if (lambda.weight() == mu.weight() && dominance_leq(mu, lambda)) {
        std::vector<Rational> coeffs;
        for (const auto& t : ssyt_enumerate(lambda, mu)) {
            const auto c = static_cast<std::size_t>(charge(reading_word(t)));
            if (c >= coeffs.size())
                coeffs.resize(c + 1, Rational(0));
            coeffs[c] += 1;
        }
        value = QPoly(std::move(coeffs));
    }
    std::lock_guard lock(mutex_);
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
}

std::map<KostkaFoulkesTable::Key, QPoly> KostkaFoulkesTable::snapshot() const
{
    std::lock_guard lock(mutex_);
    return table_;
}

void KostkaFoulkesTable::install(const Key& key, QPoly value)
{
    std::lock_guard lock(mutex_);
    table_.insert_or_assign(key, std::move(value));
}

void KostkaFoulkesTable::clear()
{
    std::lock_guard lock(mutex_);
    table_.clear();
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("kostka_foulkes: partitions of different weights");
    return KostkaFoulkesTable::global().get(lambda, mu);
}

QPoly standard_charge_polynomial(const Partition& lambda)
{
    std::vector<Rational> coeffs;
    for (const auto& t : ssyt_enumerate(lambda, Partition::rectangle(1, lambda.weight()))) {
        std::vector<int> word;
        for (const auto& row : t.rows)
            word.insert(word.end(), row.rbegin(), row.rend());
        const auto c = static_cast<std::size_t>(charge(word));
        if (c >= coeffs.size())
            coeffs.resize(c + 1, Rational(0));
        coeffs[c] += 1;
    }
    return QPoly(std::move(coeffs));
}

QPoly qhook_coeff(const Partition& mu)
{
    QPoly hooks = 1;
    for (const auto& [cell, h] : hook_lengths(mu))
        hooks *= q_int(h);
    try {
        return divide_exact(q_factorial(mu.weight()), hooks) * QPoly::monomial(1, n_stat(mu));
    } catch (const NotDivisible& e) {
        throw InternalError(std::string("q-hook formula not polynomial: ") + e.what());
    }
}

SymFunc hl_h(int n)
{
    if (n < 1)
        throw std::invalid_argument("hl_h requires n >= 1");
    static Memo<int, SymFunc> memo;
    return memo.get(n, [n] {
        const QPoly fact = q_factorial(n);
        SymFunc out;
        for (const auto& mu : PartitionIndex::of(n).all()) {
            QPoly denom = 1;
            for (int part : mu.parts())
                denom *= q_int(part);
            QPoly c = divide_exact(fact, denom) * one_minus_q().pow(static_cast<unsigned>(n - mu.length()));
            out.add_term(mu, c * ratio(Integer(1), z_of(mu)));
        }
        return out;
    });
}

SchurExpansion q_schur(const Partition& mu)
{
    const Partition mu_conj = conjugate(mu);
    SchurExpansion out;
    for (const auto& lambda : PartitionIndex::of(mu.weight()).all()) {
        if (!dominance_leq(mu_conj, lambda))
            continue;
        out.add_term(conjugate(lambda), kostka_foulkes(lambda, mu_conj));
    }
    return out;
}

SymFunc q_schur_p(const Partition& mu)
{
    static Memo<Partition, SymFunc> memo;
    return memo.get(mu, [&mu] { return from_schur(q_schur(mu)); });
}

}  // namespace qfoulkes

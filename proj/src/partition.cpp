#include "qfoulkes/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qfoulkes {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int k, int count)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(count), k));
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("partition must be written as [p1,p2,...]: " + std::string(text));
    std::string_view body = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
            throw std::invalid_argument("bad partition part '" + std::string(item) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    if (auto c = a.weight_ <=> b.weight_; c != 0)
        return c;
    // Reverse lexicographic: the larger leading part sorts first.
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                  a.parts_.end());
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> out(static_cast<std::size_t>(lambda.part(0)), 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    // Depth-first with non-increasing parts, largest first: reverse lex order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::int64_t partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

mpz_class z_of(const Partition& mu)
{
    mpz_class z = 1;
    const auto& parts = mu.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const auto d = static_cast<unsigned long>(j - i);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), d);
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), d);
        z *= power * fact;
        i = j;
    }
    return z;
}

std::map<std::pair<int, int>, int> hook_lengths(const Partition& mu)
{
    const Partition conj = conjugate(mu);
    std::map<std::pair<int, int>, int> hooks;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) {
            int arm = mu[i] - j - 1;
            int leg = conj[j] - i - 1;
            hooks[{i + 1, j + 1}] = arm + leg + 1;
        }
    return hooks;
}

int n_stat(const Partition& mu)
{
    int total = 0;
    for (int i = 0; i < mu.length(); ++i)
        total += i * mu[i];
    return total;
}

bool dominance_leq(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("dominance_leq: partitions of different weights");
    int sum_l = 0;
    int sum_m = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int k = 0; k < len; ++k) {
        sum_l += lambda[k];
        sum_m += mu[k];
        if (sum_l > sum_m)
            return false;
    }
    return true;
}

Partition add_parts(const Partition& lambda, const Partition& mu)
{
    const int len = std::max(lambda.length(), mu.length());
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        out[static_cast<std::size_t>(i)] = lambda[i] + mu[i];
    return Partition(std::move(out));
}

Partition remove_largest_part(const Partition& mu)
{
    if (mu.empty())
        return mu;
    return Partition(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
}

Partition merge(const Partition& lambda, const Partition& mu)
{
    std::vector<int> out;
    out.reserve(lambda.parts().size() + mu.parts().size());
    std::merge(lambda.parts().begin(), lambda.parts().end(), mu.parts().begin(), mu.parts().end(),
               std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

Partition scale_parts(const Partition& mu, int k)
{
    std::vector<int> out = mu.parts();
    for (int& x : out)
        x *= k;
    return Partition(std::move(out));
}

int cycle_sign(const Partition& mu)
{
    return ((mu.weight() - mu.length()) % 2 == 0) ? 1 : -1;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts())
        h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 29);
    return h;
}

}  // namespace qfoulkes

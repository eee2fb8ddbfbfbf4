#include "qfoulkes/characters.hpp"

#include <bit>
#include <stdexcept>

namespace qfoulkes {

PartitionIndex::PartitionIndex(int n) : n_(n), list_(partitions_of(n))
{
    lookup_.reserve(list_.size());
    for (std::size_t i = 0; i < list_.size(); ++i)
        lookup_.emplace(list_[i], static_cast<int>(i));
}

const PartitionIndex& PartitionIndex::of(int n)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PartitionIndex>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end())
            return *it->second;
    }
    auto fresh = std::make_unique<PartitionIndex>(n);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(fresh));
    return *it->second;
}

int PartitionIndex::index(const Partition& p) const
{
    auto it = lookup_.find(p);
    return it == lookup_.end() ? -1 : it->second;
}

CharacterTable& CharacterTable::global()
{
    static CharacterTable table;
    return table;
}

std::int64_t CharacterTable::operator()(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: " + lambda.str() + " and " + mu.str() +
                                    " have different weights");
    const auto table = degree(lambda.weight());
    const auto& idx = PartitionIndex::of(lambda.weight());
    return table->value(idx.index(lambda), idx.index(mu));
}

std::shared_ptr<const CharacterTable::Degree> CharacterTable::degree(int n)
{
    if (n < 0)
        throw std::invalid_argument("character table of negative degree");
    {
        std::lock_guard lock(mutex_);
        auto it = tables_.find(n);
        if (it != tables_.end())
            return it->second;
    }
    // Build bottom-up so the recursion below only ever finds cached degrees.
    for (int m = 0; m < n; ++m)
        degree(m);
    auto fresh = compute(n);
    std::lock_guard lock(mutex_);
    auto [it, inserted] = tables_.emplace(n, std::move(fresh));
    return it->second;
}

std::vector<int> CharacterTable::computed_degrees() const
{
    std::lock_guard lock(mutex_);
    std::vector<int> out;
    for (const auto& [n, t] : tables_)
        out.push_back(n);
    return out;
}

void CharacterTable::clear()
{
    std::lock_guard lock(mutex_);
    tables_.clear();
}

void CharacterTable::install(std::shared_ptr<const Degree> table)
{
    std::lock_guard lock(mutex_);
    tables_.insert_or_assign(table->n, std::move(table));
}

namespace {

using BetaSet = std::uint64_t;

BetaSet beta_set(const Partition& lambda)
{
    BetaSet mask = 0;
    const int len = lambda.length();
    for (int r = 0; r < len; ++r)
        mask |= BetaSet{1} << static_cast<unsigned>(lambda[r] + (len - 1 - r));
    return mask;
}

Partition from_beta_set(BetaSet mask, int beads)
{
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(beads));
    int r = 0;
    for (int pos = 63; pos >= 0 && r < beads; --pos) {
        if (mask & (BetaSet{1} << static_cast<unsigned>(pos))) {
            parts.push_back(pos - (beads - 1 - r));
            ++r;
        }
    }
    return Partition(std::move(parts));
}

struct Strip {
    int target;  // index of lambda minus the rim hook in degree n - k
    int sign;
};

}  // namespace

std::shared_ptr<const CharacterTable::Degree> CharacterTable::compute(int n)
{
    if (n > 60)
        throw std::out_of_range("character tables are limited to degree 60");
    const auto& idx = PartitionIndex::of(n);
    auto table = std::make_shared<Degree>();
    table->n = n;
    table->size = idx.size();
    table->values.assign(static_cast<std::size_t>(idx.size()) * static_cast<std::size_t>(idx.size()), 0);
    if (n == 0) {
        table->values[0] = 1;
        return table;
    }

    std::vector<std::shared_ptr<const Degree>> lower(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        std::lock_guard lock(mutex_);
        lower[static_cast<std::size_t>(m)] = tables_.at(m);
    }

    // For each mu: the size of its largest part and the index of the rest.
    std::vector<int> first_part(static_cast<std::size_t>(idx.size()));
    std::vector<int> rest_index(static_cast<std::size_t>(idx.size()));
    for (int j = 0; j < idx.size(); ++j) {
        const Partition& mu = idx.at(j);
        first_part[static_cast<std::size_t>(j)] = mu[0];
        rest_index[static_cast<std::size_t>(j)] = PartitionIndex::of(n - mu[0]).index(remove_largest_part(mu));
    }

    std::vector<std::vector<Strip>> strips(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < idx.size(); ++i) {
        const Partition& lambda = idx.at(i);
        const BetaSet mask = beta_set(lambda);
        const int beads = lambda.length();
        for (int k = 1; k <= n; ++k) {
            auto& list = strips[static_cast<std::size_t>(k)];
            list.clear();
            const auto& target_index = PartitionIndex::of(n - k);
            for (int b = k; b < 64; ++b) {
                const BetaSet from = BetaSet{1} << static_cast<unsigned>(b);
                const BetaSet to = BetaSet{1} << static_cast<unsigned>(b - k);
                if (!(mask & from) || (mask & to))
                    continue;
                const BetaSet between = mask & (from - 1) & ~((to << 1) - 1);
                const int sign = (std::popcount(between) % 2 == 0) ? 1 : -1;
                const Partition smaller = from_beta_set(mask ^ from ^ to, beads);
                list.push_back({target_index.index(smaller), sign});
            }
        }
        for (int j = 0; j < idx.size(); ++j) {
            const int k = first_part[static_cast<std::size_t>(j)];
            const auto& sub = *lower[static_cast<std::size_t>(n - k)];
            const int rest = rest_index[static_cast<std::size_t>(j)];
            std::int64_t value = 0;
            for (const Strip& s : strips[static_cast<std::size_t>(k)]) {
                const std::int64_t x = sub.value(s.target, rest);
                const bool overflow = s.sign > 0 ? __builtin_add_overflow(value, x, &value)
                                                 : __builtin_sub_overflow(value, x, &value);
                if (overflow)
                    throw std::overflow_error("character value exceeds 64 bits at degree " + std::to_string(n));
            }
            table->values[static_cast<std::size_t>(i) * static_cast<std::size_t>(idx.size()) +
                          static_cast<std::size_t>(j)] = value;
        }
    }
    return table;
}

std::int64_t character(const Partition& lambda, const Partition& mu)
{
    return CharacterTable::global()(lambda, mu);
}

}  // namespace qfoulkes

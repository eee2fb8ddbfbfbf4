#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "qfoulkes/partition.hpp"

namespace qfoulkes {

/// The partitions of n in reverse lexicographic order with O(1) lookup.
class PartitionIndex {
public:
    explicit PartitionIndex(int n);

    /// Shared immutable instance per n.
    static const PartitionIndex& of(int n);

    int degree() const { return n_; }
    int size() const { return static_cast<int>(list_.size()); }
    const Partition& at(int i) const { return list_[static_cast<std::size_t>(i)]; }
    const std::vector<Partition>& all() const { return list_; }
    /// -1 if `p` is not a partition of n.
    int index(const Partition& p) const;

private:
    int n_;
    std::vector<Partition> list_;
    std::unordered_map<Partition, int, PartitionHash> lookup_;
};

/// Irreducible characters of the symmetric groups.
///
/// Values are computed a whole degree at a time by the Murnaghan-Nakayama
/// rule on beta-sets (rim hooks removed from the largest part of mu) and
/// memoized.  Lookups are safe from several threads; a degree computed
/// twice by racing threads is inserted once and the results are identical.
class CharacterTable {
public:
    /// Dense table for one degree: value(i, j) = chi^{lambda_i}(mu_j).
    struct Degree {
        int n = 0;
        int size = 0;
        std::vector<std::int64_t> values;

        std::int64_t value(int lambda, int mu) const
        {
            return values[static_cast<std::size_t>(lambda) * static_cast<std::size_t>(size) +
                          static_cast<std::size_t>(mu)];
        }
        std::span<const std::int64_t> row(int lambda) const
        {
            return {values.data() + static_cast<std::size_t>(lambda) * static_cast<std::size_t>(size),
                    static_cast<std::size_t>(size)};
        }
    };

    static CharacterTable& global();

    /// chi^lambda(mu).  Throws std::invalid_argument on unequal weights.
    std::int64_t operator()(const Partition& lambda, const Partition& mu);

    /// Full table for degree n (computing lower degrees as needed).
    std::shared_ptr<const Degree> degree(int n);

    /// Degrees currently held.
    std::vector<int> computed_degrees() const;
    void clear();

    /// Installs an externally loaded table (used by the cache loader).
    void install(std::shared_ptr<const Degree> table);

private:
    std::shared_ptr<const Degree> compute(int n);

    mutable std::mutex mutex_;
    std::map<int, std::shared_ptr<const Degree>> tables_;
};

/// chi^lambda(mu) from the global table.
std::int64_t character(const Partition& lambda, const Partition& mu);

}  // namespace qfoulkes

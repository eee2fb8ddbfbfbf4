#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qfoulkes {

/// An integer partition: weakly decreasing positive parts.
///
/// Partitions are immutable values.  They are totally ordered by weight
/// first and then reverse-lexicographically, so that the partitions of n
/// come out as [n], [n-1,1], ..., [1^n] when used as map keys.
class Partition {
public:
    Partition() = default;

    /// Trailing zero parts are dropped.  Throws std::invalid_argument on a
    /// negative part or an increase.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses the text form "[3,2,1]"; "[]" is the empty partition.
    static Partition parse(std::string_view text);

    /// Builds a partition from parts in any order (sorts them).
    static Partition from_unsorted(std::vector<int> parts);

    /// [k, k, ..., k] with `count` parts.
    static Partition rectangle(int k, int count);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-based part access; returns 0 past the last part.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int operator[](int i) const { return part(i); }

    /// Multiplicity of the part value k.
    int multiplicity(int k) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Conjugate (transposed Ferrers diagram).
Partition conjugate(const Partition& lambda);

/// All partitions of n in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n (pentagonal recurrence).
std::int64_t partition_count(int n);

/// z_mu = prod_j j^{d_j} d_j!, the centralizer order of the class mu.
mpz_class z_of(const Partition& mu);

/// Hook lengths keyed by 1-based (row, column) cells.
std::map<std::pair<int, int>, int> hook_lengths(const Partition& mu);

/// n(mu) = sum_i (i-1) mu_i.
int n_stat(const Partition& mu);

/// Dominance order lambda <= mu.  Throws std::invalid_argument on unequal weights.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// Part-wise sum, the shorter partition padded by zeros.
Partition add_parts(const Partition& lambda, const Partition& mu);

/// mu with its largest part deleted; [] maps to [].
Partition remove_largest_part(const Partition& mu);

/// Multiset union of parts (the key of p_lambda * p_mu).
Partition merge(const Partition& lambda, const Partition& mu);

/// Every part multiplied by k (the key of p_k[p_mu]).
Partition scale_parts(const Partition& mu, int k);

/// (-1)^{|mu| - l(mu)}, the sign of a permutation of cycle type mu.
int cycle_sign(const Partition& mu);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace qfoulkes

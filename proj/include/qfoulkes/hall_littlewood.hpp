#pragma once

#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qfoulkes/partition.hpp"
#include "qfoulkes/qpoly.hpp"
#include "qfoulkes/symfunc.hpp"

namespace qfoulkes {

class NotPartitionContent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an identity that must hold by construction fails.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A word in positive letters.
struct Word {
    std::vector<int> letters;

    /// Multiplicities of 1, 2, ..., max letter.
    std::vector<int> content() const;
};

/// A semistandard tableau in English notation (row 0 on top).
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    Partition content;

    bool is_semistandard() const;
};

/// Lascoux-Schutzenberger charge.
///
/// A standard word gets index 0 on the letter 1 and index(r+1) = index(r) + 1
/// when r+1 sits to the right of r, index(r) otherwise; its charge is the sum
/// of indices.  Words of partition content are cut into standard subwords
/// (scan leftwards for 1, 2, ... wrapping around at the left end) and the
/// charges of the pieces are added.  Throws NotPartitionContent when the
/// content is not weakly decreasing.
int charge(std::span<const int> word);
inline int charge(const Word& w) { return charge(std::span<const int>(w.letters)); }

/// Reading word: rows from the bottom up, each read left to right.
Word reading_word(const Tableau& t);

/// All semistandard tableaux of the given shape and content.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content);

/// Kostka-Foulkes polynomial K_{lambda,mu}(q), the charge generating
/// function of SSYT(lambda, mu) read with reading_word().  Memoized.
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

/// Sum over standard tableaux of shape lambda of q^{charge}, each tableau
/// read along rows right-to-left from the top row down.  This equals the
/// coefficient of s_lambda in H_n(x;q).
QPoly standard_charge_polynomial(const Partition& lambda);

/// q^{n(mu)} [n]_q! / prod [h]_q over the hooks of mu.  Throws
/// InternalError if the division is inexact.
QPoly qhook_coeff(const Partition& mu);

/// H_n(x;q) in the power-sum basis:
///   sum_mu [n]_q! / (z_mu [mu_1]_q ... [mu_l]_q) (1-q)^{n-l(mu)} p_mu.
/// Memoized.
SymFunc hl_h(int n);

/// S_mu(x;q) = sum_lambda K_{lambda,mu'}(q) s_{lambda'}.
SchurExpansion q_schur(const Partition& mu);
/// q_schur() in the power-sum basis (memoized).
SymFunc q_schur_p(const Partition& mu);

/// Shared Kostka-Foulkes memo table.  Inserts are idempotent.
class KostkaFoulkesTable {
public:
    using Key = std::pair<Partition, Partition>;

    static KostkaFoulkesTable& global();

    QPoly get(const Partition& lambda, const Partition& mu);
    std::map<Key, QPoly> snapshot() const;
    void install(const Key& key, QPoly value);
    void clear();

private:
    mutable std::mutex mutex_;
    std::map<Key, QPoly> table_;
};

}  // namespace qfoulkes

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfoulkes/h1h2e2.hpp"
#include "qfoulkes/symfunc.hpp"

namespace qfoulkes {

/// Raised by theta_direct() when no symmetric function fits the identity.
class NoSolution : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Verdict on one Schur-positivity statement.
struct FoulkesReport {
    std::string kind;
    std::vector<std::pair<std::string, int>> params;
    SchurExpansion expansion;
    /// Every Schur coefficient lies in N[q].
    bool positive = false;
    /// Term with the most negative coefficient when !positive.
    std::optional<std::pair<Partition, QPoly>> witness;
    std::int64_t ms = 0;
};

FoulkesReport make_report(std::string kind, std::vector<std::pair<std::string, int>> params,
                          SchurExpansion expansion, std::chrono::steady_clock::time_point started);

// Memoized plethysms of the generators.
SymFunc h_plethysm(int a, int b);   // h_a[h_b]
SymFunc hl_plethysm(int a, int b);  // H_a[H_b]

/// h_b[h_a] - h_a[h_b] in the Schur basis.  Requires 1 <= a <= b.
SchurExpansion f_classic(int a, int b);

/// (H_b[H_a] - H_a[H_b]) / (1 - q) in the Schur basis.  Requires 1 <= a <= b.
/// Throws NotDivisible if the numerator fails to vanish at q = 1.
SchurExpansion f_q(int a, int b);

/// f_q(a, b) at q = 1, kept in the power-sum basis.  The division by 1 - q
/// is done exactly before substituting.
SymFunc f_q_at1(int a, int b);

FoulkesReport check_conjecture1(int a, int b);

/// bar(F_{a,b+1}) - bar(F_{a,b}).  Requires 0 < a <= b.
SchurExpansion stability_diff(int a, int b);
/// Same with the classical f_{a,b}.
SchurExpansion stability_diff_classic(int a, int b);

/// stability_diff(a+1, b) - stability_diff(a, b).  Requires 0 < a < b.
SchurExpansion manivel_diff(int a, int b);

/// (ab)! / (a! (b!)^a).
Integer dim_h_plethysm(int a, int b);
/// Closed form for dim F_{a,b}(x;q), a < b.
QPoly dim_Fq_closed(int a, int b);
/// (ab)! (a-1)(b-1)(b-a) / 4.
Rational dim_Fq_at1(int a, int b);

/// Even and odd parts in e2 of (h2 + e2)^b.
struct EOParts {
    SymFunc even;
    SymFunc odd;
};
EOParts eo_parts(int b);

/// a C(b,2) h1^{ab-2} e2 + C(a,2) h1^{(a-2)b} O_b, the q -> 1 limit of
/// (h1^{ab} - H_a[H_b]) / (1 - q).
SymFunc lemma31(int a, int b);
/// The same limit computed by exact division in the engine.
SymFunc lemma31_engine(int a, int b);

/// Closed form of F_{a,b}(x;1) for 1 < a < b.
SymFunc f_q1_closed(int a, int b);

/// Theta_a(b) defined by F_{a,b+1}(1) = h1^a F_{a,b}(1) + 2 h1^{(a-2)b} Theta.
/// Requires 2 <= a <= b.  Throws NoSolution when the difference is not
/// divisible by the h1 power.
SymFunc theta_direct(int a, int b);

/// rho(z; a) = sum_k k a C(a+1, 2k+1) z^{2k+1}; z is the QPoly variable.
QPoly theta_rho(int a);
/// theta_n(z; a) from its three-term recurrence.
QPoly theta_poly(int n, int a);

struct ThetaRow {
    int b = 0;
    std::optional<SymFunc> direct;  // nullopt on NoSolution
    std::optional<H1H2E2Form> direct_form;
    bool direct_natural = false;
    /// Closed initial values at b = a, a+1, a+2 continued by the recurrence.
    SymFunc chain;
    bool chain_agrees = false;
    /// The recurrence fed with direct values at b-1, b-2, b-3 (b >= a+3).
    std::optional<SymFunc> recurrence_from_direct;
    std::optional<bool> recurrence_agrees;
    /// h2^b theta_{b-a}(e2/h2; a); nullopt when that is not a polynomial.
    std::optional<SymFunc> bridge;
    bool bridge_agrees = false;
};

struct ThetaReport {
    int a = 0;
    int bmax = 0;
    std::vector<ThetaRow> rows;
};

ThetaReport theta_recurrence_check(int a, int bmax);

/// (h_{b-1}[h_a]) h_{a-1} - (h_{a-1}[h_b]) h_{b-1}.  Requires 1 < a < b.
FoulkesReport check_3_5(int a, int b);

/// (H_c[H_d] - H_a[H_b]) / (1 - q).  Requires ab = cd and a <= c <= b.
SchurExpansion generalized_f_q(int a, int b, int c, int d);
/// h_c[h_d] - h_a[h_b].
SchurExpansion generalized_classic(int a, int b, int c, int d);
/// generalized_f_q at q = 1 in the power-sum basis.
SymFunc generalized_at1(int a, int b, int c, int d);
/// Closed form of the q = 1 value.
SymFunc generalized_q1_closed(int a, int b, int c, int d);

/// h<a_1, ..., a_n> = h_{a_1}[h<a_2, ..., a_n>].
SymFunc iterated_h(std::span<const int> seq);

/// sum over permutations of sign(sigma) h<a_sigma(1), ..., a_sigma(n)>.
/// Requires a strictly decreasing sequence of integers > 1.
SchurExpansion alternating_sum(std::span<const int> seq);

/// 2 h<c,b,a> - h<b,a,c> - h<a,c,b>.  Requires a < b < c.
SchurExpansion immanant_case(int a, int b, int c);

/// Drops the memoized plethysms and F values.
void clear_foulkes_caches();

}  // namespace qfoulkes

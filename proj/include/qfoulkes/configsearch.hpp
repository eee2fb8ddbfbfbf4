#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfoulkes/symfunc.hpp"

namespace qfoulkes {

/// One side [alpha, beta] of a configuration, standing for s_alpha[s_beta].
struct Candidate {
    Partition alpha;
    Partition beta;

    int weight() const { return alpha.weight() * beta.weight(); }
    friend auto operator<=>(const Candidate&, const Candidate&) = default;
    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Ordered pair <[alpha, beta] : [gamma, delta]>.
struct Configuration {
    Partition alpha, beta, gamma, delta;
    int n = 0;
    bool is_foulkes = false;
    bool passed_e_condition = false;
    bool is_q_foulkes = false;
    /// s_gamma[s_delta] - s_alpha[s_beta], or the divided q-difference once
    /// the q-check has been run.
    SchurExpansion certificate;
    std::optional<std::pair<Partition, QPoly>> witness;

    /// "<[2],[3] : [3],[2]>", with a "_q" suffix for q-configurations.
    std::string str() const;
};

/// Result of a single configuration test.
struct ConfigCheck {
    bool holds = false;
    SchurExpansion difference;
    std::optional<std::pair<Partition, QPoly>> witness;
};

/// All [alpha, beta] with |alpha| |beta| = n and |alpha|, |beta| >= 2, sorted.
std::vector<Candidate> candidates(int n);

/// s_gamma[s_delta] - s_alpha[s_beta] Schur-positive for distinct sides.  A
/// quadruple with (alpha, beta) = (gamma, delta) is never a configuration,
/// but distinct sides with equal plethysms are.
/// Throws std::invalid_argument on unequal degrees or a part equal to [1].
ConfigCheck is_foulkes_config(const Partition& alpha, const Partition& beta, const Partition& gamma,
                              const Partition& delta);

/// e_{alpha'}[e_{beta'}] == e_{gamma'}[e_{delta'}].
bool e_condition(const Partition& alpha, const Partition& beta, const Partition& gamma, const Partition& delta);

/// (S_gamma[S_delta] - S_alpha[S_beta]) / (1 - q) with coefficients in N[q],
/// for distinct sides.  Returns holds = false without expanding when e_condition fails.
ConfigCheck is_q_foulkes_config(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                const Partition& delta);

std::vector<Configuration> enumerate_foulkes_configs(int n, int jobs = 1);
std::vector<Configuration> enumerate_q_configs(int n, int jobs = 1);

struct Conjecture4Report {
    int n = 0;
    /// Ordered pairs of distinct candidates satisfying the e-condition.
    int e_pairs = 0;
    int both = 0;
    int neither = 0;
    /// Pairs where exactly one of the two positivity statements holds.
    std::vector<Configuration> one_sided;

    bool holds() const { return one_sided.empty(); }
};

Conjecture4Report check_conjecture4(int n, int jobs = 1);

/// Verdicts for the pattern <[a, b^k] : [c, d^k]>_q and the two companion
/// Schur inequalities h_b[s_{a^k}] - h_c[s_{d^k}] >= 0 and
/// h_c[h_d^k] - h_a[h_b^k] >= 0.
struct GuessVerdict {
    int a = 0, b = 0, c = 0, d = 0, k = 0;
    bool q_config = false;
    bool schur_pattern = false;
    bool h_power_pattern = false;
};

/// Requires abk = cdk and 2 <= a < c <= b.
GuessVerdict check_guess_pattern(int a, int b, int c, int d, int k);
/// All admissible (a, b, c, d, k) with abk = n.
std::vector<GuessVerdict> check_guess_patterns(int n, int jobs = 1);

/// Dense Schur coefficients of s_alpha[s_beta] over PartitionIndex::of(n).
std::shared_ptr<const std::vector<std::int64_t>> classical_plethysm_vector(const Candidate& c);
/// S_alpha[S_beta] in the power-sum basis.
SymFunc q_plethysm(const Candidate& c);

void clear_config_caches();

// Reference counts and lists of configurations.
namespace reference {

/// Counts of Foulkes configurations, index n - 1, n = 1..16.
const std::vector<int>& foulkes_counts();
/// Counts of q-Foulkes configurations, index n - 1, n = 1..20.
const std::vector<int>& q_foulkes_counts();

struct Quad {
    Partition alpha, beta, gamma, delta;
};

/// Explicit Foulkes configurations for n in {6, 8, 10}; empty otherwise.
std::vector<Quad> foulkes_list(int n);
/// Explicit q-Foulkes configurations for n in {16, 18, 20}; empty otherwise.
std::vector<Quad> q_foulkes_list(int n);
/// Further q-configurations reported beyond the tables (degrees 18 to 30).
std::vector<Quad> extra_q_configs();
/// Quadruples reported not to be Foulkes configurations.
std::vector<Quad> negative_controls();

}  // namespace reference

}  // namespace qfoulkes

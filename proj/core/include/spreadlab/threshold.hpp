#ifndef SPREADLAB_THRESHOLD_HPP
#define SPREADLAB_THRESHOLD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spreadlab/hypergraph.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultContainBudget = 2'000'000;

enum class Containment { contained, not_contained, timeout };

std::string containment_str(Containment c);

struct ContainmentResult {
    Containment outcome = Containment::timeout;
    std::uint64_t nodes = 0;
};

/// Exact spanning-containment decision within a node budget. Dispatches to a
/// blossom maximum-matching routine for perfect matchings and to exact cover
/// for clique factors; everything else runs the generic backtracking search.
/// Timeouts are explicit, never a silent "no".
ContainmentResult contains_spanning(const Hypergraph& host, const Hypergraph& pattern,
                                    std::uint64_t node_budget = kDefaultContainBudget,
                                    bool force_generic = false);

/// Maximum matching size (k=2) via blossom contraction; exact on any graph.
int max_matching_size(const Hypergraph& g);

bool is_perfect_matching_pattern(const Hypergraph& pattern);
/// Returns the clique size d >= 3 when the pattern is a disjoint union of
/// equal cliques covering all vertices, else 0 (matchings report 0 here).
int clique_factor_size(const Hypergraph& pattern);

// --- experiment harness ------------------------------------------------------

/// Spanning-target family; the pattern is instantiated per n.
struct TargetSpec {
    enum class Family {
        matching,
        clique_factor,
        cycle_power,
        tight_cycle_power,
        locally_sparse_regular,
        d_degenerate_random,
        from_file,
    };
    Family family = Family::matching;
    int d = 3;                 // clique_factor / regular / degenerate families
    int r = 1;                 // powers
    int k = 3;                 // tight_cycle_power uniformity
    std::uint64_t seed = 1;    // d_degenerate_random
    std::string path;

    static TargetSpec parse(const std::string& text);
    std::string str() const;
};

Hypergraph make_target(const TargetSpec& spec, int n);

struct ExperimentConfig {
    TargetSpec target;
    int n = 0;
    double p = 0.0;  // used by single-point estimates; bisection varies it
    int trials = 0;
    std::uint64_t master_seed = 0;
    std::uint64_t node_budget = kDefaultContainBudget;
    int workers = 1;
};

/// Stable 64-bit digest of everything that determines the outcome stream
/// (target, n, p, trials, seed, budget); workers are excluded on purpose.
std::uint64_t experiment_config_hash(const ExperimentConfig& c);

struct TrialRecord {
    std::uint64_t config_hash = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    Containment outcome = Containment::timeout;
    std::uint64_t nodes = 0;
    double elapsed_sec = 0.0;  // informational; not part of replay comparisons
};

struct ProbabilityEstimate {
    int trials = 0;
    int decided = 0;
    int contained = 0;
    int timeouts = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;  // Wilson 95%
    double ci_hi = 1.0;
    bool reliable = true;  // timeout fraction <= 0.2
};

/// Wilson score interval at 95%.
void wilson_ci(int successes, int total, double* lo, double* hi);

/// Monte Carlo estimate of P[target subgraph appears in the binomial random
/// hypergraph]; trials are independent, seeded from (config, trial index),
/// and timeouts are excluded from the estimate.
ProbabilityEstimate containment_probability(const ExperimentConfig& config,
                                            std::vector<TrialRecord>* records = nullptr,
                                            std::uint64_t probe_index = 0);

struct ThresholdEstimate {
    int n = 0;
    double p_half = 0.0;
    double ci_lo = 0.0;  // final bracketing interval on p
    double ci_hi = 1.0;
    long long trials_used = 0;
    double timeout_fraction = 0.0;
    bool converged = false;
};

/// Bisection on p until the Wilson CI separates from 1/2 or the bracket
/// drops below 1/n^2. Deterministic per master seed.
ThresholdEstimate threshold_bisect(const ExperimentConfig& config,
                                   std::vector<TrialRecord>* records = nullptr);

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    double slope_stderr = 0.0;
};

/// Least-squares slope of log(y) against log(x); needs >= 3 distinct x.
ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& xy);

}  // namespace spreadlab

#endif

#ifndef SPREADLAB_SPREAD_HPP
#define SPREADLAB_SPREAD_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/isomorphism.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultAuditBudget = 50'000'000;

/// Finite distribution over embeddings pattern -> host. Probabilities are
/// exact rationals and must sum to 1.
struct EmbeddingDistribution {
    Hypergraph pattern;
    Hypergraph host;
    std::vector<Embedding> support;
    std::vector<Rational> prob;

    void validate() const;  // throws on malformed support/probabilities
};

/// Uniform distribution over all embeddings; throws if none exist.
EmbeddingDistribution uniform_embedding_distribution(const Hypergraph& pattern, const Hypergraph& host,
                                                     std::uint64_t node_budget = kDefaultEmbeddingBudget);

/// Distribution over copies: edge subsets of the host, each the image of an
/// embedding of the same pattern. Support sets are sorted host-edge indices.
struct CopyDistribution {
    Hypergraph host;
    std::vector<std::vector<int>> support;
    std::vector<Rational> prob;
    int r0 = 0;  // max support set size
};

/// Image pushforward: each embedding maps to its edge-set copy; coinciding
/// images accumulate probability.
CopyDistribution pushforward_copies(const EmbeddingDistribution& d);

enum class SpreadNotion { vertex, edge, multilevel, gamma };
enum class AuditMode { exhaustive, sampled };

/// Exact per-exponent statistics, filled by exhaustive audits.
struct LevelStat {
    int exponent = 0;        // s (vertex notion) or t (edge notions)
    long long events = 0;
    Rational min_prob;
    Rational max_prob;
};

struct SpreadAuditReport {
    SpreadNotion notion = SpreadNotion::vertex;
    AuditMode mode = AuditMode::exhaustive;
    double achieved_q = 0.0;       // max over audited events of P^(1/exponent)
    Rational worst_prob;           // exact probability of the worst event
    int worst_exponent = 1;
    std::optional<double> gamma_achieved;
    std::vector<std::pair<int, int>> witness_pairs;  // vertex notion: (x, y)
    std::vector<int> witness_edges;                  // edge notions: S as host-edge indices
    int witness_t = 0;                               // multilevel/gamma: threshold t
    std::vector<LevelStat> per_level;
    bool pass = true;              // against the supplied q (or q,gamma), when given
    std::uint64_t events_audited = 0;
};

/// Worst event max over s <= s_max and distinct constraint sequences
/// x_1..x_s -> y_1..y_s of mu(psi(x_i)=y_i for all i)^(1/s). Exhaustive when
/// support * subset count fits the budget, otherwise seeded adversarial
/// sampling (achieved_q is then a certified lower bound on q*).
SpreadAuditReport vertex_spread_audit(const EmbeddingDistribution& d, int s_max,
                                      std::uint64_t budget = kDefaultAuditBudget,
                                      std::uint64_t seed = 0,
                                      const std::vector<std::pair<int, int>>* hint = nullptr);

/// Worst event over nonempty S inside some support set with |S| <= t_max
/// (full support sets are always audited) of mu(S subset A)^(1/|S|).
SpreadAuditReport edge_spread_audit(const CopyDistribution& d, int t_max,
                                    std::uint64_t budget = kDefaultAuditBudget,
                                    std::uint64_t seed = 0,
                                    const std::vector<int>* hint = nullptr);

/// Decreasing positive thresholds r_0 > r_1 > ... > r_l = 1.
struct LevelSchedule {
    std::vector<long long> levels;

    int level_count() const { return (int)levels.size() - 1; }  // l
    static LevelSchedule from_levels(std::vector<long long> levels);
    std::string str() const;
};

/// Builds the schedule r_0 = ceil(d n), r_1 = ceil(eps n / k),
/// r_i = ceil(r_{i-1} / n^{9 alpha/(10 d)}) with l = max(2, ceil(10d/(9 alpha)))
/// geometric interior levels, final threshold 1, duplicates merged.
LevelSchedule level_schedule(long long n, const Rational& d, const Rational& alpha,
                             const Rational& eps, int k);

/// Audits mu(|A cap S| >= t) <= q^t for every level window [r_i, r_{i-1}],
/// t in the window and S a j-subset of a support set with j in the window.
SpreadAuditReport multilevel_spread_audit(const CopyDistribution& d, double q, const LevelSchedule& schedule,
                                          std::uint64_t budget = kDefaultAuditBudget,
                                          std::uint64_t seed = 0,
                                          const std::vector<int>* hint = nullptr);

/// Same event family over the single window [r_prime, r] with multiplier
/// gamma: reports the smallest gamma consistent with q over audited events.
SpreadAuditReport gamma_spread_audit(const CopyDistribution& d, double q, double gamma,
                                     long long r, long long r_prime,
                                     std::uint64_t budget = kDefaultAuditBudget,
                                     std::uint64_t seed = 0,
                                     const std::vector<int>* hint = nullptr);

}  // namespace spreadlab

#endif

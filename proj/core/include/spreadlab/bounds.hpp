#ifndef SPREADLAB_BOUNDS_HPP
#define SPREADLAB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

/// One evaluated inequality: an exactly enumerated left side against the
/// displayed right side. Large magnitudes carry their log10 alongside.
struct BoundCheck {
    std::string name;  // lemma31 | lemma32 | ineq2 | spiro26 | kelly42
    std::vector<std::pair<std::string, double>> inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double log10_lhs = 0.0;
    double log10_rhs = 0.0;
    std::optional<unsigned long long> exact_count;
    bool pass = true;
    std::string note;
};

struct SweepResult {
    unsigned long long checked = 0;
    std::vector<BoundCheck> violations;  // capped at 100 stored
    double worst_ratio = 0.0;            // max lhs/rhs over all checks
};

/// Embedding-restriction count: pairs (X, psi) with X a v-subset of V(G),
/// psi a bijection X -> V(F) carrying every edge of G[X] into H[V(F)] and
/// covering every edge of F; bounded by n^c (k Delta(G))^(v-c).
BoundCheck lemma31_check(const Hypergraph& g, const Hypergraph& h, const std::vector<int>& f_edges,
                         std::uint64_t node_budget = 100'000'000);

/// The same count for every nonempty F in E(H) at once (superset-sum
/// transform per vertex support).
SweepResult lemma31_sweep(const Hypergraph& g, const Hypergraph& h);

/// Number of t-edge subsets of S spanning exactly c components, bounded by
/// 2^((k+1)t) Delta(G)^t binom(k|S|, c).
BoundCheck lemma32_check(const Hypergraph& g, const std::vector<int>& s_edges, int t, int c,
                         std::uint64_t node_budget = 100'000'000);

/// All (S, t, c) of one hypergraph via submask enumeration (3^m); requires
/// m <= 24.
SweepResult lemma32_sweep(const Hypergraph& g);

/// binom(k|S|, c) against the regime-dependent right side
/// n^(9 alpha c/(10 d)) (both |S| and t small) or 2^t n^(alpha c/d).
/// The note records which branch of the proof applies.
BoundCheck ineq2_check(long long size_s, long long t, long long c, long long n, int k,
                       const Rational& d, const Rational& alpha, const Rational& eps);

/// Seeded subsample of admissible (|S|, t, c) points for one parameter cell.
SweepResult ineq2_cell_sweep(long long n, int k, const Rational& d, const Rational& alpha,
                             const Rational& eps, int samples, std::uint64_t seed);

enum class SpiroMode { spiro26, kelly42 };

struct SpiroEval {
    SpiroMode mode = SpiroMode::spiro26;
    double bound = 0.0;        // lower bound on the success probability, clamped to [0,1]
    double sample_size = 0.0;  // C*l*q*|V| or 2*l*C*q*|V| per mode
};

/// Success-probability evaluators: spiro26 yields 1 - K/(C l); kelly42 yields
/// 1 - 6 l^2 (C/4)^(-r/2) - 2 exp(-l C q |V|/4) - 8 gamma/(C l), requiring C >= 8.
SpiroEval spiro_success_bound(SpiroMode mode, double l, double c_const, double q, double v_size,
                              double r_lminus1 = 0.0, double gamma = 0.0, double k_const = 1.0);

/// Every connected subgraph with t edges and v vertices must satisfy
/// v >= t/d + 1 + alpha/d; exhaustive over all connected edge subsets
/// (requires e(G) <= 26).
SweepResult deficiency_step_check(const Hypergraph& g, const Rational& d, const Rational& alpha);

}  // namespace spreadlab

#endif

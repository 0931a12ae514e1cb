#ifndef SPREADLAB_DEGENERACY_HPP
#define SPREADLAB_DEGENERACY_HPP

#include <cstdint>
#include <optional>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultSubsetBudget = 400'000'000;
inline constexpr std::uint64_t kDefaultPeBudget = 1u << 22;

/// Parameters of a degeneracy certification query. All subset audits range
/// over u_min <= |U| <= floor(eps * n).
struct DegeneracyParams {
    Rational d;
    Rational alpha;
    Rational eps{1};
    int u_min = 2;
};

struct DensityReport {
    int i = 1;
    Rational value;       // exact max of e(H[U]) / (|U| - i); lower bound if budget hit
    VertexSet witness;
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
};

struct DegeneracyReport {
    Rational alpha_star;  // exact min deficiency d(|U|-1) - e(H[U]); upper bound if budget hit
    VertexSet witness;
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
    // set by certify_degenerate:
    bool has_verdict = false;
    bool pass = false;
    Rational m1;
    std::optional<VertexSet> density_witness;
};

struct LocalSparsityReport {
    long long min_boundary = -1;  // -1 when the size window is empty
    VertexSet witness;
    bool pass = false;            // min_boundary >= d+1 (empty window passes vacuously)
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
};

enum class PeMode { standard, literal };

struct ExpectationThresholdReport {
    PeMode mode = PeMode::standard;
    double value = 0.0;   // max over audited subgraph classes; lower bound if budget hit
    Hypergraph witness;   // standalone copy of the attaining subgraph
    SearchStatus status = SearchStatus::exact;
    std::uint64_t subgraph_classes = 0;
};

/// m_i(H): exact max over vertex subsets U with |U| > i of e(H[U])/(|U|-i).
/// max_subset_size < 0 audits every size (the definition's default); a cap
/// restricts the audit window, which certify_degenerate uses for eps < 1.
DensityReport density_mi(const Hypergraph& h, int i,
                         std::uint64_t node_budget = kDefaultSubsetBudget,
                         int max_subset_size = -1);

/// Exact min of d(|U|-1) - e(H[U]) over u_min <= |U| <= floor(eps*n).
DegeneracyReport alpha_star(const Hypergraph& h, const Rational& d, const Rational& eps,
                            int u_min, std::uint64_t node_budget = kDefaultSubsetBudget);

/// Pass iff the windowed density is <= d and alpha_star >= alpha. Both
/// clauses are evaluated over subsets of size <= floor(eps*n); with eps = 1
/// the density clause is the plain m_1.
DegeneracyReport certify_degenerate(const Hypergraph& h, const DegeneracyParams& params,
                                    std::uint64_t node_budget = kDefaultSubsetBudget);

/// Exact min |edge_boundary(U)| over d <= |U| <= floor(eps*n); pass iff the
/// minimum is >= d+1. Graphs only (k = 2).
LocalSparsityReport locally_sparse_audit(const Hypergraph& h, int d, const Rational& eps,
                                         std::uint64_t node_budget = kDefaultSubsetBudget);

/// Smallest p making the expected count of every nonempty subgraph F at
/// least one. standard mode counts copies in the v(H)-vertex binomial host
/// (|Aut(F)| (n-v(F))! / n!)^(1/e(F)); literal mode uses (|Aut(F)|/v(F)!)^(1/e(F)).
ExpectationThresholdReport expectation_threshold(const Hypergraph& h, PeMode mode,
                                                 std::uint64_t subset_budget = kDefaultPeBudget);

}  // namespace spreadlab

#endif

#ifndef SPREADLAB_ISOMORPHISM_HPP
#define SPREADLAB_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spreadlab/hypergraph.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultIsoBudget = 20'000'000;
inline constexpr std::uint64_t kDefaultEmbeddingBudget = 50'000'000;

struct IsoReport {
    bool is_isomorphic = false;
    std::optional<std::vector<int>> witness_map;  // vertex of A -> vertex of B
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
};

struct AutReport {
    unsigned long long count = 0;  // exact when status == exact
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
};

/// Decides hypergraph isomorphism; returns a witness bijection when true.
IsoReport iso(const Hypergraph& a, const Hypergraph& b, std::uint64_t node_budget = kDefaultIsoBudget);

/// |Aut(A)| by color-refined backtracking enumeration. Exhaustive permutation
/// search for v <= 10 doubles as the oracle for the refined path (tested on
/// the overlap range).
AutReport aut_count(const Hypergraph& a, std::uint64_t node_budget = kDefaultIsoBudget);
AutReport aut_count_naive(const Hypergraph& a);

/// pattern vertex -> host vertex
using Embedding = std::vector<int>;

struct EmbeddingEnumeration {
    std::vector<Embedding> embeddings;
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes = 0;
};

/// All injective maps V(pattern) -> V(host) sending edges to edges,
/// by backtracking with degree and partial-edge filtering.
EmbeddingEnumeration enumerate_embeddings(const Hypergraph& pattern, const Hypergraph& host,
                                          std::uint64_t node_budget = kDefaultEmbeddingBudget);

/// First embedding found, if any; nodes_out reports search effort.
std::optional<Embedding> find_embedding(const Hypergraph& pattern, const Hypergraph& host,
                                        std::uint64_t node_budget, std::uint64_t* nodes_out = nullptr,
                                        bool* budget_hit = nullptr);

bool is_valid_embedding(const Hypergraph& pattern, const Hypergraph& host, const Embedding& map);

/// All non-isomorphic simple graphs (k=2) on exactly n vertices, n <= 7,
/// via canonical adjacency masks. Sizes match 1,2,4,11,34,156,1044.
std::vector<Hypergraph> nonisomorphic_graphs(int n);

/// Canonical (lexicographically minimal) adjacency bitmask of a k=2 graph
/// on n <= 8 vertices; pairs indexed (i<j) in lexicographic order.
std::uint32_t canonical_graph_mask(const Hypergraph& g);

}  // namespace spreadlab

#endif

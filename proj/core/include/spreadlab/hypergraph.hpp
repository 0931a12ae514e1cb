#ifndef SPREADLAB_HYPERGRAPH_HPP
#define SPREADLAB_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spreadlab {

/// Outcome tag for bounded searches: either the search finished and the
/// result is exact, or the budget was hit and the result is only the best
/// value seen so far (never silently wrong).
enum class SearchStatus { exact, budget_exceeded };

/// Sorted duplicate-free set of vertex indices.
struct VertexSet {
    std::vector<int> verts;

    static VertexSet of(std::vector<int> v);

    int size() const { return (int)verts.size(); }
    bool contains(int v) const;
    std::uint64_t mask() const;  // valid for indices < 64
    std::string str() const;

    bool operator==(const VertexSet& o) const { return verts == o.verts; }
};

/// Immutable n-vertex k-uniform hypergraph. Vertices are 0..n-1, each edge
/// is a sorted k-set, edges are stored in lexicographic order without
/// duplicates. Values are safe to share across threads after construction.
class Hypergraph {
public:
    Hypergraph() : k_(2), n_(0), max_degree_(0) {}

    /// Validates, sorts and dedupes. Throws std::invalid_argument with a
    /// diagnostic naming the offending edge on arity/range violations.
    static Hypergraph from_edges(int k, int n, const std::vector<std::vector<int>>& edges);

    int uniformity() const { return k_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    int max_degree() const { return max_degree_; }

    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int idx) const { return edges_[idx]; }
    int degree(int v) const { return (int)incidence_[v].size(); }
    const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }

    /// Index of the given sorted vertex set among edges, or -1.
    int edge_index(const std::vector<int>& sorted_verts) const;
    bool has_edge(const std::vector<int>& sorted_verts) const { return edge_index(sorted_verts) >= 0; }

    /// Per-edge vertex bitmasks, available when n <= 64.
    bool masks_available() const { return !masks_.empty() || edges_.empty(); }
    std::uint64_t edge_mask(int idx) const { return masks_[idx]; }

    /// Degree sequence sorted ascending (cheap isomorphism invariant).
    std::vector<int> degree_sequence() const;

    bool operator==(const Hypergraph& o) const {
        return k_ == o.k_ && n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int k_;
    int n_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
    std::vector<std::uint64_t> masks_;
    int max_degree_;
};

/// Connected components as a partition of 0..n-1; isolated vertices become
/// singleton parts. Parts are sorted internally and by smallest member.
std::vector<std::vector<int>> components(const Hypergraph& h);

/// Subgraph induced on U, vertices relabeled 0..|U|-1 preserving order.
Hypergraph induced(const Hypergraph& h, const VertexSet& u);

/// Edges meeting U in exactly one vertex, as edge indices.
std::vector<int> edge_boundary(const Hypergraph& h, const VertexSet& u);

// --- text format -----------------------------------------------------------
//
//   # comment lines allowed anywhere
//   k n m
//   v1 v2 ... vk        (m lines, 0-based, sorted on write)

Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(const Hypergraph& h, std::ostream& out,
                      const std::vector<std::string>& comment_lines = {});
void write_hypergraph_file(const Hypergraph& h, const std::string& path,
                           const std::vector<std::string>& comment_lines = {});

}  // namespace spreadlab

#endif

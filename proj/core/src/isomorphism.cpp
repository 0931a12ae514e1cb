#include "spreadlab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace spreadlab {

namespace {

// Iterative color refinement. Signatures are built identically for both
// graphs so the resulting integer colors are comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_pair(const Hypergraph& a, const Hypergraph& b) {
    auto degrees = [](const Hypergraph& h) {
        std::vector<int> c(h.vertex_count());
        for (int v = 0; v < h.vertex_count(); ++v) c[v] = h.degree(v);
        return c;
    };
    std::vector<int> ca = degrees(a), cb = degrees(b);
    size_t classes = 0;
    for (int round = 0; round < a.vertex_count() + 1; ++round) {
        auto signature = [](const Hypergraph& h, const std::vector<int>& col, int v) {
            std::vector<std::string> edge_sigs;
            for (int idx : h.incident_edges(v)) {
                std::vector<int> other;
                for (int w : h.edge(idx))
                    if (w != v) other.push_back(col[w]);
                std::sort(other.begin(), other.end());
                std::string s;
                for (int c : other) s += std::to_string(c) + ",";
                edge_sigs.push_back(std::move(s));
            }
            std::sort(edge_sigs.begin(), edge_sigs.end());
            std::string sig = std::to_string(col[v]) + "|";
            for (auto& es : edge_sigs) sig += es + ";";
            return sig;
        };
        std::map<std::string, int> ids;
        std::vector<std::string> sa(a.vertex_count()), sb(b.vertex_count());
        for (int v = 0; v < a.vertex_count(); ++v) { sa[v] = signature(a, ca, v); ids[sa[v]] = 0; }
        for (int v = 0; v < b.vertex_count(); ++v) { sb[v] = signature(b, cb, v); ids[sb[v]] = 0; }
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        for (int v = 0; v < a.vertex_count(); ++v) ca[v] = ids[sa[v]];
        for (int v = 0; v < b.vertex_count(); ++v) cb[v] = ids[sb[v]];
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {ca, cb};
}

// Shared backtracking over injective vertex maps pattern -> host. Used for
// embedding enumeration, existence queries, isomorphism, and automorphism
// counting (the latter two pass color constraints).
struct MapSearch {
    const Hypergraph& pattern;
    const Hypergraph& host;
    const std::vector<int>* pattern_colors = nullptr;  // optional, for iso/aut
    const std::vector<int>* host_colors = nullptr;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool stop = false;

    std::vector<int> order;             // pattern vertices in assignment order
    std::vector<int> assignment;        // pattern vertex -> host vertex or -1
    std::vector<char> host_used;

    // callback returns false to stop the whole search (early exit)
    bool (*on_match)(const std::vector<int>&, void*) = nullptr;
    void* user = nullptr;

    MapSearch(const Hypergraph& p, const Hypergraph& h, std::uint64_t b)
        : pattern(p), host(h), budget(b) {
        assignment.assign(pattern.vertex_count(), -1);
        host_used.assign(host.vertex_count(), 0);
        build_order();
    }

    void build_order() {
        const int n = pattern.vertex_count();
        std::vector<char> placed(n, 0);
        std::vector<int> placed_neighbors(n, 0);
        order.reserve(n);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 || placed_neighbors[v] > placed_neighbors[best] ||
                    (placed_neighbors[v] == placed_neighbors[best] &&
                     pattern.degree(v) > pattern.degree(best)))
                    best = v;
            }
            placed[best] = 1;
            order.push_back(best);
            for (int idx : pattern.incident_edges(best))
                for (int w : pattern.edge(idx))
                    if (!placed[w]) ++placed_neighbors[w];
        }
    }

    bool consistent(int u, int y) const {
        if (host.degree(y) < pattern.degree(u)) return false;
        if (pattern_colors && (*pattern_colors)[u] != (*host_colors)[y]) return false;
        std::vector<int> img;
        for (int idx : pattern.incident_edges(u)) {
            img.clear();
            int assigned = 0;
            for (int w : pattern.edge(idx)) {
                int a = (w == u) ? y : assignment[w];
                if (a >= 0) { img.push_back(a); ++assigned; }
            }
            std::sort(img.begin(), img.end());
            if (assigned == pattern.uniformity()) {
                if (!host.has_edge(img)) return false;
            } else {
                // some host edge through y must contain all assigned images
                bool ok = false;
                for (int hidx : host.incident_edges(y)) {
                    const auto& he = host.edge(hidx);
                    if (std::includes(he.begin(), he.end(), img.begin(), img.end())) { ok = true; break; }
                }
                if (!ok) return false;
            }
        }
        return true;
    }

    void run(int depth = 0) {
        if (stop) return;
        if (depth == (int)order.size()) {
            if (on_match && !on_match(assignment, user)) stop = true;
            return;
        }
        int u = order[depth];
        for (int y = 0; y < host.vertex_count(); ++y) {
            if (host_used[y]) continue;
            if (++nodes > budget) { budget_hit = true; stop = true; return; }
            if (!consistent(u, y)) continue;
            assignment[u] = y;
            host_used[y] = 1;
            run(depth + 1);
            assignment[u] = -1;
            host_used[y] = 0;
            if (stop) return;
        }
    }
};

}  // namespace

bool is_valid_embedding(const Hypergraph& pattern, const Hypergraph& host, const Embedding& map) {
    if ((int)map.size() != pattern.vertex_count()) return false;
    std::vector<char> used(host.vertex_count(), 0);
    for (int y : map) {
        if (y < 0 || y >= host.vertex_count() || used[y]) return false;
        used[y] = 1;
    }
    for (const auto& e : pattern.edges()) {
        std::vector<int> img;
        img.reserve(e.size());
        for (int v : e) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        if (!host.has_edge(img)) return false;
    }
    return true;
}

EmbeddingEnumeration enumerate_embeddings(const Hypergraph& pattern, const Hypergraph& host,
                                          std::uint64_t node_budget) {
    if (pattern.vertex_count() > host.vertex_count())
        throw std::invalid_argument("enumerate_embeddings: pattern has more vertices than host");
    if (pattern.uniformity() != host.uniformity() && pattern.edge_count() > 0)
        throw std::invalid_argument("enumerate_embeddings: uniformity mismatch");
    EmbeddingEnumeration out;
    MapSearch s(pattern, host, node_budget);
    s.on_match = [](const std::vector<int>& m, void* u) {
        static_cast<EmbeddingEnumeration*>(u)->embeddings.push_back(m);
        return true;
    };
    s.user = &out;
    s.run();
    out.status = s.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::exact;
    out.nodes = s.nodes;
    std::sort(out.embeddings.begin(), out.embeddings.end());
    return out;
}

std::optional<Embedding> find_embedding(const Hypergraph& pattern, const Hypergraph& host,
                                        std::uint64_t node_budget, std::uint64_t* nodes_out,
                                        bool* budget_hit) {
    std::optional<Embedding> found;
    MapSearch s(pattern, host, node_budget);
    struct Ctx { std::optional<Embedding>* found; } ctx{&found};
    s.on_match = [](const std::vector<int>& m, void* u) {
        *static_cast<Ctx*>(u)->found = m;
        return false;  // stop at first
    };
    s.user = &ctx;
    s.run();
    if (nodes_out) *nodes_out = s.nodes;
    if (budget_hit) *budget_hit = s.budget_hit && !found;
    return found;
}

IsoReport iso(const Hypergraph& a, const Hypergraph& b, std::uint64_t node_budget) {
    IsoReport rep;
    if (a.uniformity() != b.uniformity() || a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count())
        return rep;
    if (a.degree_sequence() != b.degree_sequence()) return rep;
    auto [ca, cb] = refine_pair(a, b);
    {
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return rep;
    }
    MapSearch s(a, b, node_budget);
    s.pattern_colors = &ca;
    s.host_colors = &cb;
    std::optional<Embedding> found;
    struct Ctx { std::optional<Embedding>* found; } ctx{&found};
    s.on_match = [](const std::vector<int>& m, void* u) {
        *static_cast<Ctx*>(u)->found = m;
        return false;
    };
    s.user = &ctx;
    s.run();
    rep.nodes = s.nodes;
    if (found) {
        rep.is_isomorphic = true;
        rep.witness_map = *found;
    } else if (s.budget_hit) {
        rep.status = SearchStatus::budget_exceeded;
    }
    return rep;
}

AutReport aut_count_naive(const Hypergraph& a) {
    const int n = a.vertex_count();
    if (n < 1) throw std::invalid_argument("aut_count: hypergraph must be nonempty");
    if (n > 12) throw std::invalid_argument("aut_count_naive: limited to v <= 12");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    AutReport rep;
    do {
        ++rep.nodes;
        bool ok = true;
        for (const auto& e : a.edges()) {
            std::vector<int> img;
            img.reserve(e.size());
            for (int v : e) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            if (!a.has_edge(img)) { ok = false; break; }
        }
        if (ok) ++rep.count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rep;
}

AutReport aut_count(const Hypergraph& a, std::uint64_t node_budget) {
    const int n = a.vertex_count();
    if (n < 1) throw std::invalid_argument("aut_count: hypergraph must be nonempty");
    auto [ca, cb] = refine_pair(a, a);
    MapSearch s(a, a, node_budget);
    s.pattern_colors = &ca;
    s.host_colors = &cb;
    unsigned long long count = 0;
    s.on_match = [](const std::vector<int>&, void* u) {
        ++*static_cast<unsigned long long*>(u);
        return true;
    };
    s.user = &count;
    s.run();
    AutReport rep;
    rep.count = count;
    rep.nodes = s.nodes;
    rep.status = s.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::exact;
    return rep;
}

// --- small-graph class enumeration (k=2) ------------------------------------

namespace {

struct PermTables {
    // perm_pair[p][pairIdx] = image pair index under permutation p
    std::vector<std::vector<std::uint8_t>> perm_pair;
};

int pair_index(int i, int j, int n) {
    // lexicographic over i<j
    if (i > j) std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - 1 - a;
    return idx + (j - i - 1);
}

const PermTables& perm_tables(int n) {
    static std::mutex mu;
    static std::map<int, PermTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PermTables t;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint8_t> row(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                row[pair_index(i, j, n)] = (std::uint8_t)pair_index(perm[i], perm[j], n);
        t.perm_pair.push_back(std::move(row));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache.emplace(n, std::move(t)).first->second;
}

std::uint32_t graph_to_mask(const Hypergraph& g) {
    std::uint32_t m = 0;
    for (const auto& e : g.edges()) m |= 1u << pair_index(e[0], e[1], g.vertex_count());
    return m;
}

Hypergraph mask_to_graph(std::uint32_t mask, int n) {
    std::vector<std::vector<int>> edges;
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (mask & (1u << idx)) edges.push_back({i, j});
    return Hypergraph::from_edges(2, n, edges);
}

std::uint32_t canonical_mask(std::uint32_t mask, int n) {
    const auto& t = perm_tables(n);
    std::uint32_t best = UINT32_MAX;
    for (const auto& row : t.perm_pair) {
        std::uint32_t out = 0;
        std::uint32_t m = mask;
        while (m) {
            int p = __builtin_ctz(m);
            m &= m - 1;
            out |= 1u << row[p];
        }
        if (out < best) best = out;
    }
    return best;
}

}  // namespace

std::uint32_t canonical_graph_mask(const Hypergraph& g) {
    if (g.uniformity() != 2 || g.vertex_count() > 8)
        throw std::invalid_argument("canonical_graph_mask: needs k=2 and n <= 8");
    return canonical_mask(graph_to_mask(g), g.vertex_count());
}

std::vector<Hypergraph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("nonisomorphic_graphs: supported for 1 <= n <= 7");
    std::vector<std::uint32_t> classes = {0};  // single vertex, no edges
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<std::uint32_t> next;
        for (std::uint32_t base : classes) {
            // lift edges on m-1 vertices into the m-vertex pair indexing
            std::uint32_t lifted = 0;
            {
                std::uint32_t b = base;
                int idx = 0;
                for (int i = 0; i < m - 1; ++i)
                    for (int j = i + 1; j < m - 1; ++j, ++idx)
                        if (b & (1u << idx)) lifted |= 1u << pair_index(i, j, m);
            }
            for (std::uint32_t nb = 0; nb < (1u << (m - 1)); ++nb) {
                std::uint32_t cand = lifted;
                for (int i = 0; i < m - 1; ++i)
                    if (nb & (1u << i)) cand |= 1u << pair_index(i, m - 1, m);
                next.insert(canonical_mask(cand, m));
            }
        }
        classes.assign(next.begin(), next.end());
        std::sort(classes.begin(), classes.end());
    }
    std::vector<Hypergraph> out;
    out.reserve(classes.size());
    for (std::uint32_t m : classes) out.push_back(mask_to_graph(m, n));
    return out;
}

}  // namespace spreadlab

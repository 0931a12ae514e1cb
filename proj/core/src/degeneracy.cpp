#include "spreadlab/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "spreadlab/isomorphism.hpp"

namespace spreadlab {

namespace {

// Shared incremental state for DFS over vertex subsets in index order.
// Tracks, per edge, how many of its vertices are inside the current set.
struct SubsetDfs {
    const Hypergraph& h;
    std::vector<int> inside_count;   // per edge
    long long edges_inside = 0;      // edges fully inside
    std::vector<int> current;
    std::uint64_t nodes = 0;
    std::uint64_t budget;
    bool budget_hit = false;
    std::vector<long long> suffix_degree_sum;  // sum of deg(v), v >= t
    std::vector<int> suffix_max_degree;

    SubsetDfs(const Hypergraph& hg, std::uint64_t b) : h(hg), budget(b) {
        inside_count.assign(h.edge_count(), 0);
        const int n = h.vertex_count();
        suffix_degree_sum.assign(n + 1, 0);
        suffix_max_degree.assign(n + 1, 0);
        for (int v = n - 1; v >= 0; --v) {
            suffix_degree_sum[v] = suffix_degree_sum[v + 1] + h.degree(v);
            suffix_max_degree[v] = std::max(suffix_max_degree[v + 1], h.degree(v));
        }
    }

    void include(int v) {
        for (int idx : h.incident_edges(v))
            if (++inside_count[idx] == h.uniformity()) ++edges_inside;
        current.push_back(v);
    }
    void exclude(int v) {
        for (int idx : h.incident_edges(v))
            if (inside_count[idx]-- == h.uniformity()) --edges_inside;
        current.pop_back();
    }
};

}  // namespace

DensityReport density_mi(const Hypergraph& h, int i, std::uint64_t node_budget, int max_subset_size) {
    const int n = h.vertex_count();
    if (i < 1) throw std::invalid_argument("density_mi: i must be >= 1");
    const int cap = max_subset_size < 0 ? n : std::min(n, max_subset_size);
    if (cap <= i)
        throw std::invalid_argument("density_mi: no subset of size > i=" + std::to_string(i) +
                                    " within the audited window");
    DensityReport rep;
    rep.i = i;
    // ratios compared as fractions num/den, den = |U| - i
    long long best_num = -1, best_den = 1;
    std::vector<int> best_set;

    SubsetDfs dfs(h, node_budget);
    const long long m = h.edge_count();

    auto consider = [&]() {
        const int s = (int)dfs.current.size();
        if (s <= i) return;
        long long num = dfs.edges_inside, den = s - i;
        if (best_num < 0 || (__int128)num * best_den > (__int128)best_num * den) {
            best_num = num;
            best_den = den;
            best_set = dfs.current;
        }
    };

    // DFS over vertices t..n-1
    auto rec = [&](auto&& self, int t) -> void {
        if (dfs.budget_hit) return;
        consider();
        if (t == n || (int)dfs.current.size() == cap) return;
        // subtree bound: numerator can grow by at most the suffix degree sum
        if (best_num >= 0) {
            long long num_max = dfs.edges_inside + std::min(m - dfs.edges_inside, dfs.suffix_degree_sum[t]);
            long long den_min = std::max((int)dfs.current.size(), i + 1) - i;
            if ((__int128)num_max * best_den <= (__int128)best_num * den_min) return;
        }
        for (int v = t; v < n; ++v) {
            if (++dfs.nodes > dfs.budget) { dfs.budget_hit = true; return; }
            dfs.include(v);
            self(self, v + 1);
            dfs.exclude(v);
            if (dfs.budget_hit) return;
        }
    };
    rec(rec, 0);

    rep.value = Rational(std::max(best_num, 0LL), best_den);
    rep.witness = VertexSet::of(best_set);
    rep.nodes = dfs.nodes;
    rep.status = dfs.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::exact;
    return rep;
}

DegeneracyReport alpha_star(const Hypergraph& h, const Rational& d, const Rational& eps,
                            int u_min, std::uint64_t node_budget) {
    const int n = h.vertex_count();
    if (u_min < 1) throw std::invalid_argument("alpha_star: u_min must be >= 1");
    const long long cap_ll = rational_floor(eps * Rational(n)).num();
    const int cap = (int)std::min<long long>(cap_ll, n);
    if (u_min > cap)
        throw std::invalid_argument("alpha_star: empty window, u_min=" + std::to_string(u_min) +
                                    " exceeds floor(eps*n)=" + std::to_string(cap));
    // deficiency scaled by den(d): p*(|U|-1) - q*e(H[U])
    const long long p = d.num(), q = d.den();
    long long best = 0;
    bool have_best = false;
    std::vector<int> best_set;
    SubsetDfs dfs(h, node_budget);

    auto consider = [&]() {
        const int s = (int)dfs.current.size();
        if (s < u_min || s > cap) return;
        long long val = p * (s - 1) - q * dfs.edges_inside;
        if (!have_best || val < best) {
            have_best = true;
            best = val;
            best_set = dfs.current;
        }
    };

    auto rec = [&](auto&& self, int t) -> void {
        if (dfs.budget_hit) return;
        consider();
        if (t == n || (int)dfs.current.size() == cap) return;
        if (have_best) {
            // deficiency along the subtree is bounded below by the linear-in-s
            // relaxation with every new vertex closing at most Delta_suffix edges
            const int s0 = (int)dfs.current.size();
            const long long delta = dfs.suffix_max_degree[t];
            const int s_lo = std::max(s0, u_min), s_hi = cap;
            auto lower_at = [&](long long s) {
                return p * (s - 1) - q * (dfs.edges_inside + (s - s0) * delta);
            };
            if (std::min(lower_at(s_lo), lower_at(s_hi)) >= best) return;
        }
        for (int v = t; v < n; ++v) {
            if (++dfs.nodes > dfs.budget) { dfs.budget_hit = true; return; }
            dfs.include(v);
            self(self, v + 1);
            dfs.exclude(v);
            if (dfs.budget_hit) return;
        }
    };
    rec(rec, 0);

    DegeneracyReport rep;
    rep.alpha_star = Rational(best, q);
    rep.witness = VertexSet::of(best_set);
    rep.nodes = dfs.nodes;
    rep.status = dfs.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::exact;
    return rep;
}

DegeneracyReport certify_degenerate(const Hypergraph& h, const DegeneracyParams& params,
                                    std::uint64_t node_budget) {
    const int n = h.vertex_count();
    const long long cap = rational_floor(params.eps * Rational(n)).num();
    DegeneracyReport rep = alpha_star(h, params.d, params.eps, params.u_min, node_budget);
    DensityReport density = density_mi(h, 1, node_budget, (int)std::min<long long>(cap, n));
    rep.has_verdict = true;
    rep.m1 = density.value;
    rep.pass = (density.value <= params.d) && (rep.alpha_star >= params.alpha);
    if (density.value > params.d) rep.density_witness = density.witness;
    if (density.status == SearchStatus::budget_exceeded) rep.status = SearchStatus::budget_exceeded;
    return rep;
}

LocalSparsityReport locally_sparse_audit(const Hypergraph& h, int d, const Rational& eps,
                                         std::uint64_t node_budget) {
    if (h.uniformity() != 2)
        throw std::invalid_argument("locally_sparse_audit: defined for graphs (k=2)");
    if (d < 1) throw std::invalid_argument("locally_sparse_audit: d must be >= 1");
    const int n = h.vertex_count();
    const int cap = (int)std::min<long long>(rational_floor(eps * Rational(n)).num(), n);

    LocalSparsityReport rep;
    if (d > cap) {  // empty window: nothing to audit
        rep.pass = true;
        return rep;
    }
    long long boundary = 0;  // edges with exactly one endpoint inside
    std::vector<int> inside_count(h.edge_count(), 0);
    std::vector<int> current;
    long long best = -1;
    std::vector<int> best_set;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    auto include = [&](int v) {
        for (int idx : h.incident_edges(v)) {
            int c = ++inside_count[idx];
            if (c == 1) ++boundary;
            else if (c == 2) --boundary;
        }
        current.push_back(v);
    };
    auto exclude = [&](int v) {
        for (int idx : h.incident_edges(v)) {
            int c = inside_count[idx]--;
            if (c == 1) --boundary;
            else if (c == 2) ++boundary;
        }
        current.pop_back();
    };

    auto rec = [&](auto&& self, int t) -> void {
        if (budget_hit) return;
        const int s = (int)current.size();
        if (s >= d && s <= cap && (best < 0 || boundary < best)) {
            best = boundary;
            best_set = current;
        }
        if (t == n || s == cap) return;
        if ((int)current.size() + (n - t) < d) return;  // cannot reach the window
        for (int v = t; v < n; ++v) {
            if (++nodes > node_budget) { budget_hit = true; return; }
            include(v);
            self(self, v + 1);
            exclude(v);
            if (budget_hit) return;
        }
    };
    rec(rec, 0);

    rep.min_boundary = best;
    rep.witness = VertexSet::of(best_set);
    rep.pass = best < 0 || best >= (long long)d + 1;
    rep.nodes = nodes;
    rep.status = budget_hit ? SearchStatus::budget_exceeded : SearchStatus::exact;
    return rep;
}

ExpectationThresholdReport expectation_threshold(const Hypergraph& h, PeMode mode,
                                                 std::uint64_t subset_budget) {
    const int m = h.edge_count();
    if (m < 1) throw std::invalid_argument("expectation_threshold: hypergraph has no edges");
    if (m > 62) throw std::invalid_argument("expectation_threshold: too many edges to enumerate");
    const int n = h.vertex_count();

    struct ClassInfo {
        Hypergraph rep;
        double log_p;
    };
    // bucket by cheap invariants, isomorphism-check within buckets
    std::map<std::string, std::vector<int>> buckets;
    std::vector<ClassInfo> classes;

    ExpectationThresholdReport rep;
    rep.mode = mode;

    double best_log = -std::numeric_limits<double>::infinity();
    int best_class = -1;
    const std::uint64_t total = 1ULL << m;
    std::uint64_t enumerated = 0;

    for (std::uint64_t mask = 1; mask < total; ++mask) {
        if (++enumerated > subset_budget) { rep.status = SearchStatus::budget_exceeded; break; }
        // standalone subgraph spanned by the chosen edges
        std::vector<int> verts;
        std::vector<std::vector<int>> sub_edges;
        for (std::uint64_t mm = mask; mm; mm &= mm - 1) {
            const auto& e = h.edge(__builtin_ctzll(mm));
            sub_edges.push_back(e);
            verts.insert(verts.end(), e.begin(), e.end());
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> relabel(n, -1);
        for (int i = 0; i < (int)verts.size(); ++i) relabel[verts[i]] = i;
        for (auto& e : sub_edges)
            for (int& v : e) v = relabel[v];
        Hypergraph f = Hypergraph::from_edges(h.uniformity(), (int)verts.size(), sub_edges);

        std::string key = std::to_string(f.vertex_count()) + ":" + std::to_string(f.edge_count()) + ":";
        for (int dsv : f.degree_sequence()) key += std::to_string(dsv) + ",";

        int cls = -1;
        for (int idx : buckets[key])
            if (iso(classes[idx].rep, f).is_isomorphic) { cls = idx; break; }
        if (cls < 0) {
            auto aut = aut_count(f);
            const double log_aut = std::log((double)aut.count);
            const int v = f.vertex_count(), e = f.edge_count();
            double log_p;
            if (mode == PeMode::standard)
                log_p = (log_aut + std::lgamma(n - v + 1.0) - std::lgamma(n + 1.0)) / e;
            else
                log_p = (log_aut - std::lgamma(v + 1.0)) / e;
            cls = (int)classes.size();
            classes.push_back({std::move(f), log_p});
            buckets[key].push_back(cls);
        }
        if (classes[cls].log_p > best_log) {
            best_log = classes[cls].log_p;
            best_class = cls;
        }
    }
    if (best_class < 0) throw std::invalid_argument("expectation_threshold: subset budget too small");
    rep.value = std::exp(best_log);
    rep.witness = classes[best_class].rep;
    rep.subgraph_classes = classes.size();
    return rep;
}

}  // namespace spreadlab

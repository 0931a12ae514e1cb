#include "spreadlab/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spreadlab {

namespace {

std::string edge_str(const std::vector<int>& e) {
    std::string s = "{";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

}  // namespace

VertexSet VertexSet::of(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return VertexSet{std::move(v)};
}

bool VertexSet::contains(int v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

std::uint64_t VertexSet::mask() const {
    std::uint64_t m = 0;
    for (int v : verts) m |= 1ULL << v;
    return m;
}

std::string VertexSet::str() const { return edge_str(verts); }

Hypergraph Hypergraph::from_edges(int k, int n, const std::vector<std::vector<int>>& edges) {
    if (k < 2) throw std::invalid_argument("hypergraph: uniformity k must be >= 2, got " + std::to_string(k));
    if (n < 0) throw std::invalid_argument("hypergraph: vertex count must be >= 0");
    std::vector<std::vector<int>> normalized;
    normalized.reserve(edges.size());
    for (const auto& e : edges) {
        if ((int)e.size() != k)
            throw std::invalid_argument("hypergraph: edge " + edge_str(e) + " has " +
                                        std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
        std::vector<int> s(e);
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= n)
                throw std::invalid_argument("hypergraph: edge " + edge_str(e) + " has out-of-range vertex " +
                                            std::to_string(s[i]) + " (n=" + std::to_string(n) + ")");
            if (i > 0 && s[i] == s[i - 1])
                throw std::invalid_argument("hypergraph: edge " + edge_str(e) + " repeats vertex " +
                                            std::to_string(s[i]));
        }
        normalized.push_back(std::move(s));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    Hypergraph h;
    h.k_ = k;
    h.n_ = n;
    h.edges_ = std::move(normalized);
    h.incidence_.assign(n, {});
    for (int idx = 0; idx < (int)h.edges_.size(); ++idx)
        for (int v : h.edges_[idx]) h.incidence_[v].push_back(idx);
    h.max_degree_ = 0;
    for (int v = 0; v < n; ++v) h.max_degree_ = std::max(h.max_degree_, (int)h.incidence_[v].size());
    if (n <= 64) {
        h.masks_.reserve(h.edges_.size());
        for (const auto& e : h.edges_) {
            std::uint64_t m = 0;
            for (int v : e) m |= 1ULL << v;
            h.masks_.push_back(m);
        }
    }
    return h;
}

int Hypergraph::edge_index(const std::vector<int>& sorted_verts) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_verts);
    if (it != edges_.end() && *it == sorted_verts) return (int)(it - edges_.begin());
    return -1;
}

std::vector<int> Hypergraph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::vector<int>> components(const Hypergraph& h) {
    const int n = h.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : h.edges())
        for (size_t i = 1; i < e.size(); ++i) {
            int a = find(e[0]), b = find(e[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> parts(n);
    for (int v = 0; v < n; ++v) parts[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& p : parts)
        if (!p.empty()) out.push_back(std::move(p));
    return out;
}

Hypergraph induced(const Hypergraph& h, const VertexSet& u) {
    if (u.verts.empty()) throw std::invalid_argument("induced: vertex set must be nonempty");
    std::vector<int> relabel(h.vertex_count(), -1);
    for (int i = 0; i < (int)u.verts.size(); ++i) {
        int v = u.verts[i];
        if (v < 0 || v >= h.vertex_count())
            throw std::invalid_argument("induced: vertex " + std::to_string(v) + " out of range");
        relabel[v] = i;
    }
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        std::vector<int> img;
        img.reserve(e.size());
        bool inside = true;
        for (int v : e) {
            if (relabel[v] < 0) { inside = false; break; }
            img.push_back(relabel[v]);
        }
        if (inside) edges.push_back(std::move(img));
    }
    return Hypergraph::from_edges(h.uniformity(), (int)u.verts.size(), edges);
}

std::vector<int> edge_boundary(const Hypergraph& h, const VertexSet& u) {
    std::vector<int> out;
    for (int idx = 0; idx < h.edge_count(); ++idx) {
        int cnt = 0;
        for (int v : h.edge(idx))
            if (u.contains(v) && ++cnt > 1) break;
        if (cnt == 1) out.push_back(idx);
    }
    return out;
}

Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long k = -1, n = -1, m = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (k < 0) {
            if (!(ls >> k >> n >> m) || k < 2 || n < 0 || m < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected header 'k n m' with k >= 2");
            continue;
        }
        std::vector<int> e;
        long long v;
        while (ls >> v) e.push_back((int)v);
        if ((long long)e.size() != k)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(k) + " vertices, got " + std::to_string(e.size()));
        edges.push_back(std::move(e));
        if ((long long)edges.size() == m) break;
    }
    if (k < 0) throw std::invalid_argument("empty hypergraph file: missing 'k n m' header");
    if ((long long)edges.size() != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " edges, file has " +
                                    std::to_string(edges.size()));
    return Hypergraph::from_edges((int)k, (int)n, edges);
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open hypergraph file: " + path);
    try {
        return read_hypergraph(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_hypergraph(const Hypergraph& h, std::ostream& out,
                      const std::vector<std::string>& comment_lines) {
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    out << h.uniformity() << " " << h.vertex_count() << " " << h.edge_count() << "\n";
    for (const auto& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path,
                           const std::vector<std::string>& comment_lines) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    write_hypergraph(h, out, comment_lines);
}

}  // namespace spreadlab

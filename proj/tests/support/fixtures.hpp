#ifndef SPREADLAB_TESTS_FIXTURES_HPP
#define SPREADLAB_TESTS_FIXTURES_HPP

#include <vector>

#include "spreadlab/hypergraph.hpp"

namespace fixtures {

inline spreadlab::Hypergraph complete(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return spreadlab::Hypergraph::from_edges(2, n, edges);
}

inline spreadlab::Hypergraph complete_kuniform(int n, int k) {
    std::vector<std::vector<int>> edges;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        edges.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return spreadlab::Hypergraph::from_edges(k, n, edges);
}

inline spreadlab::Hypergraph cycle(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return spreadlab::Hypergraph::from_edges(2, n, edges);
}

inline spreadlab::Hypergraph path(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return spreadlab::Hypergraph::from_edges(2, n, edges);
}

inline spreadlab::Hypergraph matching(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 1 < n; i += 2) edges.push_back({i, i + 1});
    return spreadlab::Hypergraph::from_edges(2, n, edges);
}

/// Circulant graph on n vertices with the given offsets.
inline spreadlab::Hypergraph circulant(int n, const std::vector<int>& offsets) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int d : offsets)
            if (d * 2 != n || i < (i + d) % n)  // antipodal offsets once
                edges.push_back({i, (i + d) % n});
    return spreadlab::Hypergraph::from_edges(2, n, edges);
}

inline spreadlab::Hypergraph petersen() {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer cycle
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        edges.push_back({i, 5 + i});                // spokes
    }
    return spreadlab::Hypergraph::from_edges(2, 10, edges);
}

inline spreadlab::Hypergraph heawood() {
    // LCF [5,-5]^7: 3-regular, girth 6
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
    for (int i = 0; i < 7; ++i) edges.push_back({2 * i, (2 * i + 5) % 14});
    return spreadlab::Hypergraph::from_edges(2, 14, edges);
}

inline spreadlab::Hypergraph complete_bipartite(int a, int b) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return spreadlab::Hypergraph::from_edges(2, a + b, edges);
}

inline spreadlab::Hypergraph cube_q3() {
    std::vector<std::vector<int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) edges.push_back({v, v ^ (1 << b)});
    return spreadlab::Hypergraph::from_edges(2, 8, edges);
}

/// Prism over an m-cycle (circular ladder), 3-regular on 2m vertices.
inline spreadlab::Hypergraph prism(int m) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < m; ++i) {
        edges.push_back({i, (i + 1) % m});
        edges.push_back({m + i, m + (i + 1) % m});
        edges.push_back({i, m + i});
    }
    return spreadlab::Hypergraph::from_edges(2, 2 * m, edges);
}

}  // namespace fixtures

#endif

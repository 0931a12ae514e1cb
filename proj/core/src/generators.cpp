#include "spreadlab/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spreadlab/rng.hpp"

namespace spreadlab {

unsigned long long binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        // exact at every step: r * (n-k+i) is divisible by i
        r = r / i * (n - k + i) + r % i * (n - k + i) / i;
    }
    return r;
}

std::uint64_t kset_rank(const std::vector<int>& sorted_verts) {
    std::uint64_t rank = 0;
    for (size_t i = 0; i < sorted_verts.size(); ++i)
        rank += binomial((unsigned long long)sorted_verts[i], i + 1);
    return rank;
}

Hypergraph cycle_power(int n, int r) {
    if (r < 1) throw std::invalid_argument("cycle_power: r must be >= 1");
    if (n < 2 * r + 1)
        throw std::invalid_argument("cycle_power: need n >= 2r+1 (got n=" + std::to_string(n) +
                                    ", r=" + std::to_string(r) + ")");
    std::vector<std::vector<int>> edges;
    edges.reserve((size_t)n * r);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= r; ++d) edges.push_back({i, (i + d) % n});
    return Hypergraph::from_edges(2, n, edges);
}

Hypergraph tight_cycle_power(int n, int k, int r) {
    if (k < 2 || r < 1) throw std::invalid_argument("tight_cycle_power: need k >= 2 and r >= 1");
    const int window = k + r - 1;
    if (window >= n)
        throw std::invalid_argument("tight_cycle_power: window k+r-1=" + std::to_string(window) +
                                    " must be smaller than n=" + std::to_string(n));
    std::vector<std::vector<int>> edges;
    std::vector<int> pick(k);
    for (int start = 0; start < n; ++start) {
        // all k-subsets of {start, .., start+window-1} (cyclic)
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            for (int i = 0; i < k; ++i) pick[i] = (start + comb[i]) % n;
            edges.push_back(pick);
            int i = k - 1;
            while (i >= 0 && comb[i] == window - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return Hypergraph::from_edges(k, n, edges);
}

Hypergraph locally_sparse_regular(int n, int d) {
    if (d < 3) throw std::invalid_argument("locally_sparse_regular: d must be >= 3");
    if (n % d != 0)
        throw std::invalid_argument("locally_sparse_regular: d must divide n (d=" + std::to_string(d) +
                                    ", n=" + std::to_string(n) + ")");
    if (d % 2 == 1 && n % (2 * d) != 0)
        throw std::invalid_argument("locally_sparse_regular: odd d requires 2d | n (d=" +
                                    std::to_string(d) + ", n=" + std::to_string(n) + ")");
    if (n < 2 * d)
        throw std::invalid_argument("locally_sparse_regular: need n >= 2d so cross edges leave the clique");
    const int cliques = n / d;
    std::vector<std::vector<int>> edges;
    // disjoint d-cliques K_i on {(i-1)d, .., id-1} (0-based)
    for (int i = 0; i < cliques; ++i)
        for (int a = i * d; a < (i + 1) * d; ++a)
            for (int b = a + 1; b < (i + 1) * d; ++b) edges.push_back({a, b});
    if (d % 2 == 0) {
        // edges {(i-1)d + d/2 + j, id + j} for i in 1..n/d, j in 1..d/2, cyclic
        for (int i = 1; i <= cliques; ++i)
            for (int j = 1; j <= d / 2; ++j)
                edges.push_back({((i - 1) * d + d / 2 + j - 1) % n, (i * d + j - 1) % n});
    } else {
        // short edges {(i-1)d + (d-1)/2 + j, id + j}, j in 1..(d-1)/2,
        // plus long edges {(i-1)d + d, (n/2d + i - 1)d + d}; the long-edge
        // family generates each pair twice and dedup merges them.
        for (int i = 1; i <= cliques; ++i) {
            for (int j = 1; j <= (d - 1) / 2; ++j)
                edges.push_back({((i - 1) * d + (d - 1) / 2 + j - 1) % n, (i * d + j - 1) % n});
            edges.push_back({((i - 1) * d + d - 1) % n, ((n / (2 * d) + i - 1) * d + d - 1) % n});
        }
    }
    return Hypergraph::from_edges(2, n, edges);
}

Hypergraph random_d_degenerate(int n, int d, std::uint64_t seed) {
    if (d < 1 || n <= d)
        throw std::invalid_argument("random_d_degenerate: need n > d >= 1");
    SplitMix rng(derive_seed(seed, 0x646567656eULL));
    std::vector<std::vector<int>> edges;
    std::vector<int> chosen;
    for (int i = 1; i < n; ++i) {
        const int take = std::min(i, d);
        chosen.clear();
        while ((int)chosen.size() < take) {
            int c = (int)rng.below((std::uint64_t)i);
            if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
        }
        for (int c : chosen) edges.push_back({c, i});
    }
    return Hypergraph::from_edges(2, n, edges);
}

Hypergraph gnp(int n, int k, double p, std::uint64_t seed) {
    if (k < 2 || n < 0) throw std::invalid_argument("gnp: need k >= 2, n >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p must be in [0,1]");
    std::uint64_t stream = derive_seed(seed, 0x676e70ULL);
    std::vector<std::vector<int>> edges;
    if (n >= k && p > 0.0) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            if (p >= 1.0 || keyed_uniform(stream, kset_rank(comb)) < p) edges.push_back(comb);
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return Hypergraph::from_edges(k, n, edges);
}

}  // namespace spreadlab

#ifndef SPREADLAB_GENERATORS_HPP
#define SPREADLAB_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "spreadlab/hypergraph.hpp"

namespace spreadlab {

/// r-th power of the n-cycle: {i,j} is an edge iff the cyclic distance is
/// at most r. Requires n >= 2r+1 (n = 2r+1 yields the complete graph);
/// exactly r*n edges, 2r-regular.
Hypergraph cycle_power(int n, int r);

/// r-th power of the k-uniform tight cycle: all k-subsets of each cyclic
/// window of k+r-1 consecutive vertices. r=1 recovers the tight cycle;
/// k=2 recovers cycle_power. Requires window < n, i.e. n >= k+r.
/// Edge count equals n*binom(r+k-2, k-1) once n >= 2k+2r-3.
Hypergraph tight_cycle_power(int n, int k, int r);

/// The d-regular witness construction: n/d disjoint d-cliques joined by
/// cross edges so every clique has edge boundary exactly d. Requires d >= 3,
/// d | n and n >= 2d; odd d additionally requires 2d | n.
Hypergraph locally_sparse_regular(int n, int d);

/// Vertex i >= 1 picks min(i, d) uniformly random earlier neighbors without
/// replacement; output is d-degenerate by construction and deterministic
/// per seed.
Hypergraph random_d_degenerate(int n, int d, std::uint64_t seed);

/// Binomial random hypergraph: every k-set is an edge independently with
/// probability p, keyed by (seed, colex rank of the k-set) so disjoint seeds
/// give independent streams and a fixed seed is reproducible anywhere.
Hypergraph gnp(int n, int k, double p, std::uint64_t seed);

/// Colex rank of a sorted k-set among all k-subsets of 0..n-1.
std::uint64_t kset_rank(const std::vector<int>& sorted_verts);

unsigned long long binomial(unsigned long long n, unsigned long long k);

}  // namespace spreadlab

#endif

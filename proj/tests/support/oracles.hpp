#ifndef SPREADLAB_TESTS_ORACLES_HPP
#define SPREADLAB_TESTS_ORACLES_HPP

// Independent brute-force oracles. These deliberately share no code with the
// library search paths they validate: plain bitmask enumeration, no pruning.

#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/rational.hpp"

namespace oracles {

inline long long edges_inside(const spreadlab::Hypergraph& h, std::uint64_t mask) {
    long long cnt = 0;
    for (int idx = 0; idx < h.edge_count(); ++idx)
        if ((h.edge_mask(idx) & mask) == h.edge_mask(idx)) ++cnt;
    return cnt;
}

inline spreadlab::Rational density_unpruned(const spreadlab::Hypergraph& h, int i,
                                            int max_size = -1) {
    const int n = h.vertex_count();
    const int cap = max_size < 0 ? n : max_size;
    spreadlab::Rational best(0);
    bool have = false;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        int s = __builtin_popcountll(mask);
        if (s <= i || s > cap) continue;
        spreadlab::Rational val(edges_inside(h, mask), s - i);
        if (!have || val > best) { best = val; have = true; }
    }
    return best;
}

inline spreadlab::Rational alpha_star_unpruned(const spreadlab::Hypergraph& h,
                                               const spreadlab::Rational& d, int u_min, int cap) {
    const int n = h.vertex_count();
    spreadlab::Rational best(0);
    bool have = false;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        int s = __builtin_popcountll(mask);
        if (s < u_min || s > cap) continue;
        spreadlab::Rational val = d * spreadlab::Rational(s - 1) - spreadlab::Rational(edges_inside(h, mask));
        if (!have || val < best) { best = val; have = true; }
    }
    return best;
}

inline long long min_boundary_unpruned(const spreadlab::Hypergraph& h, int d, int cap) {
    const int n = h.vertex_count();
    long long best = -1;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        int s = __builtin_popcountll(mask);
        if (s < d || s > cap) continue;
        long long boundary = 0;
        for (int idx = 0; idx < h.edge_count(); ++idx)
            if (__builtin_popcountll(h.edge_mask(idx) & mask) == 1) ++boundary;
        if (best < 0 || boundary < best) best = boundary;
    }
    return best;
}

}  // namespace oracles

#endif

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

#include "spreadlab/generators.hpp"
#include "spreadlab/isomorphism.hpp"
#include "support/fixtures.hpp"

using namespace spreadlab;

TEST_CASE("cycle powers") {
    Hypergraph c5 = cycle_power(5, 1);
    CHECK(c5.edge_count() == 5);
    CHECK(iso(c5, fixtures::cycle(5)).is_isomorphic);

    Hypergraph c82 = cycle_power(8, 2);
    CHECK(c82.edge_count() == 16);
    for (int v = 0; v < 8; ++v) CHECK(c82.degree(v) == 4);

    // n = 2r+1 is the complete-graph boundary case, still valid
    Hypergraph c73 = cycle_power(7, 3);
    CHECK(c73.edge_count() == 21);
    CHECK(iso(c73, fixtures::complete(7)).is_isomorphic);

    CHECK_THROWS_AS(cycle_power(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(cycle_power(4, 2), std::invalid_argument);
}

TEST_CASE("cycle powers are vertex-transitive") {
    for (auto [n, r] : {std::pair{6, 1}, {8, 2}, {9, 2}, {10, 3}}) {
        auto rep = aut_count(cycle_power(n, r));
        REQUIRE(rep.status == SearchStatus::exact);
        CHECK(rep.count >= (unsigned long long)(2 * n));
    }
}

TEST_CASE("tight cycle powers") {
    Hypergraph t1 = tight_cycle_power(6, 3, 1);
    CHECK(t1.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(t1.degree(v) == 3);

    CHECK(tight_cycle_power(8, 3, 2).edge_count() == 8 * binomial(3, 2));

    // k=2 specialization matches the graph cycle power edge-for-edge
    for (auto [n, r] : {std::pair{7, 2}, {9, 3}, {10, 2}})
        CHECK(tight_cycle_power(n, 2, r) == cycle_power(n, r));

    CHECK_THROWS_AS(tight_cycle_power(4, 3, 2), std::invalid_argument);  // window >= n

    // per-vertex window count formula, valid once anchors are unique
    for (int k = 2; k <= 4; ++k)
        for (int r = 1; r <= 3; ++r)
            for (int n = 2 * k + 2 * r - 3; n <= 2 * k + 2 * r + 2; ++n)
                CHECK(tight_cycle_power(n, k, r).edge_count() ==
                      (int)(n * binomial(k + r - 2, k - 1)));
}

TEST_CASE("locally sparse regular construction, even degree") {
    Hypergraph g = locally_sparse_regular(8, 4);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 4);
    // two 4-cliques plus the four cross edges
    for (auto e : {std::vector<int>{2, 4}, {3, 5}, {0, 6}, {1, 7}}) CHECK(g.has_edge(e));
    CHECK(g.has_edge({0, 1}));
    CHECK(g.has_edge({4, 7}));
    CHECK(g.edge_count() == 2 * 6 + 4);
}

TEST_CASE("locally sparse regular construction, odd degree") {
    Hypergraph g = locally_sparse_regular(12, 3);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 3);
    // long edges pair clique i with clique i+2 (duplicates merged)
    CHECK(g.has_edge({2, 8}));
    CHECK(g.has_edge({5, 11}));
    CHECK(g.edge_count() == 4 * 3 + 4 + 2);
}

TEST_CASE("locally sparse regular is d-regular across the desk range") {
    for (int d = 3; d <= 8; ++d)
        for (int n = 2 * d; n <= 48; n += d) {
            if (d % 2 == 1 && n % (2 * d) != 0) continue;
            Hypergraph g = locally_sparse_regular(n, d);
            for (int v = 0; v < n; ++v) REQUIRE(g.degree(v) == d);
        }
}

TEST_CASE("locally sparse regular rejects bad divisibility") {
    CHECK_THROWS_WITH_AS(locally_sparse_regular(10, 4), doctest::Contains("divide"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(locally_sparse_regular(9, 3), doctest::Contains("2d | n"),
                         std::invalid_argument);
    CHECK_THROWS_AS(locally_sparse_regular(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(locally_sparse_regular(12, 2), std::invalid_argument);
}

TEST_CASE("random d-degenerate generator") {
    CHECK(random_d_degenerate(9, 2, 11) == random_d_degenerate(9, 2, 11));
    CHECK_FALSE(random_d_degenerate(9, 2, 11) == random_d_degenerate(9, 2, 12));

    Hypergraph tree = random_d_degenerate(5, 1, 3);
    CHECK(tree.edge_count() == 4);
    CHECK(components(tree).size() == 1);

    // e = sum_i min(i, d)
    CHECK(random_d_degenerate(6, 2, 1).edge_count() == 1 + 2 + 2 + 2 + 2);

    // elimination ordering with back-degree <= d exists: peel minimum degrees
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Hypergraph g = random_d_degenerate(10, 3, seed);
        std::vector<int> deg(10);
        std::vector<char> gone(10, 0);
        for (int v = 0; v < 10; ++v) deg[v] = g.degree(v);
        for (int round = 0; round < 10; ++round) {
            int best = -1;
            for (int v = 0; v < 10; ++v)
                if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
            REQUIRE(deg[best] <= 3);
            gone[best] = 1;
            for (int idx : g.incident_edges(best)) {
                int other = g.edge(idx)[0] == best ? g.edge(idx)[1] : g.edge(idx)[0];
                if (!gone[other]) --deg[other];
            }
        }
    }
}

TEST_CASE("gnp boundary cases and determinism") {
    CHECK(gnp(6, 2, 0.0, 1).edge_count() == 0);
    CHECK(gnp(6, 2, 1.0, 1).edge_count() == 15);
    CHECK(gnp(6, 3, 1.0, 1).edge_count() == (int)binomial(6, 3));
    CHECK(gnp(12, 2, 0.37, 99) == gnp(12, 2, 0.37, 99));
    CHECK_FALSE(gnp(12, 2, 0.37, 99) == gnp(12, 2, 0.37, 100));
}

TEST_CASE("gnp edge counts concentrate around the mean") {
    double total = 0;
    const int seeds = 200;
    for (std::uint64_t s = 1; s <= seeds; ++s) total += gnp(20, 2, 0.5, s).edge_count();
    const double mean = total / seeds;
    const double sigma = std::sqrt(190 * 0.25);
    CHECK(std::abs(mean - 95.0) <= 3 * sigma / std::sqrt((double)seeds));
}

TEST_CASE("gnp indicators look independent across k-sets") {
    // chi-square on the joint occurrence of two fixed pairs over seeds
    int counts[2][2] = {{0, 0}, {0, 0}};
    const int seeds = 4000;
    for (std::uint64_t s = 1; s <= seeds; ++s) {
        Hypergraph g = gnp(10, 2, 0.5, s);
        int a = g.has_edge({0, 1}) ? 1 : 0;
        int b = g.has_edge({5, 7}) ? 1 : 0;
        ++counts[a][b];
    }
    double chi2 = 0;
    int ra = counts[1][0] + counts[1][1], rb = counts[0][1] + counts[1][1];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double pa = a ? (double)ra / seeds : 1.0 - (double)ra / seeds;
            double pb = b ? (double)rb / seeds : 1.0 - (double)rb / seeds;
            double expect = pa * pb * seeds;
            chi2 += (counts[a][b] - expect) * (counts[a][b] - expect) / expect;
        }
    CHECK(chi2 < 11.0);  // df=1; generous fixed-seed threshold
}

TEST_CASE("kset rank is a colex bijection") {
    std::set<std::uint64_t> ranks;
    std::vector<int> comb(3);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) ranks.insert(kset_rank({a, b, c}));
    CHECK(ranks.size() == binomial(7, 3));
    CHECK(*ranks.begin() == 0);
    CHECK(*ranks.rbegin() == binomial(7, 3) - 1);
}

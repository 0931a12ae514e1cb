#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "spreadlab/generators.hpp"
#include "spreadlab/isomorphism.hpp"
#include "support/fixtures.hpp"

using namespace spreadlab;

TEST_CASE("automorphism counts of named graphs") {
    CHECK(aut_count(fixtures::complete(3)).count == 6);
    CHECK(aut_count(fixtures::cycle(5)).count == 10);
    CHECK(aut_count(fixtures::path(4)).count == 2);
    CHECK(aut_count(fixtures::complete(4)).count == 24);
    CHECK(aut_count(fixtures::petersen()).count == 120);
    CHECK(aut_count(fixtures::complete_bipartite(3, 3)).count == 72);
    CHECK(aut_count(Hypergraph::from_edges(2, 1, {})).count == 1);
}

TEST_CASE("refined aut count agrees with the naive oracle") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            auto fast = aut_count(g);
            auto naive = aut_count_naive(g);
            REQUIRE(fast.status == SearchStatus::exact);
            CHECK(fast.count == naive.count);
        }
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Hypergraph h = gnp(6, 3, 0.35, seed);
        CHECK(aut_count(h).count == aut_count_naive(h).count);
    }
}

TEST_CASE("aut count divides v!") {
    for (const auto& g : nonisomorphic_graphs(5)) {
        unsigned long long fact = 120;
        CHECK(fact % aut_count(g).count == 0);
    }
}

TEST_CASE("aut search signals budget exhaustion instead of guessing") {
    auto rep = aut_count(fixtures::complete(12), 1000);
    CHECK(rep.status == SearchStatus::budget_exceeded);
}

TEST_CASE("isomorphism with witness") {
    Hypergraph a = fixtures::cycle(5);
    Hypergraph b = Hypergraph::from_edges(2, 5, {{2, 4}, {4, 1}, {1, 3}, {3, 0}, {0, 2}});
    IsoReport rep = iso(a, b);
    REQUIRE(rep.is_isomorphic);
    REQUIRE(rep.witness_map.has_value());
    // witness maps edges onto edges bijectively
    CHECK(is_valid_embedding(a, b, *rep.witness_map));

    // same degree sequence, different structure
    Hypergraph two_triangles =
        Hypergraph::from_edges(2, 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(iso(fixtures::cycle(6), two_triangles).is_isomorphic);
    CHECK_FALSE(iso(fixtures::complete_bipartite(3, 3), fixtures::prism(3)).is_isomorphic);
    CHECK_FALSE(iso(fixtures::cycle(5), fixtures::cycle(6)).is_isomorphic);
}

TEST_CASE("isomorphism behaves as an equivalence relation on a seeded corpus") {
    std::vector<Hypergraph> corpus;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) corpus.push_back(gnp(6, 2, 0.45, seed));
    // three relabelings of the same seed
    Hypergraph base = corpus[0];
    std::vector<int> perm1{3, 0, 5, 1, 4, 2}, perm2{5, 4, 3, 2, 1, 0};
    auto relabel = [](const Hypergraph& h, const std::vector<int>& p) {
        std::vector<std::vector<int>> edges;
        for (const auto& e : h.edges()) edges.push_back({p[e[0]], p[e[1]]});
        return Hypergraph::from_edges(2, h.vertex_count(), edges);
    };
    Hypergraph a = relabel(base, perm1), b = relabel(base, perm2);
    CHECK(iso(base, base).is_isomorphic);  // reflexive
    CHECK(iso(base, a).is_isomorphic == iso(a, base).is_isomorphic);  // symmetric
    REQUIRE(iso(base, a).is_isomorphic);
    REQUIRE(iso(a, b).is_isomorphic);
    CHECK(iso(base, b).is_isomorphic);  // transitive
    for (const auto& g1 : corpus)
        for (const auto& g2 : corpus)
            CHECK(iso(g1, g2).is_isomorphic == iso(g2, g1).is_isomorphic);
}

TEST_CASE("component count is invariant under iso witness relabeling") {
    Hypergraph a = Hypergraph::from_edges(2, 7, {{0, 1}, {2, 3}, {3, 4}, {5, 6}});
    Hypergraph b = Hypergraph::from_edges(2, 7, {{6, 5}, {0, 2}, {2, 4}, {1, 3}});
    IsoReport rep = iso(a, b);
    REQUIRE(rep.is_isomorphic);
    CHECK(components(a).size() == components(b).size());
}

TEST_CASE("nonisomorphic graph counts match the classical sequence") {
    CHECK(nonisomorphic_graphs(1).size() == 1);
    CHECK(nonisomorphic_graphs(2).size() == 2);
    CHECK(nonisomorphic_graphs(3).size() == 4);
    CHECK(nonisomorphic_graphs(4).size() == 11);
    CHECK(nonisomorphic_graphs(5).size() == 34);
    CHECK(nonisomorphic_graphs(6).size() == 156);
}

TEST_CASE("embedding enumeration") {
    auto single_edge = Hypergraph::from_edges(2, 2, {{0, 1}});
    CHECK(enumerate_embeddings(single_edge, fixtures::complete(3)).embeddings.size() == 6);

    auto c4_in_k4 = enumerate_embeddings(fixtures::cycle(4), fixtures::complete(4));
    CHECK(c4_in_k4.embeddings.size() == 24);
    // cross-check: copies x automorphisms
    CHECK(c4_in_k4.embeddings.size() == 3 * aut_count(fixtures::cycle(4)).count);

    CHECK(enumerate_embeddings(fixtures::complete(3), fixtures::cycle(5)).embeddings.empty());

    for (const auto& m : c4_in_k4.embeddings)
        CHECK(is_valid_embedding(fixtures::cycle(4), fixtures::complete(4), m));
}

TEST_CASE("embedding enumeration honors its budget") {
    auto en = enumerate_embeddings(fixtures::path(6), fixtures::complete(8), 50);
    CHECK(en.status == SearchStatus::budget_exceeded);

    std::uint64_t nodes = 0;
    bool budget_hit = false;
    auto found = find_embedding(fixtures::cycle(8), fixtures::complete(8), 4, &nodes, &budget_hit);
    CHECK((found.has_value() || budget_hit));
}

TEST_CASE("3-uniform embeddings") {
    Hypergraph tight6 = tight_cycle_power(6, 3, 1);
    auto self_embeds = enumerate_embeddings(tight6, tight6);
    CHECK(self_embeds.embeddings.size() == aut_count(tight6).count);
    CHECK(aut_count(tight6).count == 12);  // dihedral
}

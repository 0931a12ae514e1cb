#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "spreadlab/generators.hpp"
#include "spreadlab/isomorphism.hpp"
#include "spreadlab/rng.hpp"
#include "spreadlab/threshold.hpp"
#include "support/fixtures.hpp"

using namespace spreadlab;

namespace {

// independent oracle: maximum matching by brute-force edge-subset search
int brute_max_matching(const Hypergraph& g) {
    int best = 0;
    const int m = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::uint64_t used = 0;
        bool ok = true;
        int size = 0;
        for (int i = 0; i < m && ok; ++i)
            if (mask & (1u << i)) {
                std::uint64_t em = g.edge_mask(i);
                if (used & em) ok = false;
                used |= em;
                ++size;
            }
        if (ok) best = std::max(best, size);
    }
    return best;
}

}  // namespace

TEST_CASE("blossom matching on named graphs") {
    CHECK(max_matching_size(fixtures::complete(4)) == 2);
    CHECK(max_matching_size(fixtures::cycle(5)) == 2);
    CHECK(max_matching_size(fixtures::petersen()) == 5);
    CHECK(max_matching_size(fixtures::path(7)) == 3);
    CHECK(max_matching_size(fixtures::complete_bipartite(1, 5)) == 1);
    Hypergraph two_triangles =
        Hypergraph::from_edges(2, 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(max_matching_size(two_triangles) == 2);
}

TEST_CASE("blossom matching agrees with brute force on every small graph class") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n))
            CHECK(max_matching_size(g) == brute_max_matching(g));
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Hypergraph g = gnp(9, 2, 0.35, seed);
        CHECK(max_matching_size(g) == brute_max_matching(g));
    }
}

TEST_CASE("pattern classification") {
    CHECK(is_perfect_matching_pattern(fixtures::matching(6)));
    CHECK_FALSE(is_perfect_matching_pattern(fixtures::path(4)));
    CHECK_FALSE(is_perfect_matching_pattern(fixtures::matching(5)));  // isolated vertex

    TargetSpec tf = TargetSpec::parse("clique_factor:d=3");
    CHECK(clique_factor_size(make_target(tf, 9)) == 3);
    CHECK(clique_factor_size(fixtures::matching(6)) == 0);
    CHECK(clique_factor_size(fixtures::path(4)) == 0);
}

TEST_CASE("contains_spanning basics") {
    CHECK(contains_spanning(fixtures::complete(6), fixtures::matching(6)).outcome ==
          Containment::contained);
    Hypergraph empty6 = Hypergraph::from_edges(2, 6, {});
    CHECK(contains_spanning(empty6, fixtures::matching(6)).outcome == Containment::not_contained);
    // triangle-free host cannot hold a triangle factor
    auto triangles = make_target(TargetSpec::parse("clique_factor:d=3"), 6);
    CHECK(contains_spanning(fixtures::complete_bipartite(3, 3), triangles).outcome ==
          Containment::not_contained);
    CHECK(contains_spanning(fixtures::complete(6), triangles).outcome == Containment::contained);
}

TEST_CASE("the regular witness construction carries its clique factor") {
    for (auto [n, d] : {std::pair{8, 4}, {12, 3}, {12, 4}, {24, 3}}) {
        Hypergraph g = locally_sparse_regular(n, d);
        Hypergraph factor = make_target(TargetSpec::parse("clique_factor:d=" + std::to_string(d)), n);
        CHECK(contains_spanning(g, factor).outcome == Containment::contained);
    }
}

TEST_CASE("specialized engines agree with the generic search") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        int n = 8 + 2 * (int)(seed % 3);
        double p = 0.15 + 0.1 * (double)(seed % 7);
        Hypergraph host = gnp(n, 2, p, seed);
        Hypergraph pattern = fixtures::matching(n);
        auto fast = contains_spanning(host, pattern);
        auto generic = contains_spanning(host, pattern, 50'000'000, /*force_generic=*/true);
        if (generic.outcome == Containment::timeout) continue;
        REQUIRE(fast.outcome == generic.outcome);
        ++checked;
    }
    CHECK(checked >= 450);

    checked = 0;
    auto triangle_factor_6 = make_target(TargetSpec::parse("clique_factor:d=3"), 6);
    auto triangle_factor_9 = make_target(TargetSpec::parse("clique_factor:d=3"), 9);
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        int n = seed % 2 ? 6 : 9;
        double p = 0.35 + 0.1 * (double)(seed % 5);
        Hypergraph host = gnp(n, 2, p, derive_seed(9, seed));
        const Hypergraph& pattern = n == 6 ? triangle_factor_6 : triangle_factor_9;
        auto fast = contains_spanning(host, pattern);
        auto generic = contains_spanning(host, pattern, 50'000'000, true);
        if (generic.outcome == Containment::timeout || fast.outcome == Containment::timeout) continue;
        REQUIRE(fast.outcome == generic.outcome);
        ++checked;
    }
    CHECK(checked >= 450);
}

TEST_CASE("containment probability endpoints") {
    ExperimentConfig cfg;
    cfg.target = TargetSpec::parse("matching");
    cfg.n = 6;
    cfg.trials = 100;
    cfg.master_seed = 5;
    cfg.p = 1.0;
    CHECK(containment_probability(cfg).p_hat == doctest::Approx(1.0));
    cfg.target = TargetSpec::parse("clique_factor:d=3");
    cfg.p = 0.0;
    CHECK(containment_probability(cfg).p_hat == doctest::Approx(0.0));
}

TEST_CASE("trial records replay bit-for-bit") {
    ExperimentConfig cfg;
    cfg.target = TargetSpec::parse("matching");
    cfg.n = 8;
    cfg.trials = 64;
    cfg.master_seed = 77;
    cfg.p = 0.3;
    std::vector<TrialRecord> a, b;
    containment_probability(cfg, &a);
    cfg.workers = 4;  // parallelism must not change the stream
    containment_probability(cfg, &b);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].outcome == b[i].outcome);
        CHECK(a[i].nodes == b[i].nodes);
        CHECK(a[i].config_hash == b[i].config_hash);
        // replaying a single trial from its recorded seed reproduces it
        Hypergraph host = gnp(cfg.n, 2, cfg.p, a[i].seed);
        CHECK(contains_spanning(host, fixtures::matching(8), cfg.node_budget).outcome == a[i].outcome);
    }
}

TEST_CASE("monte carlo matches exhaustive enumeration at p = 1/2") {
    // exact: fraction of the 2^15 labeled 6-vertex graphs with a perfect matching
    long long contained = 0;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        std::vector<std::vector<int>> edges;
        int idx = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j, ++idx)
                if (mask & (1u << idx)) edges.push_back({i, j});
        Hypergraph h = Hypergraph::from_edges(2, 6, edges);
        if (max_matching_size(h) == 3) ++contained;
    }
    const double exact = (double)contained / (1u << 15);

    ExperimentConfig cfg;
    cfg.target = TargetSpec::parse("matching");
    cfg.n = 6;
    cfg.trials = 4000;
    cfg.master_seed = 13;
    cfg.p = 0.5;
    auto est = containment_probability(cfg);
    const double width = est.ci_hi - est.ci_lo;
    CHECK(std::abs(est.p_hat - exact) <= 3 * width);
}

TEST_CASE("threshold bisection") {
    ExperimentConfig cfg;
    cfg.target = TargetSpec::parse("matching");
    cfg.n = 8;
    cfg.trials = 600;
    cfg.master_seed = 3;
    auto est = threshold_bisect(cfg);
    CHECK(est.converged);
    CHECK(est.p_half > 0.0);
    CHECK(est.p_half < 1.0);
    CHECK(est.timeout_fraction == 0.0);

    auto again = threshold_bisect(cfg);
    CHECK(again.p_half == est.p_half);
    CHECK(again.trials_used == est.trials_used);

    // monotone consistency around the crossing
    double delta = std::max(0.08, 2 * (est.ci_hi - est.ci_lo));
    ExperimentConfig lo_cfg = cfg, hi_cfg = cfg;
    lo_cfg.p = std::max(0.01, est.p_half - delta);
    hi_cfg.p = std::min(0.99, est.p_half + delta);
    lo_cfg.trials = hi_cfg.trials = 1500;
    auto lo = containment_probability(lo_cfg);
    auto hi = containment_probability(hi_cfg);
    CHECK(lo.p_hat < hi.p_hat);
}

TEST_CASE("containment probability is monotone in p up to CI slack") {
    ExperimentConfig cfg;
    cfg.target = TargetSpec::parse("matching");
    cfg.n = 8;
    cfg.trials = 800;
    cfg.master_seed = 21;
    double prev_hat = 0.0, prev_width = 0.0;
    bool first = true;
    for (double p : {0.1, 0.25, 0.4, 0.55, 0.7, 0.85}) {
        cfg.p = p;
        auto est = containment_probability(cfg);
        double width = est.ci_hi - est.ci_lo;
        if (!first) CHECK(est.p_hat >= prev_hat - (width + prev_width));
        first = false;
        prev_hat = est.p_hat;
        prev_width = width;
    }
}

TEST_CASE("exponent fit") {
    auto exact = exponent_fit({{8, std::pow(8, -0.5)}, {16, std::pow(16, -0.5)}, {32, std::pow(32, -0.5)}});
    CHECK(exact.slope == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(exact.residual_rms == doctest::Approx(0.0).epsilon(1e-12));

    auto rounded = exponent_fit({{8, 0.354}, {16, 0.25}, {32, 0.177}});
    CHECK(rounded.slope == doctest::Approx(-0.5).epsilon(0.01));

    CHECK_THROWS_AS(exponent_fit({{8, 0.5}, {16, 0.4}}), std::invalid_argument);
    CHECK_THROWS_AS(exponent_fit({{8, 0.5}, {8, 0.4}, {8, 0.3}}), std::invalid_argument);
}

TEST_CASE("target parsing") {
    CHECK(TargetSpec::parse("matching").str() == "matching");
    CHECK(TargetSpec::parse("cycle_power:r=2").r == 2);
    CHECK(TargetSpec::parse("tight_cycle_power:k=3,r=2").k == 3);
    CHECK_THROWS_AS(TargetSpec::parse("squares"), std::invalid_argument);
    CHECK_THROWS_AS(make_target(TargetSpec::parse("matching"), 7), std::invalid_argument);
    CHECK_THROWS_AS(make_target(TargetSpec::parse("clique_factor:d=3"), 8), std::invalid_argument);
    CHECK(make_target(TargetSpec::parse("cycle_power:r=2"), 8).edge_count() == 16);
    CHECK(make_target(TargetSpec::parse("locally_sparse_regular:d=4"), 8).max_degree() == 4);
    CHECK(make_target(TargetSpec::parse("d_degenerate_random:d=2,seed=5"), 9) ==
          random_d_degenerate(9, 2, 5));
}

TEST_CASE("wilson interval sanity") {
    double lo, hi;
    wilson_ci(0, 100, &lo, &hi);
    CHECK(lo == 0.0);
    CHECK(hi < 0.05);
    wilson_ci(50, 100, &lo, &hi);
    CHECK(lo == doctest::Approx(0.402).epsilon(0.01));
    CHECK(hi == doctest::Approx(0.598).epsilon(0.01));
    wilson_ci(100, 100, &lo, &hi);
    CHECK(hi == 1.0);
    CHECK(lo > 0.95);
}

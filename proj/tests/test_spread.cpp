#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "spreadlab/generators.hpp"
#include "spreadlab/spread.hpp"
#include "support/fixtures.hpp"

using namespace spreadlab;

namespace {

Hypergraph single_edge_pattern() { return Hypergraph::from_edges(2, 2, {{0, 1}}); }

CopyDistribution point_mass_on_first_copy(const CopyDistribution& d) {
    CopyDistribution out;
    out.host = d.host;
    out.support = {d.support.front()};
    out.prob = {Rational(1)};
    out.r0 = (int)d.support.front().size();
    return out;
}

unsigned long long double_factorial(int n) {
    unsigned long long r = 1;
    for (int i = n; i >= 2; i -= 2) r *= i;
    return r;
}

}  // namespace

TEST_CASE("uniform embedding distribution") {
    auto d = uniform_embedding_distribution(single_edge_pattern(), fixtures::complete(3));
    CHECK(d.support.size() == 6);
    CHECK(d.prob[0] == Rational(1, 6));
    d.validate();

    CHECK_THROWS_AS(uniform_embedding_distribution(fixtures::complete(3), fixtures::cycle(5)),
                    std::invalid_argument);
}

TEST_CASE("pushforward onto copies") {
    auto edge_copies = pushforward_copies(
        uniform_embedding_distribution(single_edge_pattern(), fixtures::complete(4)));
    CHECK(edge_copies.support.size() == 6);
    for (const auto& p : edge_copies.prob) CHECK(p == Rational(1, 6));
    CHECK(edge_copies.r0 == 1);

    auto matchings = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(4), fixtures::complete(4)));
    CHECK(matchings.support.size() == 3);
    for (const auto& p : matchings.prob) CHECK(p == Rational(1, 3));
    CHECK(matchings.r0 == 2);
}

TEST_CASE("pushforward consistency: copy events equal embedding events") {
    auto dist = uniform_embedding_distribution(fixtures::matching(4), fixtures::complete(4));
    auto copies = pushforward_copies(dist);
    const auto& host = dist.host;
    // mu'(S subset A) must equal mu(psi(G) superset S) for every S
    for (std::uint32_t mask = 1; mask < (1u << host.edge_count()); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < host.edge_count(); ++i)
            if (mask & (1u << i)) s.push_back(i);
        Rational from_copies(0);
        for (size_t i = 0; i < copies.support.size(); ++i)
            if (std::includes(copies.support[i].begin(), copies.support[i].end(), s.begin(), s.end()))
                from_copies += copies.prob[i];
        Rational from_embeddings(0);
        for (size_t i = 0; i < dist.support.size(); ++i) {
            std::vector<int> image;
            std::vector<int> img;
            for (const auto& e : dist.pattern.edges()) {
                img = {dist.support[i][e[0]], dist.support[i][e[1]]};
                if (img[0] > img[1]) std::swap(img[0], img[1]);
                image.push_back(host.edge_index(img));
            }
            std::sort(image.begin(), image.end());
            if (std::includes(image.begin(), image.end(), s.begin(), s.end()))
                from_embeddings += dist.prob[i];
        }
        CHECK(from_copies == from_embeddings);
    }
}

TEST_CASE("vertex spread audit, exhaustive") {
    // spanning pattern in K_4: every event of size s has probability (4-s)!/4!
    auto d = uniform_embedding_distribution(fixtures::path(4), fixtures::complete(4));
    auto rep = vertex_spread_audit(d, 4);
    CHECK(rep.mode == AuditMode::exhaustive);
    CHECK(rep.achieved_q == doctest::Approx(std::pow(1.0 / 24.0, 0.25)).epsilon(1e-12));
    CHECK(rep.achieved_q <= std::exp(1.0) / 4.0);
    for (const auto& st : rep.per_level) {
        unsigned long long fact = 1;
        for (int i = 2; i <= 4 - st.exponent; ++i) fact *= i;
        CHECK(st.min_prob == Rational((long long)fact, 24));
        CHECK(st.max_prob == st.min_prob);
    }

    auto p3 = uniform_embedding_distribution(fixtures::path(3), fixtures::complete(3));
    auto rep3 = vertex_spread_audit(p3, 3);
    CHECK(rep3.achieved_q == doctest::Approx(std::pow(1.0 / 6.0, 1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("vertex spread audit, point mass") {
    EmbeddingDistribution d;
    d.pattern = fixtures::path(3);
    d.host = fixtures::complete(4);
    d.support = {{0, 1, 2}};
    d.prob = {Rational(1)};
    auto rep = vertex_spread_audit(d, 3);
    CHECK(rep.achieved_q == doctest::Approx(1.0));
}

TEST_CASE("edge spread audit on matchings of K_4") {
    auto copies = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(4), fixtures::complete(4)));
    auto rep = edge_spread_audit(copies, 2);
    CHECK(rep.mode == AuditMode::exhaustive);
    CHECK(rep.achieved_q == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-12));
    CHECK(rep.worst_exponent == 2);
    CHECK(rep.witness_edges.size() == 2);  // a full matching

    auto point = point_mass_on_first_copy(copies);
    CHECK(edge_spread_audit(point, 2).achieved_q == doctest::Approx(1.0));

    auto singles = pushforward_copies(
        uniform_embedding_distribution(single_edge_pattern(), fixtures::complete(4)));
    CHECK(edge_spread_audit(singles, 1).achieved_q == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("edge spread closed form for perfect matchings of K_6") {
    auto copies = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(6), fixtures::complete(6)));
    CHECK(copies.support.size() == 15);
    auto rep = edge_spread_audit(copies, 3);
    CHECK(rep.achieved_q == doctest::Approx(std::pow(15.0, -1.0 / 3.0)).epsilon(1e-12));
    for (const auto& st : rep.per_level) {
        // all t-subsets of matchings have probability (n-2t-1)!!/(n-1)!!
        CHECK(st.max_prob == Rational((long long)double_factorial(6 - 2 * st.exponent - 1), 15));
        CHECK(st.min_prob == st.max_prob);
    }
}

TEST_CASE("level schedule worked examples") {
    LevelSchedule a = level_schedule(256, Rational(2), Rational(1), Rational(1, 2), 2);
    CHECK(a.levels == std::vector<long long>{512, 64, 6, 1});
    CHECK(a.level_count() == 3);

    LevelSchedule b = level_schedule(1000, Rational(3), Rational(3), Rational(3, 10), 2);
    CHECK(b.levels == std::vector<long long>{3000, 150, 1});
    CHECK(b.level_count() == 2);
}

TEST_CASE("level schedule structure") {
    for (long long n : {64, 128, 500, 2048})
        for (const char* d : {"1", "2", "7/2"})
            for (const char* alpha : {"1/2", "1", "2"}) {
                LevelSchedule s = level_schedule(n, Rational::from_string(d),
                                                 Rational::from_string(alpha), Rational(2, 5), 2);
                CHECK(s.levels.back() == 1);
                for (size_t i = 1; i < s.levels.size(); ++i) CHECK(s.levels[i] < s.levels[i - 1]);
            }
    CHECK_THROWS_WITH_AS(level_schedule(4, Rational(2), Rational(1), Rational(1, 2), 2),
                         doctest::Contains("too small"), std::invalid_argument);
    CHECK_THROWS_AS(level_schedule(100, Rational(2), Rational(1), Rational(2), 2),
                    std::invalid_argument);
}

TEST_CASE("multilevel audit on matchings of K_4") {
    auto copies = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(4), fixtures::complete(4)));
    auto rep = multilevel_spread_audit(copies, 0.6, LevelSchedule::from_levels({2, 1}));
    CHECK(rep.pass);
    CHECK(rep.worst_exponent == 2);
    CHECK(rep.worst_prob == Rational(1, 3));

    auto point = point_mass_on_first_copy(copies);
    auto fail = multilevel_spread_audit(point, 0.9, LevelSchedule::from_levels({2, 1}));
    CHECK_FALSE(fail.pass);

    auto singles = pushforward_copies(
        uniform_embedding_distribution(single_edge_pattern(), fixtures::complete(4)));
    auto edge_level = multilevel_spread_audit(singles, 1.0 / 6.0, LevelSchedule::from_levels({1}));
    CHECK(edge_level.pass);
    CHECK(edge_level.achieved_q == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("multilevel monotonicity in q and schedule refinement") {
    auto copies = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(8), fixtures::complete(8)));
    auto coarse = multilevel_spread_audit(copies, 0.55, LevelSchedule::from_levels({4, 1}));
    auto finer = multilevel_spread_audit(copies, 0.55, LevelSchedule::from_levels({4, 2, 1}));
    if (coarse.pass) CHECK(finer.pass);
    CHECK(finer.achieved_q <= coarse.achieved_q + 1e-12);
    // passing at q implies passing at q' >= q
    if (coarse.pass) CHECK(multilevel_spread_audit(copies, 0.7, LevelSchedule::from_levels({4, 1})).pass);

    CHECK_THROWS_AS(multilevel_spread_audit(copies, 0.5, LevelSchedule::from_levels({2, 1})),
                    std::invalid_argument);  // r_0 below max support size
}

TEST_CASE("gamma spread audit") {
    auto copies = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(4), fixtures::complete(4)));
    auto rep = gamma_spread_audit(copies, 0.7, 1.0, 2, 1);
    REQUIRE(rep.gamma_achieved.has_value());
    CHECK(*rep.gamma_achieved == doctest::Approx((1.0 / 3.0) / 0.49).epsilon(1e-9));
    CHECK(rep.pass);

    // gamma = 1 reduces to the multilevel verdict on the same window
    auto ml = multilevel_spread_audit(copies, 0.7, LevelSchedule::from_levels({2, 1}));
    auto g1 = gamma_spread_audit(copies, 0.7, 1.0, 2, 1);
    CHECK(ml.pass == g1.pass);

    auto point = point_mass_on_first_copy(copies);
    auto pg = gamma_spread_audit(point, 1.0, 1.0, 2, 1);
    CHECK(*pg.gamma_achieved == doctest::Approx(1.0));

    CHECK_THROWS_AS(gamma_spread_audit(copies, 0.7, 1.0, 1, 1), std::invalid_argument);
}

TEST_CASE("sampled audits lower-bound exhaustive audits and find hinted witnesses") {
    auto copies = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(6), fixtures::complete(6)));
    auto exact = edge_spread_audit(copies, 3);
    REQUIRE(exact.mode == AuditMode::exhaustive);
    auto sampled = edge_spread_audit(copies, 3, /*budget=*/40, /*seed=*/7);
    REQUIRE(sampled.mode == AuditMode::sampled);
    CHECK(sampled.achieved_q <= exact.achieved_q + 1e-12);
    auto hinted = edge_spread_audit(copies, 3, 40, 7, &exact.witness_edges);
    CHECK(hinted.achieved_q == doctest::Approx(exact.achieved_q).epsilon(1e-12));

    auto dist = uniform_embedding_distribution(fixtures::path(4), fixtures::complete(4));
    auto vex = vertex_spread_audit(dist, 4);
    auto vsam = vertex_spread_audit(dist, 4, 30, 3);
    REQUIRE(vsam.mode == AuditMode::sampled);
    CHECK(vsam.achieved_q <= vex.achieved_q + 1e-12);
    auto vhint = vertex_spread_audit(dist, 4, 30, 3, &vex.witness_pairs);
    CHECK(vhint.achieved_q == doctest::Approx(vex.achieved_q).epsilon(1e-12));
}

TEST_CASE("sampled audits terminate when the event space is tiny") {
    // point mass on a single 1-edge copy: only one possible event
    auto singles = pushforward_copies(
        uniform_embedding_distribution(single_edge_pattern(), fixtures::complete(4)));
    auto point = point_mass_on_first_copy(singles);
    auto rep = edge_spread_audit(point, 1, /*budget=*/0, /*seed=*/1);
    CHECK(rep.achieved_q == doctest::Approx(1.0));
}

TEST_CASE("sampled audits are deterministic per seed") {
    auto copies = pushforward_copies(
        uniform_embedding_distribution(fixtures::matching(6), fixtures::complete(6)));
    auto a = edge_spread_audit(copies, 3, 40, 11);
    auto b = edge_spread_audit(copies, 3, 40, 11);
    CHECK(a.achieved_q == b.achieved_q);
    CHECK(a.witness_edges == b.witness_edges);
    CHECK(a.events_audited == b.events_audited);
}

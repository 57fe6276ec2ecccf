#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "pathtrust/weights.hpp"
#include "support/reference.hpp"

using namespace pathtrust;

namespace {

TrustGraph two_in_one() {
    TrustGraph g(3);
    g.add_edge(0, 1, 1.0);
    g.add_edge(2, 1, 1.0);
    return g;
}

std::vector<std::size_t> argsort(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    return idx;
}

}  // namespace

TEST_CASE("indegree weights") {
    auto theta = indegree_weights(two_in_one());
    CHECK(theta == std::vector<double>{0, 2, 0});

    CHECK(indegree_weights(TrustGraph(4)) == std::vector<double>(4, 0.0));

    TrustGraph complete(3);
    for (NodeId i = 0; i < 3; ++i)
        for (NodeId j = 0; j < 3; ++j)
            if (i != j) complete.add_edge(i, j, 1.0);
    CHECK(indegree_weights(complete) == std::vector<double>(3, 2.0));
}

TEST_CASE("delta weights follow the normalized-indegree formula") {
    // indeg(1)=5, max=10 via a fan-in construction
    TrustGraph g(12);
    for (NodeId s = 2; s < 7; ++s) g.add_edge(s, 1, 1.0);
    for (NodeId s = 1; s < 11; ++s) g.add_edge(s, 0, 1.0);
    REQUIRE(g.indegree(1) == 5);
    REQUIRE(g.max_indegree() == 10);

    auto delta = delta_weights(g, 0.2, 0.0);
    CHECK(delta[1] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(delta[11] == 0.0);  // indegree 0

    auto d3 = delta_weights(g, 1.0 / 3.0, 0.0);
    CHECK(d3[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));  // indeg == max

    CHECK_THROWS_AS(delta_weights(TrustGraph(3), 0.2, 0.0), std::invalid_argument);
}

TEST_CASE("delta bounded by q and ranking matches indegree for any q, eps") {
    auto g = reference::random_graph(40, 4, 5);
    auto indeg = indegree_weights(g);
    for (double q : {0.05, 0.2, 1.0 / 3.0}) {
        for (double eps : {0.0, 1.0, 10.0}) {
            auto delta = delta_weights(g, q, eps);
            for (double d : delta) CHECK(d <= q + 1e-15);
            CHECK(argsort(delta) == argsort(indeg));
        }
    }
}

TEST_CASE("categorize_items splits by count with inclusive boundaries") {
    RatingScale scale{1, 5};
    RatingTable r(30, 3, scale);
    // item 0: 25 raters, item 1: 10, item 2: 3
    for (NodeId u = 0; u < 25; ++u) r.set_rating(u, 0, 3);
    for (NodeId u = 0; u < 10; ++u) r.set_rating(u, 1, 3);
    for (NodeId u = 0; u < 3; ++u) r.set_rating(u, 2, 3);
    WeightConfig cfg;
    cfg.heavy_min_count = 20;
    cfg.cold_max_count = 4;
    auto cat = categorize_items(r, cfg);
    CHECK(cat[0] == ItemCategory::Heavy);
    CHECK(cat[1] == ItemCategory::Average);
    CHECK(cat[2] == ItemCategory::Cold);

    SUBCASE("all equal counts land in average") {
        RatingTable eq(12, 4, scale);
        for (NodeId u = 0; u < 10; ++u)
            for (ItemId i = 0; i < 4; ++i) eq.set_rating(u, i, 3);
        for (auto c : categorize_items(eq, cfg)) CHECK(c == ItemCategory::Average);
    }

    SUBCASE("boundary count exactly heavy-min is heavy") {
        RatingTable b(20, 1, scale);
        for (NodeId u = 0; u < 20; ++u) b.set_rating(u, 0, 3);
        CHECK(categorize_items(b, cfg)[0] == ItemCategory::Heavy);
    }

    SUBCASE("partition is total") {
        std::size_t h = 0, a = 0, c = 0;
        for (auto x : cat)
            (x == ItemCategory::Heavy ? h : x == ItemCategory::Average ? a : c)++;
        CHECK(h + a + c == r.item_count());
    }
}

TEST_CASE("gamma weights combine four normalized terms") {
    // user 0: 2 heavy (max 4), 3 average (max 3), 0 cold, indeg 5 (max 10)
    RatingScale scale{1, 5};
    TrustGraph g(40);
    for (NodeId s = 1; s < 6; ++s) g.add_edge(s, 0, 1.0);
    for (NodeId s = 6; s < 16; ++s) g.add_edge(s, 20, 1.0);
    REQUIRE(g.indegree(0) == 5);
    REQUIRE(g.max_indegree() == 10);

    WeightConfig cfg;
    cfg.heavy_min_count = 20;
    cfg.cold_max_count = 4;

    RatingTable r(40, 10, scale);
    // items 0..3 heavy (20+ raters each from users 10..39)
    for (ItemId i = 0; i < 4; ++i)
        for (NodeId u = 10; u < 32; ++u) r.set_rating(u, i, 3);
    // items 4..6 average (10 raters)
    for (ItemId i = 4; i < 7; ++i)
        for (NodeId u = 10; u < 20; ++u) r.set_rating(u, i, 3);
    // user 0 rates 2 heavy + 3 average; user 1 rates all 4 heavy + 3 average
    r.set_rating(0, 0, 3);
    r.set_rating(0, 1, 3);
    r.set_rating(0, 4, 3);
    r.set_rating(0, 5, 3);
    r.set_rating(0, 6, 3);
    for (ItemId i = 0; i < 4; ++i) r.set_rating(1, i, 3);
    for (ItemId i = 4; i < 7; ++i) r.set_rating(1, i, 3);

    auto gamma = gamma_weights(g, r, cfg);
    CHECK(gamma[0] == doctest::Approx(2.0).epsilon(1e-12));  // 0.5 + 1.0 + 0 + 0.5

    SUBCASE("no ratings and no indegree give zero") {
        CHECK(gamma[39] == 0.0);
    }
    SUBCASE("range [0,4]") {
        for (double v : gamma) {
            CHECK(v >= 0.0);
            CHECK(v <= 4.0);
        }
    }
}

TEST_CASE("gamma reaches 4 for a user maximal in all terms") {
    RatingScale scale{1, 5};
    TrustGraph g(25);
    for (NodeId s = 1; s < 5; ++s) g.add_edge(s, 0, 1.0);
    WeightConfig cfg;
    cfg.heavy_min_count = 20;
    cfg.cold_max_count = 4;
    RatingTable r(25, 3, scale);
    for (NodeId u = 0; u < 22; ++u) r.set_rating(u, 0, 3);  // heavy
    for (NodeId u = 0; u < 8; ++u) r.set_rating(u, 1, 3);   // average
    for (NodeId u = 0; u < 2; ++u) r.set_rating(u, 2, 3);   // cold
    auto gamma = gamma_weights(g, r, cfg);
    CHECK(gamma[0] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("weight config validation") {
    WeightConfig cfg;
    cfg.q = 0.4;
    CHECK_THROWS_AS(cfg.validate(3), std::invalid_argument);  // q > 1/3
    cfg.q = 0.0;                                              // default 1/lmax
    CHECK_NOTHROW(cfg.validate(3));
    CHECK(cfg.resolved_q(4) == doctest::Approx(0.25));
    cfg.epsilon = -1;
    CHECK_THROWS_AS(cfg.validate(3), std::invalid_argument);
    cfg.epsilon = 0;
    cfg.cold_max_count = 20;
    CHECK_THROWS_AS(cfg.validate(3), std::invalid_argument);
}

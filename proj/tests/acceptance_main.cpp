// End-to-end acceptance checks. Each check prints exactly one line:
// [PASS], [FAIL], or [SKIP] plus a short explanation. The process
// exits non-zero if any check fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pathtrust/dataio.hpp"
#include "pathtrust/enumerate.hpp"
#include "pathtrust/generate.hpp"
#include "pathtrust/inference.hpp"
#include "pathtrust/metrics.hpp"
#include "pathtrust/recommend.hpp"
#include "pathtrust/sweep.hpp"
#include "pathtrust/weights.hpp"
#include "support/reference.hpp"

using namespace pathtrust;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("[%s] check %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

void report_skip(int id, const std::string& what, const std::string& why) {
    std::printf("[SKIP] check %d: %s — %s\n", id, what.c_str(), why.c_str());
}

RatingTable synthetic_ratings(const TrustGraph& g, std::size_t items, std::uint64_t seed) {
    RatingTable r(g.node_count(), items, RatingScale{1.0, 5.0});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ItemId> item(0, static_cast<ItemId>(items - 1));
    std::uniform_real_distribution<double> val(1.0, 5.0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (int k = 0; k < 4; ++k) r.set_rating(u, item(rng), val(rng));
    return r;
}

std::vector<double> weights_for(const TrustGraph& g, const RatingTable* ratings,
                                WeightKind kind, int lmax) {
    if (kind == WeightKind::Indegree) return indegree_weights(g);
    if (kind == WeightKind::Delta) return delta_weights(g, 1.0 / lmax, 0.0);
    WeightConfig wc;
    wc.kind = WeightKind::Gamma;
    return gamma_weights(g, *ratings, wc);
}

// Check 1: exhaustive enumeration and max-trust scoring agree with the
// brute-force node-sequence search on 100 seeded random graphs.
void check_exhaustive_oracle() {
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 10 + (i * 7) % 51;
        double deg = 2.0 + i % 4;
        int lmax = 2 + i % 3;
        auto g = reference::random_graph(n, deg, 1000 + i);
        auto idx = enumerate_all(g, lmax);
        auto ref = reference::all_simple_paths(g, lmax);
        if (idx.key_count() != ref.size()) {
            report(1, false, "exhaustive enumeration matches the brute-force search",
                   "key count mismatch at iteration " + std::to_string(i));
            return;
        }
        std::size_t ref_paths = 0;
        for (auto& [key, paths] : ref) {
            ref_paths += paths.size();
            auto* got = idx.paths(key.first, key.second);
            if (!got || got->size() != paths.size()) {
                report(1, false, "exhaustive enumeration matches the brute-force search",
                       "path list mismatch at iteration " + std::to_string(i));
                return;
            }
        }
        if (idx.path_count() != ref_paths) {
            report(1, false, "exhaustive enumeration matches the brute-force search",
                   "path count mismatch at iteration " + std::to_string(i));
            return;
        }

        auto delta = delta_weights(g, 1.0 / lmax, 0.0);
        ScoringConfig sc;
        sc.lmax = lmax;
        sc.node_weights = delta;
        auto inferred = build_inferred(g, idx, sc);
        auto best = reference::max_trust(g, lmax, delta);
        if (inferred.inferred_count() != best.size()) {
            report(1, false, "exhaustive enumeration matches the brute-force search",
                   "inferred edge count mismatch at iteration " + std::to_string(i));
            return;
        }
        for (auto& [key, want] : best) {
            double got = inferred.graph().edge_weight(key.first, key.second);
            if (std::fabs(got - want) > 1e-12) {
                report(1, false, "exhaustive enumeration matches the brute-force search",
                       "trust value off at iteration " + std::to_string(i));
                return;
            }
        }
    }
    report(1, true, "exhaustive enumeration matches the brute-force search",
           "100 seeded graphs, path lists and max-trust values identical");
}

// Check 2: the recovering heuristic finds every connected pair the
// exhaustive run finds, for all three node-weight kinds.
void check_h2_completeness() {
    for (int i = 0; i < 50; ++i) {
        auto g = generate_powerlaw(300, 3, 2000 + i);
        auto ratings = synthetic_ratings(g, 60, 3000 + i);
        int lmax = 4;
        auto all = enumerate_all(g, lmax);
        auto all_keys = all.key_set();
        for (WeightKind kind : {WeightKind::Indegree, WeightKind::Delta, WeightKind::Gamma}) {
            auto theta = weights_for(g, &ratings, kind, lmax);
            EnumConfig cfg;
            cfg.lmax = lmax;
            cfg.method = Method::H2;
            cfg.cth = kind == WeightKind::Indegree ? 1.0 : 10.0 * lmax;
            auto h2 = enumerate_h2(g, theta, cfg);
            if (h2.key_set() != all_keys ||
                edges_missed_pct(all_keys.size(), h2.key_count()) != 0.0) {
                report(2, false, "recovery mode finds every reachable pair",
                       std::string("missed keys with ") + weight_kind_name(kind) +
                           " weights, graph " + std::to_string(i));
                return;
            }
        }
    }
    report(2, true, "recovery mode finds every reachable pair",
           "50 seeded power-law graphs, three weight kinds, zero edges missed");
}

// Check 3: heuristic trust never exceeds the exhaustive value, and the
// resulting error metrics are consistent.
void check_suboptimality() {
    auto g = generate_powerlaw(250, 3, 71);
    auto ratings = synthetic_ratings(g, 50, 72);
    ExperimentRunner runner(g, &ratings, "synthetic");
    for (WeightKind kind : {WeightKind::Indegree, WeightKind::Delta, WeightKind::Gamma}) {
        RunConfig cfg;
        cfg.lmax = 3;
        cfg.weight = kind;
        cfg.method = Method::H1;
        auto h1 = runner.run(cfg);
        cfg.method = Method::H2;
        auto h2 = runner.run(cfg);
        const auto& oracle = runner.oracle(cfg);
        for (const auto* heur : {h1.inferred.get(), h2.inferred.get()}) {
            for (const auto& [s, d] : heur->inferred_pairs()) {
                if (!oracle.is_inferred(s, d) ||
                    heur->graph().edge_weight(s, d) >
                        oracle.graph().edge_weight(s, d) + 1e-12) {
                    report(3, false, "heuristic trust never exceeds the exhaustive value",
                           weight_kind_name(kind));
                    return;
                }
            }
        }
        bool metrics_ok = h1.report.score_pct >= 0.0 && h1.report.mean_error >= 0.0 &&
                          h2.report.score_pct >= 0.0 && h2.report.mean_error >= 0.0 &&
                          h1.report.score_pct >= h2.report.score_pct - 1e-9;
        if (!metrics_ok) {
            report(3, false, "heuristic trust never exceeds the exhaustive value",
                   std::string("error metrics inconsistent for ") + weight_kind_name(kind));
            return;
        }
    }
    report(3, true, "heuristic trust never exceeds the exhaustive value",
           "both heuristics, three weight kinds, metrics non-negative and ordered");
}

// Check 4: the pinned metric values.
void check_pinned_metrics() {
    bool ok = std::fabs(density(2278134, 3446) - 0.1919) < 1e-4 &&
              std::fabs(edges_missed_pct(32972, 29403) - 10.8243) < 1e-4 &&
              std::fabs(edges_missed_pct(2278134, 1601709) - 29.6921) < 1e-4;
    report(4, ok, "reference metric values reproduce to 1e-4",
           "density 0.1919, missed 10.8243% and 29.6921%");
}

// Check 5: tightening the cutoff only ever prunes, and the zero cutoff
// degenerates to the exhaustive run.
void check_pruning_monotonicity() {
    auto g = generate_powerlaw(200, 3, 17);
    auto theta = indegree_weights(g);
    auto all = enumerate_all(g, 3);

    std::size_t prev_paths = SIZE_MAX, prev_keys = SIZE_MAX;
    bool ok = true;
    for (double cth : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        EnumConfig cfg;
        cfg.lmax = 3;
        cfg.method = Method::H1;
        cfg.cth = cth;
        auto idx = enumerate_h1(g, theta, cfg);
        if (cth == 0.0 && idx.key_set() != all.key_set()) ok = false;
        if (idx.path_count() > prev_paths || idx.key_count() > prev_keys) ok = false;
        prev_paths = idx.path_count();
        prev_keys = idx.key_count();
    }

    ExperimentRunner runner(g, nullptr, "synthetic");
    RunConfig base;
    base.lmax = 3;
    base.method = Method::H1;
    auto rows = runner.alpha_density_sweep(base, {10, 20, 30, 40, 50, 60, 70, 80, 90});
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].second > rows[i - 1].second + 1e-12) ok = false;

    report(5, ok, "raising the cutoff only prunes",
           "mean-scaled grid monotone, zero cutoff exhaustive, percentile densities monotone");
}

// Check 6: inferred trust stays in (0,1], and with zero benefit the
// winning path is a shortest path.
void check_trust_range() {
    bool ok = true;
    for (std::uint64_t seed : {301u, 302u, 303u}) {
        auto g = reference::random_graph(30, 3, seed);
        int lmax = 4;
        auto idx = enumerate_all(g, lmax);
        auto delta = delta_weights(g, 1.0 / lmax, 0.0);
        ScoringConfig sc;
        sc.lmax = lmax;
        sc.node_weights = delta;
        auto inferred = build_inferred(g, idx, sc);
        for (const auto& [s, d] : inferred.inferred_pairs()) {
            double w = inferred.graph().edge_weight(s, d);
            if (!(w > 0.0 && w <= 1.0)) ok = false;
        }

        std::vector<double> zero(g.node_count(), 0.0);
        sc.node_weights = zero;
        auto flat = build_inferred(g, idx, sc);
        for (const auto& [s, d] : flat.inferred_pairs()) {
            double t = flat.graph().edge_weight(s, d);
            int len = static_cast<int>(std::lround((1.0 - t) * lmax + 1.0));
            if (len != reference::bfs_distance(g, s, d)) ok = false;
        }
    }
    report(6, ok, "inferred trust stays in (0,1]",
           "and zero-benefit winners are shortest paths");
}

// Check 7: the recommender's error and coverage behave.
void check_recommender() {
    bool ok = true;

    TrustGraph g1(2);
    g1.add_edge(0, 1, 1.0);
    InferredGraph ig1(std::move(g1));
    RatingTable r1(2, 4, RatingScale{0.5, 4.0});
    r1.set_rating(0, 0, 3.0);
    r1.set_rating(1, 1, 2.5);
    r1.set_rating(1, 2, 2.0);
    r1.set_rating(1, 3, 1.5);
    auto p1 = predict_rating(0, 1, ig1, r1);
    if (!p1 || std::fabs(*p1 - 3.5) > 1e-12) ok = false;

    TrustGraph g2(3);
    g2.add_edge(0, 1, 0.6);
    g2.add_edge(0, 2, 0.4);
    InferredGraph ig2(std::move(g2));
    RatingTable r2(3, 4, RatingScale{0.5, 4.0});
    r2.set_rating(0, 0, 3.0);
    r2.set_rating(0, 1, 3.0);
    r2.set_rating(1, 2, 3.5);
    r2.set_rating(1, 3, 2.5);
    r2.set_rating(2, 2, 2.75);
    r2.set_rating(2, 3, 3.25);
    auto p2 = predict_rating(0, 2, ig2, r2);
    if (!p2 || std::fabs(*p2 - 3.2) > 1e-12) ok = false;

    auto g = generate_powerlaw(150, 3, 91);
    auto ratings = synthetic_ratings(g, 40, 92);
    ExperimentRunner runner(g, &ratings, "synthetic");
    RunConfig cfg;
    cfg.lmax = 3;
    cfg.method = Method::All;
    auto all = runner.run(cfg);
    cfg.method = Method::H2;
    auto h2 = runner.run(cfg);
    auto rep_all = runner.evaluate(*all.inferred);
    auto rep_h2 = runner.evaluate(*h2.inferred);
    if (rep_all.mae > rep_all.rmse + 1e-12 || rep_h2.mae > rep_h2.rmse + 1e-12) ok = false;
    if (rep_all.coverage_pct != rep_h2.coverage_pct) ok = false;

    for (NodeId u = 0; u < 20 && ok; ++u)
        for (ItemId it = 0; it < 10; ++it) {
            auto p = predict_rating(u, it, *h2.inferred, ratings);
            if (p && !(ratings.scale().contains(*p))) ok = false;
        }

    report(7, ok, "rating prediction is exact on fixtures and well-behaved",
           "MAE <= RMSE, equal coverage for the recovering heuristic, scale respected");
}

// Check 8: the published dataset snapshots are not bundled here, so the
// pinned dataset-level numbers cannot be recomputed. The directional
// claims are still checked on a synthetic power-law graph.
void check_dataset_scale() {
    const char* candidates[] = {"data/filmtrust_trust.txt", "data/epinions_trust.txt"};
    for (const char* c : candidates)
        if (std::filesystem::exists(c)) {
            report(8, false, "dataset-level reproduction",
                   "dataset present but no handler wired in");
            return;
        }

    auto g = generate_powerlaw(500, 3, 111);
    auto theta = indegree_weights(g);
    using clock = std::chrono::steady_clock;

    EnumConfig cfg;
    cfg.lmax = 5;
    cfg.method = Method::H1;
    cfg.cth = 1.0;
    auto t0 = clock::now();
    auto h1 = enumerate_h1(g, theta, cfg);
    auto t1 = clock::now();
    cfg.method = Method::H2;
    auto h2 = enumerate_h2(g, theta, cfg);
    auto t2 = clock::now();
    auto all = enumerate_all(g, 5);
    auto t3 = clock::now();

    bool ordered = h1.path_count() < h2.path_count() && h2.path_count() < all.path_count();
    bool faster = (t1 - t0) <= (t3 - t2);
    if (!ordered || !faster) {
        report(8, false, "dataset-level reproduction",
               ordered ? "pruned run was not faster than the exhaustive run"
                       : "path counts not strictly ordered across methods");
        return;
    }
    report_skip(8, "dataset-level reproduction",
                "no dataset snapshot in the tree; directional check on a synthetic graph "
                "passed (strictly fewer paths and less time when pruning)");
}

}  // namespace

int main() {
    check_exhaustive_oracle();
    check_h2_completeness();
    check_suboptimality();
    check_pinned_metrics();
    check_pruning_monotonicity();
    check_trust_range();
    check_recommender();
    check_dataset_scale();
    return failures == 0 ? 0 : 1;
}

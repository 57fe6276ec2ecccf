#include "pathtrust/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "pathtrust/dataio.hpp"
#include "pathtrust/inference.hpp"

namespace pathtrust {

namespace fs = std::filesystem;

double RunConfig::resolved_cth() const {
    if (cth >= 0.0) return cth;
    return weight == WeightKind::Indegree ? 1.0 : 10.0 * lmax;
}

ExperimentRunner::ExperimentRunner(const TrustGraph& graph, const RatingTable* ratings,
                                   std::string dataset_label, std::string out_dir)
    : graph_(graph), ratings_(ratings), label_(std::move(dataset_label)),
      out_dir_(std::move(out_dir)) {
    if (!out_dir_.empty()) fs::create_directories(out_dir_);
}

std::vector<double> ExperimentRunner::threshold_weights(const RunConfig& cfg) const {
    WeightConfig wc;
    wc.kind = cfg.weight;
    wc.q = cfg.q;
    wc.epsilon = cfg.epsilon;
    wc.heavy_min_count = cfg.heavy_min_count;
    wc.cold_max_count = cfg.cold_max_count;
    wc.validate(cfg.lmax);
    switch (cfg.weight) {
        case WeightKind::Indegree: return indegree_weights(graph_);
        case WeightKind::Delta:
            return delta_weights(graph_, wc.resolved_q(cfg.lmax), cfg.epsilon);
        case WeightKind::Gamma:
            if (!ratings_)
                throw std::invalid_argument("gamma weights need rating data");
            return gamma_weights(graph_, *ratings_, wc);
    }
    throw std::logic_error("unreachable");
}

std::vector<double> ExperimentRunner::scoring_weights(const RunConfig& cfg) const {
    // Indegree and delta thresholds both score with the delta benefit;
    // gamma scores with the sigmoid of gamma sums.
    if (cfg.weight == WeightKind::Gamma) return threshold_weights(cfg);
    double q = cfg.q > 0.0 ? cfg.q : 1.0 / cfg.lmax;
    return delta_weights(graph_, q, cfg.epsilon);
}

const PathIndex& ExperimentRunner::oracle_index(int lmax, unsigned threads) {
    auto it = index_cache_.find(lmax);
    if (it != index_cache_.end()) return it->second;
    auto [ins, ok] = index_cache_.emplace(lmax, enumerate_all(graph_, lmax, threads));
    return ins->second;
}

std::size_t ExperimentRunner::oracle_path_count(int lmax, unsigned threads) {
    return oracle_index(lmax, threads).path_count();
}

const InferredGraph& ExperimentRunner::oracle(const RunConfig& cfg) {
    auto key = std::make_pair(cfg.lmax, static_cast<int>(cfg.weight));
    auto it = oracle_cache_.find(key);
    if (it != oracle_cache_.end()) return it->second;

    std::string cache_file;
    if (!out_dir_.empty()) {
        cache_file = out_dir_ + "/oracle_" + label_ + "_L" + std::to_string(cfg.lmax) + "_" +
                     weight_kind_name(cfg.weight) + ".tsv";
        if (fs::exists(cache_file)) {
            auto [ins, ok] = oracle_cache_.emplace(key, read_inferred_edge_list(cache_file));
            return ins->second;
        }
    }

    auto sw = scoring_weights(cfg);
    ScoringConfig sc{cfg.lmax,
                     cfg.weight == WeightKind::Gamma ? BenefitKind::GammaSigmoid
                                                     : BenefitKind::DeltaSum,
                     sw};
    auto [ins, ok] =
        oracle_cache_.emplace(key, build_inferred(graph_, oracle_index(cfg.lmax, cfg.threads), sc));
    if (!cache_file.empty()) write_edge_list(cache_file, ins->second);
    return ins->second;
}

ExperimentRunner::RunResult ExperimentRunner::run(const RunConfig& cfg) {
    auto theta = cfg.method == Method::All ? std::vector<double>{} : threshold_weights(cfg);
    auto sw = scoring_weights(cfg);
    ScoringConfig sc{cfg.lmax,
                     cfg.weight == WeightKind::Gamma ? BenefitKind::GammaSigmoid
                                                     : BenefitKind::DeltaSum,
                     sw};

    EnumConfig ec;
    ec.lmax = cfg.lmax;
    ec.method = cfg.method;
    ec.cth = cfg.resolved_cth();
    ec.threads = cfg.threads;
    if (cfg.alpha) {
        ec.cutoff = CutoffKind::AlphaPercentile;
        ec.alpha = *cfg.alpha;
    }

    auto t0 = std::chrono::steady_clock::now();
    PathIndex index;
    switch (cfg.method) {
        case Method::All: index = enumerate_all(graph_, cfg.lmax, cfg.threads); break;
        case Method::H1: index = enumerate_h1(graph_, theta, ec); break;
        case Method::H2: index = enumerate_h2(graph_, theta, ec); break;
    }
    auto inferred = std::make_shared<InferredGraph>(build_inferred(graph_, index, sc));
    auto t1 = std::chrono::steady_clock::now();

    ComparisonReport report;
    report.method = method_name(cfg.method);
    report.weight = weight_kind_name(cfg.weight);
    report.lmax = cfg.lmax;
    report.duration_s = std::chrono::duration<double>(t1 - t0).count();
    report.path_count = index.path_count();
    report.edges = inferred->graph().edge_count();
    report.density = density(report.edges, graph_.node_count());
    if (cfg.method != Method::All) {
        const InferredGraph& opt = oracle(cfg);
        report.edges_missed_pct = edges_missed_pct(opt.graph().edge_count(), report.edges);
        ScoreError se = score_and_mean_error(opt, *inferred);
        report.score_pct = se.score_pct;
        report.mean_error = se.mean_error;
    }
    return {report, inferred};
}

EvalReport ExperimentRunner::evaluate(const InferredGraph& inferred) const {
    if (!ratings_) throw std::invalid_argument("evaluation needs rating data");
    return evaluate_loo(inferred, *ratings_);
}

std::vector<std::pair<double, double>> ExperimentRunner::alpha_density_sweep(
    const RunConfig& base, const std::vector<double>& alphas) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        RunConfig cfg = base;
        cfg.method = Method::H1;
        cfg.alpha = a;
        auto result = run(cfg);
        rows.emplace_back(a, result.report.density);
    }
    return rows;
}

namespace {
std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    return out;
}
}  // namespace

void write_comparison_csv(const std::string& path, const std::vector<ComparisonReport>& rows) {
    auto out = open_csv(path);
    out << ComparisonReport::csv_header() << '\n';
    for (const auto& r : rows) out << r.csv_row() << '\n';
}

void write_eval_csv(const std::string& path,
                    const std::vector<std::pair<std::string, EvalReport>>& rows,
                    const std::string& dataset) {
    auto out = open_csv(path);
    out << EvalReport::csv_header() << '\n';
    for (const auto& [method, report] : rows) out << report.csv_row(dataset, method) << '\n';
}

void write_alpha_density_csv(const std::string& path,
                             const std::vector<std::pair<double, double>>& rows) {
    auto out = open_csv(path);
    out << "alpha,density\n";
    char buf[64];
    for (const auto& [alpha, dens] : rows) {
        std::snprintf(buf, sizeof(buf), "%.4g,%.17g", alpha, dens);
        out << buf << '\n';
    }
}

}  // namespace pathtrust

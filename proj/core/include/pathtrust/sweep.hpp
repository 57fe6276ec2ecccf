#ifndef PATHTRUST_SWEEP_HPP
#define PATHTRUST_SWEEP_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathtrust/enumerate.hpp"
#include "pathtrust/graph.hpp"
#include "pathtrust/metrics.hpp"
#include "pathtrust/ratings.hpp"
#include "pathtrust/recommend.hpp"
#include "pathtrust/weights.hpp"

namespace pathtrust {

struct RunConfig {
    int lmax = 3;
    Method method = Method::All;
    WeightKind weight = WeightKind::Indegree;
    double cth = -1.0;  // < 0 -> default: 1 for indegree, 10*lmax otherwise
    std::optional<double> alpha;  // set -> alpha-percentile cutoff
    double q = 0.0;               // <= 0 -> 1/lmax
    double epsilon = 0.0;
    int heavy_min_count = 20;
    int cold_max_count = 4;
    unsigned threads = 0;

    double resolved_cth() const;
};

// One dataset, many configurations. The all-path oracle is cached in
// memory per (lmax, weight kind) and, when an output directory is set,
// mirrored to disk so later runs skip the exponential enumeration.
class ExperimentRunner {
public:
    ExperimentRunner(const TrustGraph& graph, const RatingTable* ratings,
                     std::string dataset_label, std::string out_dir = "");

    struct RunResult {
        ComparisonReport report;
        std::shared_ptr<const InferredGraph> inferred;
    };

    RunResult run(const RunConfig& cfg);
    EvalReport evaluate(const InferredGraph& inferred) const;

    // H1 density across alpha percentiles; returns (alpha, density) rows.
    std::vector<std::pair<double, double>> alpha_density_sweep(const RunConfig& base,
                                                               const std::vector<double>& alphas);

    const InferredGraph& oracle(const RunConfig& cfg);
    std::size_t oracle_path_count(int lmax, unsigned threads = 0);

    const std::string& dataset_label() const { return label_; }

private:
    std::vector<double> threshold_weights(const RunConfig& cfg) const;
    std::vector<double> scoring_weights(const RunConfig& cfg) const;
    const PathIndex& oracle_index(int lmax, unsigned threads);

    const TrustGraph& graph_;
    const RatingTable* ratings_;
    std::string label_;
    std::string out_dir_;
    std::map<int, PathIndex> index_cache_;                      // lmax -> all-path index
    std::map<std::pair<int, int>, InferredGraph> oracle_cache_;  // (lmax, weight) -> oracle
};

void write_comparison_csv(const std::string& path, const std::vector<ComparisonReport>& rows);
void write_eval_csv(const std::string& path,
                    const std::vector<std::pair<std::string, EvalReport>>& rows,
                    const std::string& dataset);
void write_alpha_density_csv(const std::string& path,
                             const std::vector<std::pair<double, double>>& rows);

}  // namespace pathtrust

#endif

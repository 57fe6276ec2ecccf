#ifndef PATHTRUST_METRICS_HPP
#define PATHTRUST_METRICS_HPP

#include <cstddef>
#include <string>

#include "pathtrust/graph.hpp"

namespace pathtrust {

// |E| / (n * (n-1)); n >= 2.
double density(std::size_t edge_count, std::size_t node_count);

// 100 * (oracle - heuristic) / oracle; 0 when the oracle is empty.
double edges_missed_pct(std::size_t oracle_edges, std::size_t heuristic_edges);

struct ScoreError {
    double score_pct = 0.0;   // % of oracle inferred edges with strictly lower heuristic trust
    double mean_error = 0.0;  // mean (oracle - heuristic) over the suboptimal set
};

// Over the oracle's inferred (non-original) edges; an absent heuristic
// edge counts as trust 0.
ScoreError score_and_mean_error(const InferredGraph& oracle, const InferredGraph& heuristic);

struct ComparisonReport {
    std::string method;
    std::string weight;
    int lmax = 0;
    double duration_s = 0.0;
    std::size_t path_count = 0;
    std::size_t edges = 0;
    double density = 0.0;
    double edges_missed_pct = 0.0;
    double score_pct = 0.0;
    double mean_error = 0.0;

    static std::string csv_header();
    std::string csv_row() const;
    static ComparisonReport from_csv_row(const std::string& row);
};

}  // namespace pathtrust

#endif

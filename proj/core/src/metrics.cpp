#include "pathtrust/metrics.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pathtrust {

double density(std::size_t edge_count, std::size_t node_count) {
    if (node_count < 2) throw std::invalid_argument("density needs at least 2 nodes");
    return static_cast<double>(edge_count) /
           (static_cast<double>(node_count) * static_cast<double>(node_count - 1));
}

double edges_missed_pct(std::size_t oracle_edges, std::size_t heuristic_edges) {
    if (heuristic_edges > oracle_edges)
        throw std::invalid_argument("heuristic edge count exceeds the oracle's");
    if (oracle_edges == 0) return 0.0;
    return 100.0 * static_cast<double>(oracle_edges - heuristic_edges) /
           static_cast<double>(oracle_edges);
}

ScoreError score_and_mean_error(const InferredGraph& oracle, const InferredGraph& heuristic) {
    if (oracle.graph().node_count() != heuristic.graph().node_count())
        throw std::invalid_argument("graphs built over different node universes");
    std::size_t suboptimal = 0;
    double error_sum = 0.0;
    const auto& pairs = oracle.inferred_pairs();
    for (const auto& [src, dst] : pairs) {
        double ow = oracle.graph().edge_weight(src, dst);
        double hw = heuristic.graph().has_edge(src, dst)
                        ? heuristic.graph().edge_weight(src, dst)
                        : 0.0;  // absent edge means 0 trust
        if (hw < ow) {
            ++suboptimal;
            error_sum += ow - hw;
        }
    }
    ScoreError se;
    se.score_pct = pairs.empty() ? 0.0
                                 : 100.0 * static_cast<double>(suboptimal) /
                                       static_cast<double>(pairs.size());
    se.mean_error = suboptimal ? error_sum / static_cast<double>(suboptimal) : 0.0;
    return se;
}

std::string ComparisonReport::csv_header() {
    return "method,weight,lmax,duration_s,path_count,edges,density,"
           "edges_missed_pct,score_pct,mean_error";
}

std::string ComparisonReport::csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%s,%d,%.6f,%zu,%zu,%.17g,%.17g,%.17g,%.17g",
                  method.c_str(), weight.c_str(), lmax, duration_s, path_count, edges,
                  density, edges_missed_pct, score_pct, mean_error);
    return buf;
}

ComparisonReport ComparisonReport::from_csv_row(const std::string& row) {
    std::vector<std::string> fields;
    std::stringstream ss(row);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 10) throw std::invalid_argument("malformed comparison row");
    ComparisonReport r;
    r.method = fields[0];
    r.weight = fields[1];
    r.lmax = std::stoi(fields[2]);
    r.duration_s = std::stod(fields[3]);
    r.path_count = std::stoull(fields[4]);
    r.edges = std::stoull(fields[5]);
    r.density = std::stod(fields[6]);
    r.edges_missed_pct = std::stod(fields[7]);
    r.score_pct = std::stod(fields[8]);
    r.mean_error = std::stod(fields[9]);
    return r;
}

}  // namespace pathtrust

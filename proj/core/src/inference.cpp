#include "pathtrust/inference.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pathtrust {

double penalty(int path_length, int lmax) {
    if (lmax < 2) throw std::invalid_argument("lmax must be >= 2");
    if (path_length < 2 || path_length > lmax)
        throw std::invalid_argument("path length " + std::to_string(path_length) +
                                    " outside [2, " + std::to_string(lmax) + "]");
    return static_cast<double>(path_length - 1) / static_cast<double>(lmax);
}

double benefit_delta(std::span<const NodeId> intermediates, std::span<const double> delta) {
    double sum = 0.0;
    for (NodeId u : intermediates) {
        if (u >= delta.size()) throw std::invalid_argument("delta value missing for a node");
        sum += delta[u];
    }
    return sum;
}

double benefit_gamma(std::span<const NodeId> intermediates, std::span<const double> gamma,
                     int lmax) {
    if (lmax < 2) throw std::invalid_argument("lmax must be >= 2");
    double sum = 0.0;
    for (NodeId u : intermediates) {
        if (u >= gamma.size()) throw std::invalid_argument("gamma value missing for a node");
        sum += gamma[u];
    }
    double sigmoid = 1.0 / (1.0 + std::exp(-sum));
    return sigmoid / static_cast<double>(lmax);
}

double score_path(const Path& path, const ScoringConfig& cfg) {
    if (path.size() < 3) throw std::invalid_argument("path shorter than 2 edges");
    int length = static_cast<int>(path.size()) - 1;
    std::span<const NodeId> inner(path.data() + 1, path.size() - 2);
    double benefit = cfg.benefit == BenefitKind::DeltaSum
                         ? benefit_delta(inner, cfg.node_weights)
                         : benefit_gamma(inner, cfg.node_weights, cfg.lmax);
    return 1.0 - penalty(length, cfg.lmax) + benefit;
}

InferredGraph build_inferred(const TrustGraph& graph, const PathIndex& index,
                             const ScoringConfig& cfg) {
    InferredGraph out(graph);
    for (const auto& [key, paths] : index.entries()) {
        auto [src, dst] = key;
        if (src == dst || graph.has_edge(src, dst) || paths.empty())
            throw std::invalid_argument("corrupt path index key");
        double best = -std::numeric_limits<double>::infinity();
        for (const Path& p : paths) {
            if (p.front() != src || p.back() != dst ||
                static_cast<int>(p.size()) - 1 > cfg.lmax)
                throw std::invalid_argument("corrupt path under index key");
            best = std::max(best, score_path(p, cfg));
        }
        // Range (0,1] is guaranteed analytically for q <= 1/lmax; only
        // round-off can push the sum a hair past 1.
        assert(best > 0.0 && best <= 1.0 + 1e-9);
        if (best > 1.0) best = 1.0;
        out.add_inferred(src, dst, best);
    }
    return out;
}

}  // namespace pathtrust

#ifndef PATHTRUST_INFERENCE_HPP
#define PATHTRUST_INFERENCE_HPP

#include <span>

#include "pathtrust/graph.hpp"
#include "pathtrust/path_index.hpp"

namespace pathtrust {

enum class BenefitKind { DeltaSum, GammaSigmoid };

struct ScoringConfig {
    int lmax = 3;
    BenefitKind benefit = BenefitKind::DeltaSum;
    // Delta values for DeltaSum, gamma values for GammaSigmoid.
    std::span<const double> node_weights;
};

// (l-1)/lmax for l in [2, lmax].
double penalty(int path_length, int lmax);

// Sum of delta over intermediate nodes.
double benefit_delta(std::span<const NodeId> intermediates, std::span<const double> delta);

// sigmoid(sum of gamma over intermediates) / lmax.
double benefit_gamma(std::span<const NodeId> intermediates, std::span<const double> gamma,
                     int lmax);

// t = 1 - penalty(len) + benefit(intermediates).
double score_path(const Path& path, const ScoringConfig& cfg);

// Copy of the source graph plus, per index key, one inferred edge
// carrying the maximum path score.
InferredGraph build_inferred(const TrustGraph& graph, const PathIndex& index,
                             const ScoringConfig& cfg);

}  // namespace pathtrust

#endif

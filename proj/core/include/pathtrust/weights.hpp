#ifndef PATHTRUST_WEIGHTS_HPP
#define PATHTRUST_WEIGHTS_HPP

#include <string>
#include <vector>

#include "pathtrust/graph.hpp"
#include "pathtrust/ratings.hpp"

namespace pathtrust {

enum class WeightKind { Indegree, Delta, Gamma };

const char* weight_kind_name(WeightKind kind);
WeightKind weight_kind_from_name(const std::string& name);

struct WeightConfig {
    WeightKind kind = WeightKind::Indegree;
    double q = 0.0;        // <= 0 means "use 1/L_max"
    double epsilon = 0.0;
    int heavy_min_count = 20;  // item rated >= this many times -> heavy
    int cold_max_count = 4;    // item rated <= this many times -> cold

    double resolved_q(int lmax) const;
    void validate(int lmax) const;
};

// theta_i = indeg(i)
std::vector<double> indegree_weights(const TrustGraph& graph);

// delta_i = q * indeg(i) / (max indeg + epsilon); requires a positive denominator
std::vector<double> delta_weights(const TrustGraph& graph, double q, double epsilon);

enum class ItemCategory { Heavy, Average, Cold };

// Total, disjoint partition of the item set by rating count.
std::vector<ItemCategory> categorize_items(const RatingTable& ratings, const WeightConfig& cfg);

// gamma_i: heavy/average/cold purchase ratios plus normalized indegree.
// A term whose denominator is zero contributes 0.
std::vector<double> gamma_weights(const TrustGraph& graph, const RatingTable& ratings,
                                  const WeightConfig& cfg);

}  // namespace pathtrust

#endif

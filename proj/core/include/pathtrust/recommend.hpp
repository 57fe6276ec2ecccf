#ifndef PATHTRUST_RECOMMEND_HPP
#define PATHTRUST_RECOMMEND_HPP

#include <optional>
#include <string>

#include "pathtrust/graph.hpp"
#include "pathtrust/ratings.hpp"

namespace pathtrust {

struct RatingKey {
    NodeId user;
    ItemId item;
};

// Trust-weighted residual prediction over the user's out-neighbors in
// the inferred graph, clamped to the rating scale. nullopt means
// unpredictable (no contributing neighbor, or zero trust denominator).
// The held-out rating is excluded from the user's own mean and from
// neighbor contributions.
std::optional<double> predict_rating(NodeId user, ItemId item, const InferredGraph& graph,
                                     const RatingTable& ratings,
                                     std::optional<RatingKey> held_out = std::nullopt);

struct EvalReport {
    double mae = 0.0;
    double rmse = 0.0;
    double coverage_pct = 0.0;
    std::size_t total = 0;
    std::size_t unpredictable = 0;

    static std::string csv_header();
    std::string csv_row(const std::string& dataset, const std::string& method) const;
};

// Leave-one-out over every stored rating; unpredictable cases are
// replaced with the global mean and counted against coverage.
EvalReport evaluate_loo(const InferredGraph& graph, const RatingTable& ratings);

}  // namespace pathtrust

#endif

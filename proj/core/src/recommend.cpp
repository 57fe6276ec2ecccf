#include "pathtrust/recommend.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pathtrust {

std::optional<double> predict_rating(NodeId user, ItemId item, const InferredGraph& graph,
                                     const RatingTable& ratings,
                                     std::optional<RatingKey> held_out) {
    if (user >= ratings.user_count() || user >= graph.graph().node_count())
        throw std::invalid_argument("unknown user id " + std::to_string(user));
    if (item >= ratings.item_count())
        throw std::invalid_argument("unknown item id " + std::to_string(item));

    double numerator = 0.0;
    double trust_sum = 0.0;
    for (const auto& e : graph.graph().out_edges(user)) {
        NodeId neighbor = e.dst;
        if (neighbor >= ratings.user_count()) continue;
        if (held_out && held_out->user == neighbor && held_out->item == item) continue;
        auto r = ratings.rating(neighbor, item);
        if (!r) continue;
        numerator += e.weight * (*r - ratings.user_mean(neighbor));
        trust_sum += e.weight;
    }
    if (trust_sum == 0.0) return std::nullopt;

    double base;
    if (held_out && held_out->user == user)
        base = ratings.user_mean_excluding(user, held_out->item, ratings.global_mean());
    else
        base = ratings.user_mean(user);
    return ratings.scale().clamp(base + numerator / trust_sum);
}

EvalReport evaluate_loo(const InferredGraph& graph, const RatingTable& ratings) {
    EvalReport report;
    double global_mean = ratings.global_mean();
    double abs_sum = 0.0;
    double sq_sum = 0.0;
    for (NodeId user = 0; user < ratings.user_count(); ++user) {
        for (const auto& [item, actual] : ratings.user_ratings(user)) {
            auto predicted = predict_rating(user, item, graph, ratings,
                                            RatingKey{user, item});
            double value;
            if (predicted) {
                value = *predicted;
            } else {
                value = global_mean;
                ++report.unpredictable;
            }
            double err = actual - value;
            abs_sum += std::abs(err);
            sq_sum += err * err;
            ++report.total;
        }
    }
    if (report.total > 0) {
        report.mae = abs_sum / static_cast<double>(report.total);
        report.rmse = std::sqrt(sq_sum / static_cast<double>(report.total));
        report.coverage_pct = 100.0 * (1.0 - static_cast<double>(report.unpredictable) /
                                                 static_cast<double>(report.total));
    }
    return report;
}

std::string EvalReport::csv_header() { return "dataset,method,mae,rmse,coverage_pct"; }

std::string EvalReport::csv_row(const std::string& dataset, const std::string& method) const {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "%s,%s,%.6f,%.6f,%.4f", dataset.c_str(), method.c_str(),
                  mae, rmse, coverage_pct);
    return buf;
}

}  // namespace pathtrust

#include "pathtrust/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathtrust {

const char* weight_kind_name(WeightKind kind) {
    switch (kind) {
        case WeightKind::Indegree: return "indeg";
        case WeightKind::Delta: return "delta";
        case WeightKind::Gamma: return "gamma";
    }
    return "?";
}

WeightKind weight_kind_from_name(const std::string& name) {
    if (name == "indeg" || name == "indegree") return WeightKind::Indegree;
    if (name == "delta") return WeightKind::Delta;
    if (name == "gamma") return WeightKind::Gamma;
    throw std::invalid_argument("unknown weight kind: " + name);
}

double WeightConfig::resolved_q(int lmax) const {
    return q > 0.0 ? q : 1.0 / lmax;
}

void WeightConfig::validate(int lmax) const {
    if (lmax < 2) throw std::invalid_argument("lmax must be >= 2");
    double rq = resolved_q(lmax);
    if (!(rq > 0.0 && rq <= 1.0 / lmax))
        throw std::invalid_argument("q must satisfy 0 < q <= 1/lmax");
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
    if (cold_max_count >= heavy_min_count)
        throw std::invalid_argument("cold-max-count must be < heavy-min-count");
}

std::vector<double> indegree_weights(const TrustGraph& graph) {
    std::vector<double> theta(graph.node_count());
    for (NodeId u = 0; u < graph.node_count(); ++u)
        theta[u] = static_cast<double>(graph.indegree(u));
    return theta;
}

std::vector<double> delta_weights(const TrustGraph& graph, double q, double epsilon) {
    double denom = static_cast<double>(graph.max_indegree()) + epsilon;
    if (denom <= 0.0)
        throw std::invalid_argument("delta weights need max indegree + epsilon > 0");
    std::vector<double> delta(graph.node_count());
    for (NodeId u = 0; u < graph.node_count(); ++u)
        delta[u] = q * static_cast<double>(graph.indegree(u)) / denom;
    return delta;
}

std::vector<ItemCategory> categorize_items(const RatingTable& ratings, const WeightConfig& cfg) {
    if (cfg.cold_max_count >= cfg.heavy_min_count)
        throw std::invalid_argument("cold-max-count must be < heavy-min-count");
    std::vector<ItemCategory> cat(ratings.item_count());
    for (ItemId i = 0; i < ratings.item_count(); ++i) {
        auto n = static_cast<long long>(ratings.item_rating_count(i));
        if (n >= cfg.heavy_min_count)
            cat[i] = ItemCategory::Heavy;
        else if (n <= cfg.cold_max_count)
            cat[i] = ItemCategory::Cold;
        else
            cat[i] = ItemCategory::Average;
    }
    return cat;
}

std::vector<double> gamma_weights(const TrustGraph& graph, const RatingTable& ratings,
                                  const WeightConfig& cfg) {
    auto cat = categorize_items(ratings, cfg);
    std::size_t n = graph.node_count();
    std::vector<std::size_t> heavy(n, 0), avg(n, 0), cold(n, 0);
    for (NodeId u = 0; u < std::min<std::size_t>(n, ratings.user_count()); ++u) {
        for (const auto& [item, rating] : ratings.user_ratings(u)) {
            switch (cat[item]) {
                case ItemCategory::Heavy: ++heavy[u]; break;
                case ItemCategory::Average: ++avg[u]; break;
                case ItemCategory::Cold: ++cold[u]; break;
            }
        }
    }
    auto max_of = [](const std::vector<std::size_t>& v) {
        return v.empty() ? std::size_t{0} : *std::max_element(v.begin(), v.end());
    };
    double max_h = static_cast<double>(max_of(heavy));
    double max_a = static_cast<double>(max_of(avg));
    double max_c = static_cast<double>(max_of(cold));
    double max_d = static_cast<double>(graph.max_indegree());
    auto term = [](double x, double m) { return m > 0.0 ? x / m : 0.0; };

    std::vector<double> gamma(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
        gamma[u] = term(static_cast<double>(heavy[u]), max_h) +
                   term(static_cast<double>(avg[u]), max_a) +
                   term(static_cast<double>(cold[u]), max_c) +
                   term(static_cast<double>(graph.indegree(u)), max_d);
    }
    return gamma;
}

}  // namespace pathtrust

#ifndef PATHTRUST_RATINGS_HPP
#define PATHTRUST_RATINGS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pathtrust/graph.hpp"

namespace pathtrust {

using ItemId = std::uint32_t;

struct RatingScale {
    double min = 0.5;
    double max = 4.0;

    bool contains(double r) const { return r >= min && r <= max; }
    double clamp(double r) const { return r < min ? min : (r > max ? max : r); }
};

// Sparse user x item rating store. Per-user means, per-item counts and
// the global mean are kept exact under mutation.
class RatingTable {
public:
    RatingTable() = default;
    RatingTable(std::size_t user_count, std::size_t item_count, RatingScale scale);

    std::size_t user_count() const { return by_user_.size(); }
    std::size_t item_count() const { return item_count_.size(); }
    std::size_t rating_count() const { return rating_count_; }
    const RatingScale& scale() const { return scale_; }

    // Inserts or overwrites; rejects out-of-scale ratings and unknown ids.
    void set_rating(NodeId user, ItemId item, double rating);

    std::optional<double> rating(NodeId user, ItemId item) const;
    std::span<const std::pair<ItemId, double>> user_ratings(NodeId user) const;

    std::size_t user_rating_count(NodeId user) const;
    std::size_t item_rating_count(ItemId item) const;

    // 0 for a user with no ratings.
    double user_mean(NodeId user) const;
    // Mean of the user's ratings with one (item,value) pair left out;
    // falls back to `fallback` when nothing remains.
    double user_mean_excluding(NodeId user, ItemId item, double fallback) const;

    double global_mean() const;  // 0 when empty

private:
    void check_user(NodeId user) const;
    void check_item(ItemId item) const;

    std::vector<std::vector<std::pair<ItemId, double>>> by_user_;  // sorted by item
    std::vector<double> user_sum_;
    std::vector<std::size_t> item_count_;
    std::size_t rating_count_ = 0;
    double total_sum_ = 0.0;
    RatingScale scale_;
};

}  // namespace pathtrust

#endif

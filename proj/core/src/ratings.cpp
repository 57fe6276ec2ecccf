#include "pathtrust/ratings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathtrust {

RatingTable::RatingTable(std::size_t user_count, std::size_t item_count, RatingScale scale)
    : by_user_(user_count), user_sum_(user_count, 0.0), item_count_(item_count, 0),
      scale_(scale) {}

void RatingTable::check_user(NodeId user) const {
    if (user >= by_user_.size())
        throw std::invalid_argument("unknown user id " + std::to_string(user));
}

void RatingTable::check_item(ItemId item) const {
    if (item >= item_count_.size())
        throw std::invalid_argument("unknown item id " + std::to_string(item));
}

void RatingTable::set_rating(NodeId user, ItemId item, double rating) {
    check_user(user);
    check_item(item);
    if (!scale_.contains(rating))
        throw std::invalid_argument("rating outside declared scale: " + std::to_string(rating));
    auto& row = by_user_[user];
    auto it = std::lower_bound(row.begin(), row.end(), item,
                               [](const auto& p, ItemId i) { return p.first < i; });
    if (it != row.end() && it->first == item) {
        user_sum_[user] += rating - it->second;
        total_sum_ += rating - it->second;
        it->second = rating;
        return;
    }
    row.insert(it, {item, rating});
    user_sum_[user] += rating;
    total_sum_ += rating;
    ++item_count_[item];
    ++rating_count_;
}

std::optional<double> RatingTable::rating(NodeId user, ItemId item) const {
    check_user(user);
    check_item(item);
    const auto& row = by_user_[user];
    auto it = std::lower_bound(row.begin(), row.end(), item,
                               [](const auto& p, ItemId i) { return p.first < i; });
    if (it == row.end() || it->first != item) return std::nullopt;
    return it->second;
}

std::span<const std::pair<ItemId, double>> RatingTable::user_ratings(NodeId user) const {
    check_user(user);
    return by_user_[user];
}

std::size_t RatingTable::user_rating_count(NodeId user) const {
    check_user(user);
    return by_user_[user].size();
}

std::size_t RatingTable::item_rating_count(ItemId item) const {
    check_item(item);
    return item_count_[item];
}

double RatingTable::user_mean(NodeId user) const {
    check_user(user);
    const auto& row = by_user_[user];
    if (row.empty()) return 0.0;
    return user_sum_[user] / static_cast<double>(row.size());
}

double RatingTable::user_mean_excluding(NodeId user, ItemId item, double fallback) const {
    check_user(user);
    auto r = rating(user, item);
    if (!r) return user_mean(user);
    std::size_t n = by_user_[user].size();
    if (n <= 1) return fallback;
    return (user_sum_[user] - *r) / static_cast<double>(n - 1);
}

double RatingTable::global_mean() const {
    if (rating_count_ == 0) return 0.0;
    return total_sum_ / static_cast<double>(rating_count_);
}

}  // namespace pathtrust

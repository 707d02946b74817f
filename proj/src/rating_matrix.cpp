#include "socrec/rating_matrix.hpp"

#include <set>
#include <stdexcept>

namespace socrec {
namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == ',' || c == '\n' || c == '\r') return false;
    return true;
}

void check_tag(const std::optional<std::string>& tag) {
    if (tag && !valid_token(*tag))
        throw std::invalid_argument("context tag must be a non-empty comma-free token");
}

} // namespace

void RatingsMatrix::add(const Rating& r) {
    if (!valid_token(r.user.value) || !valid_token(r.item.value))
        throw std::invalid_argument("ids must be non-empty comma-free tokens");
    if (!(r.value > 0.0))
        throw std::invalid_argument("rating value must be positive");
    check_tag(r.context.location);
    check_tag(r.context.time);
    check_tag(r.context.weather);
    check_tag(r.context.emotion);

    auto& row = rows_[r.user];
    auto [it, inserted] = row.emplace(r.item, RatedCell{r.value, r.context});
    (void)it;
    if (!inserted) throw DuplicateRating(r.user.value, r.item.value);
    ++rating_count_;
}

bool RatingsMatrix::has(const UserId& u, const ItemId& i) const {
    auto it = rows_.find(u);
    return it != rows_.end() && it->second.count(i) != 0;
}

std::optional<double> RatingsMatrix::value(const UserId& u, const ItemId& i) const {
    auto it = rows_.find(u);
    if (it == rows_.end()) return std::nullopt;
    auto cell = it->second.find(i);
    if (cell == it->second.end()) return std::nullopt;
    return cell->second.value;
}

const RatingsMatrix::Row& RatingsMatrix::row(const UserId& u) const {
    auto it = rows_.find(u);
    if (it == rows_.end()) throw UnknownUser(u.value);
    return it->second;
}

std::vector<UserId> RatingsMatrix::users() const {
    std::vector<UserId> out;
    out.reserve(rows_.size());
    for (const auto& [u, row] : rows_) out.push_back(u);
    return out;
}

std::vector<ItemId> RatingsMatrix::items() const {
    std::set<ItemId> all;
    for (const auto& [u, row] : rows_)
        for (const auto& [i, cell] : row) all.insert(i);
    return {all.begin(), all.end()};
}

} // namespace socrec

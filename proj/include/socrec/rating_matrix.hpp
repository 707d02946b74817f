#ifndef SOCREC_RATING_MATRIX_HPP
#define SOCREC_RATING_MATRIX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "socrec/context.hpp"
#include "socrec/errors.hpp"
#include "socrec/ids.hpp"

namespace socrec {

struct Rating {
    UserId user;
    ItemId item;
    double value = 0.0; // always > 0 once stored; 0 is the missing marker in files
    ContextTags context;

    bool operator==(const Rating&) const = default;
};

struct RatedCell {
    double value = 0.0;
    ContextTags context;

    bool operator==(const RatedCell&) const = default;
};

// Sparse user x item table. A missing pair is "unrated", never a zero value;
// no user row is ever empty. Rows and cells iterate in lexicographic id order,
// which is the canonical order for everything downstream.
class RatingsMatrix {
public:
    using Row = std::map<ItemId, RatedCell>;

    void add(const Rating& r);

    bool has_user(const UserId& u) const { return rows_.count(u) != 0; }
    bool has(const UserId& u, const ItemId& i) const;
    std::optional<double> value(const UserId& u, const ItemId& i) const;

    // Throws UnknownUser.
    const Row& row(const UserId& u) const;

    std::vector<UserId> users() const;
    std::vector<ItemId> items() const;

    std::size_t user_count() const { return rows_.size(); }
    std::size_t rating_count() const { return rating_count_; }
    bool empty() const { return rows_.empty(); }

    const std::map<UserId, Row>& rows() const { return rows_; }

    bool operator==(const RatingsMatrix&) const = default;

private:
    std::map<UserId, Row> rows_;
    std::size_t rating_count_ = 0;
};

} // namespace socrec

#endif

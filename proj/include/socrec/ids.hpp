#ifndef SOCREC_IDS_HPP
#define SOCREC_IDS_HPP

#include <compare>
#include <ostream>
#include <string>

namespace socrec {

// Opaque non-empty string tokens. Separate types so a user id can never be
// passed where an item id is expected.

struct UserId {
    std::string value;
    auto operator<=>(const UserId&) const = default;
};

struct ItemId {
    std::string value;
    auto operator<=>(const ItemId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const UserId& id) { return os << id.value; }
inline std::ostream& operator<<(std::ostream& os, const ItemId& id) { return os << id.value; }

} // namespace socrec

#endif

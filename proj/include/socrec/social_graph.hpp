#ifndef SOCREC_SOCIAL_GRAPH_HPP
#define SOCREC_SOCIAL_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "socrec/errors.hpp"
#include "socrec/ids.hpp"

namespace socrec {

// Friendship is symmetric (stored as two directed edges); follower and
// member edges are directed as given.
enum class Relation { friendship, follower, member };

const char* to_string(Relation r);
// Throws ParseError-free std::nullopt-style: returns false on unknown string.
bool parse_relation(const std::string& s, Relation& out);

struct SocialEdge {
    UserId source;
    UserId target;
    Relation relation = Relation::friendship;

    auto operator<=>(const SocialEdge&) const = default;
};

class SocialGraph {
public:
    void add_user(const UserId& u) { users_.insert(u); }

    // Inserts the edge (and the mirror edge for friendships). Endpoints are
    // added to the user set. Rejects self-loops. Duplicates are ignored.
    void add_edge(const SocialEdge& e);

    bool has_edge(const SocialEdge& e) const { return edges_.count(e) != 0; }

    const std::set<UserId>& users() const { return users_; }
    const std::set<SocialEdge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Distinct targets of u's outgoing edges, any relation, lexicographic.
    // Friend edges are symmetric, so both directions of a friendship are
    // reachable through outgoing edges.
    std::vector<UserId> neighbors_out(const UserId& u) const;

    // Distinct friend-relation neighbors of u, lexicographic.
    std::vector<UserId> friends_of(const UserId& u) const;

    bool operator==(const SocialGraph&) const = default;

private:
    std::set<UserId> users_;
    std::set<SocialEdge> edges_;
};

} // namespace socrec

#endif

#include "socrec/social_graph.hpp"

#include <stdexcept>

namespace socrec {

const char* to_string(Relation r) {
    switch (r) {
    case Relation::friendship: return "friend";
    case Relation::follower: return "follower";
    case Relation::member: return "member";
    }
    return "";
}

bool parse_relation(const std::string& s, Relation& out) {
    if (s == "friend") { out = Relation::friendship; return true; }
    if (s == "follower") { out = Relation::follower; return true; }
    if (s == "member") { out = Relation::member; return true; }
    return false;
}

void SocialGraph::add_edge(const SocialEdge& e) {
    if (e.source.value.empty() || e.target.value.empty())
        throw std::invalid_argument("edge endpoints must be non-empty");
    if (e.source == e.target)
        throw std::invalid_argument("self-loop edge: " + e.source.value);
    users_.insert(e.source);
    users_.insert(e.target);
    edges_.insert(e);
    if (e.relation == Relation::friendship)
        edges_.insert(SocialEdge{e.target, e.source, Relation::friendship});
}

std::vector<UserId> SocialGraph::neighbors_out(const UserId& u) const {
    std::set<UserId> out;
    auto it = edges_.lower_bound(SocialEdge{u, UserId{""}, Relation::friendship});
    for (; it != edges_.end() && it->source == u; ++it) out.insert(it->target);
    return {out.begin(), out.end()};
}

std::vector<UserId> SocialGraph::friends_of(const UserId& u) const {
    std::set<UserId> out;
    auto it = edges_.lower_bound(SocialEdge{u, UserId{""}, Relation::friendship});
    for (; it != edges_.end() && it->source == u; ++it)
        if (it->relation == Relation::friendship) out.insert(it->target);
    return {out.begin(), out.end()};
}

} // namespace socrec

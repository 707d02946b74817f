#ifndef SOCREC_DATASET_HPP
#define SOCREC_DATASET_HPP

#include <istream>
#include <ostream>
#include <set>
#include <vector>

#include "socrec/rating_matrix.hpp"
#include "socrec/social_graph.hpp"

namespace socrec {

// A dataset is immutable after ingestion. all_users may contain graph-only
// cold-start users that have no ratings.
struct Dataset {
    RatingsMatrix ratings;
    SocialGraph graph;
    std::set<UserId> all_users;

    bool operator==(const Dataset&) const = default;
};

Dataset make_dataset(RatingsMatrix ratings, SocialGraph graph);

// Ratings CSV: header `user_id,item_id,rating,location,time,weather,emotion`
// (the four context columns may be omitted as a group). A rating cell of
// exactly 0 marks a missing entry and the row is skipped; empty context
// cells mean "unspecified". Throws ParseError / DuplicateRating.
RatingsMatrix ingest_ratings(std::istream& in);

// Edges CSV: header `source,target,relation`, relation one of
// friend|follower|member. Friend rows yield both directed edges.
SocialGraph ingest_edges(std::istream& in);

// Canonical writers: sorted rows, shortest round-trip number formatting.
// write_ratings_csv always emits the full 7-column header.
void write_ratings_csv(const RatingsMatrix& m, std::ostream& out);
void write_edges_csv(const SocialGraph& g, std::ostream& out);

// Intersection of both users' rated item sets, lexicographic.
std::vector<ItemId> co_rated_items(const RatingsMatrix& m, const UserId& a, const UserId& b);

// Arithmetic mean of u's ratings restricted to `over`. Every item in `over`
// must be rated by u. Throws EmptySupport / UnknownUser / UnknownItem.
double user_mean(const RatingsMatrix& m, const UserId& u, const std::vector<ItemId>& over);

// Mean over u's full rated set.
double user_mean(const RatingsMatrix& m, const UserId& u);

} // namespace socrec

#endif

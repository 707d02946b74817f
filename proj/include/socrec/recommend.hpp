#ifndef SOCREC_RECOMMEND_HPP
#define SOCREC_RECOMMEND_HPP

#include <cstddef>
#include <vector>

#include "socrec/clustering.hpp"

namespace socrec {

struct PrefilterResult {
    RatingsMatrix matrix;
    ContextQuery effective_query; // dimensions that survived relaxation
};

// Keeps ratings matching every set dimension of q. If fewer than min_support
// ratings survive, dimensions are dropped from q one at a time in the fixed
// order emotion -> weather -> time -> location until the threshold is met or
// the query is empty (empty query = the input matrix unchanged).
PrefilterResult context_prefilter(const RatingsMatrix& m, const ContextQuery& q,
                                  std::size_t min_support);

struct Prediction {
    ItemId item;
    double score = 0.0;
    std::size_t support = 0; // contributing neighbors
    bool fallback = false;   // user-mean fallback, no item signal

    bool operator==(const Prediction&) const = default;
};

// Within-cluster user-based CF score for (u, i):
//   mean(u) + sum_v sim(u,v) * (r_vi - mean(v)) / sum_v |sim(u,v)|
// over u's cluster members v that rated i with nonzero effective similarity;
// means over each user's full rated set; clamped into the observed rating
// range of u's cluster. Empty neighborhood -> user-mean fallback.
// Throws NotClustered / UnknownUser / UnknownItem.
Prediction predict(const RatingsMatrix& m, const ClusterSet& cs, const UserId& u, const ItemId& i);

struct RecommendationList {
    UserId user;
    ContextQuery query; // surviving dimensions after prefilter relaxation
    std::vector<Prediction> entries;
    std::size_t n = 0; // requested length
};

// Full pipeline: context prefilter, cold-start cluster resolution when u is
// unclustered, prediction for every item rated by a cluster member and not
// rated by u (anywhere in the dataset), sorted by score descending with item
// id as tiebreak and fallback entries after all supported ones, truncated
// to n. Throws ColdStartUnresolvable when u has neither ratings nor edges.
RecommendationList recommend_top_n(const Dataset& dataset, const ClusterSet& cs, const UserId& u,
                                   std::size_t n, const ContextQuery& q, std::size_t min_support);

// Majority cluster among u's clustered social neighbors (friend edges count
// both directions, follower/member outgoing only); ties break to the lowest
// index. Throws ColdStartUnresolvable when no neighbor is clustered.
std::size_t cold_start_cluster(const Dataset& dataset, const ClusterSet& cs, const UserId& u);

// Items ranked by rating count desc, mean rating desc, id asc.
std::vector<ItemId> popular_items(const RatingsMatrix& m, std::size_t n);

} // namespace socrec

#endif

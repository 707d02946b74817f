#ifndef SOCREC_CLUSTERING_HPP
#define SOCREC_CLUSTERING_HPP

#include <cstddef>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "socrec/similarity.hpp"

namespace socrec {

// A centroid is a pseudo-user: a sparse item -> value vector.
using Centroid = std::map<ItemId, double>;

enum class ClusterMode { single_pass, iterative };

const char* to_string(ClusterMode m);
bool parse_cluster_mode(const std::string& s, ClusterMode& out);

struct ClusteringConfig {
    int k = 1;
    ClusterMode mode = ClusterMode::single_pass;
    int max_iterations = 20;  // iterative only
    double epsilon = 1e-6;    // iterative only: total centroid movement threshold
};

struct Cluster {
    Centroid centroid;
    std::set<UserId> members;
    UserId seed; // initial seed user; empty for parsed cluster sets
};

struct ClusterSet {
    std::vector<Cluster> clusters; // ordered by seed order
    int k = 0;
    ClusterMode mode = ClusterMode::single_pass;
    int iterations_run = 0;
    std::size_t total_users = 0; // number of rated users covered
};

// The first k rated users in lexicographic order become seeds; each seed's
// centroid is a copy of its rating vector. Throws InvalidK.
std::vector<std::pair<UserId, Centroid>> init_centroids(const RatingsMatrix& m, int k);

// Pearson between u's vector and the centroid over their common items, with
// the same overlap/variance conventions as effective_similarity (undefined -> 0).
double centroid_similarity(const RatingsMatrix& m, const UserId& u, const Centroid& c);

// Each user goes to the centroid of maximal similarity; ties break to the
// lowest cluster index.
std::map<UserId, std::size_t> assign(const RatingsMatrix& m, const std::vector<Centroid>& centroids,
                                     const std::vector<UserId>& users);

// Per-item arithmetic mean over cluster members that rated the item. A
// cluster with no members keeps an empty centroid.
std::vector<Centroid> update_centroids(const RatingsMatrix& m,
                                       const std::map<UserId, std::size_t>& assignment,
                                       std::size_t k);

// single_pass: seed the first k users, pin them to their own clusters, assign
// the rest once. iterative: additionally alternate mean-update / reassignment
// until total centroid movement <= epsilon or max_iterations is reached.
ClusterSet cluster(const RatingsMatrix& m, const ClusteringConfig& config);

// Index of the cluster containing u. Throws NotClustered.
std::size_t cluster_of(const ClusterSet& cs, const UserId& u);

// Text format: `k=<k> mode=<mode> iterations=<n>` header, then one line per
// cluster: `index<TAB>comma-separated member ids`. Centroids are not stored.
std::string serialize(const ClusterSet& cs);
ClusterSet parse_cluster_set(std::istream& in);

} // namespace socrec

#endif

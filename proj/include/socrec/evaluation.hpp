#ifndef SOCREC_EVALUATION_HPP
#define SOCREC_EVALUATION_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "socrec/recommend.hpp"

namespace socrec {

struct SplitConfig {
    double holdout_fraction = 0.2; // in (0, 1)
    std::uint64_t seed = 42;
    bool per_user = true;
};

struct SplitResult {
    Dataset train;
    std::vector<Rating> test;
};

// Deterministic pseudo-random holdout driven solely by the seed. In per_user
// mode ceil(fraction * |ratings of u|) ratings are held out per user; a user
// always retains at least one training rating (a single-rating user is never
// split). The graph passes through unchanged. Throws InvalidConfig.
SplitResult split(const Dataset& dataset, const SplitConfig& config);

// |top-min(n, len) of recommended that are relevant| / n.
double precision_at_n(const std::vector<ItemId>& recommended, const std::set<ItemId>& relevant,
                      std::size_t n);

// |top-n hits| / |relevant|. Throws NotEvaluable on an empty relevant set.
double recall_at_n(const std::vector<ItemId>& recommended, const std::set<ItemId>& relevant,
                   std::size_t n);

struct UserEvaluation {
    UserId user;
    double precision = 0.0;
    double recall = 0.0;
    std::size_t relevant_count = 0;
    bool fallback_only = false;
};

struct EvaluationReport {
    std::size_t n = 0;
    double relevance_threshold = 0.0;
    ClusteringConfig clustering;
    SplitConfig split;

    std::vector<UserEvaluation> per_user; // evaluable users, canonical order
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    std::size_t evaluable_users = 0;
    bool no_evaluable_users = false;

    std::size_t cold_start_users = 0;    // all_users absent from the train clustering
    std::size_t fallback_only_users = 0; // evaluable users served only fallback entries

    // Fraction of a user's clustered friends landing in the same cluster,
    // macro-averaged over clustered users with at least one clustered friend.
    double friend_same_cluster_rate = 0.0;
    std::size_t friend_rated_users = 0; // users contributing to that average
};

// Split, cluster the train side, recommend with an empty context for every
// evaluable user (>=1 held-out rating at or above the threshold), and
// aggregate precision/recall@n. Pure function of its inputs.
EvaluationReport evaluate(const Dataset& dataset, const ClusteringConfig& clustering,
                          std::size_t n, double relevance_threshold, const SplitConfig& split_cfg);

} // namespace socrec

#endif

#include "socrec/recommend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace socrec {
namespace {

RatingsMatrix filter_matrix(const RatingsMatrix& m, const ContextQuery& q) {
    if (q.empty()) return m;
    RatingsMatrix out;
    for (const auto& [u, row] : m.rows())
        for (const auto& [i, cell] : row)
            if (q.matches(cell.context)) out.add(Rating{u, i, cell.value, cell.context});
    return out;
}

// Observed rating range over the cluster's rows in the working matrix.
std::pair<double, double> cluster_value_range(const RatingsMatrix& m, const Cluster& cluster) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& u : cluster.members) {
        if (!m.has_user(u)) continue;
        for (const auto& [i, cell] : m.row(u)) {
            lo = std::min(lo, cell.value);
            hi = std::max(hi, cell.value);
        }
    }
    return {lo, hi};
}

// Within-cluster per-item mean; the scoring rule for users with no rating
// vector in the working matrix (cold-start or fully prefiltered away).
Prediction cluster_item_mean(const RatingsMatrix& m, const Cluster& cluster, const ItemId& item) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& v : cluster.members) {
        if (!m.has_user(v)) continue;
        auto value = m.value(v, item);
        if (!value) continue;
        sum += *value;
        ++count;
    }
    return Prediction{item, sum / static_cast<double>(count), count, false};
}

} // namespace

PrefilterResult context_prefilter(const RatingsMatrix& m, const ContextQuery& q,
                                  std::size_t min_support) {
    ContextQuery effective = q;
    RatingsMatrix filtered = filter_matrix(m, effective);
    for (ContextDimension dim : kRelaxationOrder) {
        if (filtered.rating_count() >= min_support || effective.empty()) break;
        if (!effective.get(dim)) continue;
        effective.drop(dim);
        filtered = filter_matrix(m, effective);
    }
    return PrefilterResult{std::move(filtered), std::move(effective)};
}

Prediction predict(const RatingsMatrix& m, const ClusterSet& cs, const UserId& u, const ItemId& i) {
    std::size_t idx = cluster_of(cs, u);
    const auto& row = m.row(u); // UnknownUser when u has no ratings here

    bool item_known = false;
    for (const auto& [user, user_row] : m.rows())
        if (user_row.count(i)) { item_known = true; break; }
    if (!item_known) throw UnknownItem(i.value);

    double u_mean = 0.0;
    for (const auto& [item, cell] : row) u_mean += cell.value;
    u_mean /= static_cast<double>(row.size());

    const Cluster& cluster = cs.clusters[idx];
    double weighted = 0.0, weight = 0.0;
    std::size_t support = 0;
    for (const auto& v : cluster.members) {
        if (v == u || !m.has_user(v)) continue;
        auto r_vi = m.value(v, i);
        if (!r_vi) continue;
        double sim = effective_similarity(m, u, v);
        if (sim == 0.0) continue;
        weighted += sim * (*r_vi - user_mean(m, v));
        weight += std::abs(sim);
        ++support;
    }

    if (support == 0) return Prediction{i, u_mean, 0, true};

    double score = u_mean + weighted / weight;
    auto [lo, hi] = cluster_value_range(m, cluster);
    score = std::clamp(score, lo, hi);
    return Prediction{i, score, support, false};
}

std::size_t cold_start_cluster(const Dataset& dataset, const ClusterSet& cs, const UserId& u) {
    std::vector<std::size_t> votes(cs.clusters.size(), 0);
    bool any = false;
    for (const auto& neighbor : dataset.graph.neighbors_out(u)) {
        for (std::size_t j = 0; j < cs.clusters.size(); ++j) {
            if (cs.clusters[j].members.count(neighbor)) {
                ++votes[j];
                any = true;
                break;
            }
        }
    }
    if (!any) throw ColdStartUnresolvable(u.value);
    std::size_t best = 0;
    for (std::size_t j = 1; j < votes.size(); ++j)
        if (votes[j] > votes[best]) best = j;
    return best;
}

RecommendationList recommend_top_n(const Dataset& dataset, const ClusterSet& cs, const UserId& u,
                                   std::size_t n, const ContextQuery& q, std::size_t min_support) {
    if (n < 1) throw InvalidConfig("n must be at least 1");
    if (!dataset.all_users.count(u)) throw UnknownUser(u.value);

    auto prefiltered = context_prefilter(dataset.ratings, q, min_support);
    const RatingsMatrix& working = prefiltered.matrix;

    std::size_t idx;
    try {
        idx = cluster_of(cs, u);
    } catch (const NotClustered&) {
        idx = cold_start_cluster(dataset, cs, u);
    }
    const Cluster& cluster = cs.clusters[idx];

    // Candidates: items rated by a cluster member in the working matrix and
    // never rated by u anywhere in the dataset.
    std::set<ItemId> candidates;
    for (const auto& v : cluster.members) {
        if (!working.has_user(v)) continue;
        for (const auto& [i, cell] : working.row(v)) candidates.insert(i);
    }
    if (dataset.ratings.has_user(u))
        for (const auto& [i, cell] : dataset.ratings.row(u)) candidates.erase(i);

    const bool has_vector = working.has_user(u) && cluster.members.count(u) != 0;
    std::vector<Prediction> predictions;
    predictions.reserve(candidates.size());
    for (const auto& i : candidates) {
        if (has_vector)
            predictions.push_back(predict(working, cs, u, i));
        else
            predictions.push_back(cluster_item_mean(working, cluster, i));
    }

    // Supported entries outrank fallback-only ones regardless of score.
    std::stable_sort(predictions.begin(), predictions.end(),
                     [](const Prediction& a, const Prediction& b) {
                         if (a.fallback != b.fallback) return !a.fallback;
                         if (a.score != b.score) return a.score > b.score;
                         return a.item < b.item;
                     });
    if (predictions.size() > n) predictions.resize(n);

    return RecommendationList{u, prefiltered.effective_query, std::move(predictions), n};
}

std::vector<ItemId> popular_items(const RatingsMatrix& m, std::size_t n) {
    struct Stat {
        std::size_t count = 0;
        double sum = 0.0;
    };
    std::map<ItemId, Stat> stats;
    for (const auto& [u, row] : m.rows()) {
        for (const auto& [i, cell] : row) {
            auto& s = stats[i];
            s.count += 1;
            s.sum += cell.value;
        }
    }
    std::vector<std::pair<ItemId, Stat>> ranked(stats.begin(), stats.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second.count != b.second.count) return a.second.count > b.second.count;
        double mean_a = a.second.sum / static_cast<double>(a.second.count);
        double mean_b = b.second.sum / static_cast<double>(b.second.count);
        if (mean_a != mean_b) return mean_a > mean_b;
        return a.first < b.first;
    });
    std::vector<ItemId> out;
    out.reserve(std::min(n, ranked.size()));
    for (const auto& [i, s] : ranked) {
        if (out.size() == n) break;
        out.push_back(i);
    }
    return out;
}

} // namespace socrec

#include "socrec/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace socrec {
namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform in [0, n) by rejection; avoids the implementation-defined
// distribution adaptors so splits are reproducible everywhere.
std::uint64_t bounded(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = g();
        if (r >= threshold) return r % n;
    }
}

template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& g) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[bounded(g, i)]);
}

std::size_t ceil_count(double fraction, std::size_t count) {
    const double v = fraction * static_cast<double>(count);
    auto h = static_cast<std::size_t>(std::ceil(v));
    // Undo a pure floating-point up-rounding (e.g. 0.2*10 read as 2 + ulp).
    if (h >= 1 && static_cast<double>(h) - v >= 1.0 - 1e-9) --h;
    return h;
}

bool is_clustered(const ClusterSet& cs, const UserId& u, std::size_t& idx) {
    for (std::size_t j = 0; j < cs.clusters.size(); ++j)
        if (cs.clusters[j].members.count(u)) {
            idx = j;
            return true;
        }
    return false;
}

} // namespace

SplitResult split(const Dataset& dataset, const SplitConfig& config) {
    if (!(config.holdout_fraction > 0.0 && config.holdout_fraction < 1.0))
        throw InvalidConfig("holdout_fraction must lie in (0, 1)");
    if (dataset.ratings.empty()) throw InvalidConfig("cannot split an empty dataset");

    RatingsMatrix train;
    std::vector<Rating> test;

    auto keep = [&](const UserId& u, const ItemId& i, const RatedCell& cell) {
        train.add(Rating{u, i, cell.value, cell.context});
    };
    auto hold = [&](const UserId& u, const ItemId& i, const RatedCell& cell) {
        test.push_back(Rating{u, i, cell.value, cell.context});
    };

    if (config.per_user) {
        for (const auto& [u, row] : dataset.ratings.rows()) {
            const std::size_t r = row.size();
            std::size_t h = 0;
            if (r >= 2) h = std::min(ceil_count(config.holdout_fraction, r), r - 1);
            std::vector<ItemId> items;
            items.reserve(r);
            for (const auto& [i, cell] : row) items.push_back(i);
            if (h > 0) {
                std::mt19937_64 g(splitmix64(config.seed ^ fnv1a64(u.value)));
                shuffle_deterministic(items, g);
            }
            for (std::size_t pos = 0; pos < items.size(); ++pos) {
                const auto& cell = row.at(items[pos]);
                if (pos < h)
                    hold(u, items[pos], cell);
                else
                    keep(u, items[pos], cell);
            }
        }
    } else {
        std::vector<std::pair<UserId, ItemId>> all;
        all.reserve(dataset.ratings.rating_count());
        std::map<UserId, std::size_t> remaining;
        for (const auto& [u, row] : dataset.ratings.rows()) {
            remaining[u] = row.size();
            for (const auto& [i, cell] : row) all.emplace_back(u, i);
        }
        const std::size_t target = ceil_count(config.holdout_fraction, all.size());
        std::mt19937_64 g(splitmix64(config.seed));
        shuffle_deterministic(all, g);

        std::set<std::pair<std::string, std::string>> held;
        std::size_t taken = 0;
        for (const auto& [u, i] : all) {
            if (taken == target) break;
            if (remaining[u] < 2) continue; // never strip a user's last training rating
            held.emplace(u.value, i.value);
            --remaining[u];
            ++taken;
        }
        for (const auto& [u, row] : dataset.ratings.rows()) {
            for (const auto& [i, cell] : row) {
                if (held.count({u.value, i.value}))
                    hold(u, i, cell);
                else
                    keep(u, i, cell);
            }
        }
    }

    std::sort(test.begin(), test.end(), [](const Rating& a, const Rating& b) {
        return std::tie(a.user, a.item) < std::tie(b.user, b.item);
    });

    SplitResult out;
    out.train = make_dataset(std::move(train), dataset.graph);
    // Graph-only members of all_users survive even when unrated.
    out.train.all_users = dataset.all_users;
    out.test = std::move(test);
    return out;
}

double precision_at_n(const std::vector<ItemId>& recommended, const std::set<ItemId>& relevant,
                      std::size_t n) {
    if (n < 1) throw InvalidConfig("n must be at least 1");
    const std::size_t considered = std::min(n, recommended.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < considered; ++i)
        if (relevant.count(recommended[i])) ++hits;
    return static_cast<double>(hits) / static_cast<double>(n);
}

double recall_at_n(const std::vector<ItemId>& recommended, const std::set<ItemId>& relevant,
                   std::size_t n) {
    if (n < 1) throw InvalidConfig("n must be at least 1");
    if (relevant.empty()) throw NotEvaluable();
    const std::size_t considered = std::min(n, recommended.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < considered; ++i)
        if (relevant.count(recommended[i])) ++hits;
    return static_cast<double>(hits) / static_cast<double>(relevant.size());
}

EvaluationReport evaluate(const Dataset& dataset, const ClusteringConfig& clustering,
                          std::size_t n, double relevance_threshold,
                          const SplitConfig& split_cfg) {
    if (n < 1) throw InvalidConfig("n must be at least 1");

    EvaluationReport report;
    report.n = n;
    report.relevance_threshold = relevance_threshold;
    report.clustering = clustering;
    report.split = split_cfg;

    auto sr = split(dataset, split_cfg);
    auto cs = cluster(sr.train.ratings, clustering);

    std::map<UserId, std::set<ItemId>> relevant_by_user;
    for (const auto& r : sr.test)
        if (r.value >= relevance_threshold) relevant_by_user[r.user].insert(r.item);

    double precision_sum = 0.0, recall_sum = 0.0;
    for (const auto& [u, relevant] : relevant_by_user) {
        auto rec = recommend_top_n(sr.train, cs, u, n, ContextQuery{}, 0);
        std::vector<ItemId> ids;
        ids.reserve(rec.entries.size());
        bool all_fallback = !rec.entries.empty();
        for (const auto& p : rec.entries) {
            ids.push_back(p.item);
            if (!p.fallback) all_fallback = false;
        }
        UserEvaluation ue;
        ue.user = u;
        ue.precision = precision_at_n(ids, relevant, n);
        ue.recall = recall_at_n(ids, relevant, n);
        ue.relevant_count = relevant.size();
        ue.fallback_only = all_fallback;
        precision_sum += ue.precision;
        recall_sum += ue.recall;
        if (all_fallback) ++report.fallback_only_users;
        report.per_user.push_back(std::move(ue));
    }
    report.evaluable_users = report.per_user.size();
    report.no_evaluable_users = report.per_user.empty();
    if (!report.per_user.empty()) {
        report.macro_precision = precision_sum / static_cast<double>(report.per_user.size());
        report.macro_recall = recall_sum / static_cast<double>(report.per_user.size());
    }

    for (const auto& u : dataset.all_users) {
        std::size_t idx;
        if (!is_clustered(cs, u, idx)) ++report.cold_start_users;
    }

    double friend_rate_sum = 0.0;
    for (std::size_t j = 0; j < cs.clusters.size(); ++j) {
        for (const auto& u : cs.clusters[j].members) {
            std::size_t clustered_friends = 0, same_cluster = 0;
            for (const auto& f : dataset.graph.friends_of(u)) {
                std::size_t fidx;
                if (!is_clustered(cs, f, fidx)) continue;
                ++clustered_friends;
                if (fidx == j) ++same_cluster;
            }
            if (clustered_friends > 0) {
                friend_rate_sum +=
                    static_cast<double>(same_cluster) / static_cast<double>(clustered_friends);
                ++report.friend_rated_users;
            }
        }
    }
    if (report.friend_rated_users > 0)
        report.friend_same_cluster_rate =
            friend_rate_sum / static_cast<double>(report.friend_rated_users);

    return report;
}

} // namespace socrec

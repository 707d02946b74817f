#include "socrec/json_io.hpp"

#include <json.hpp>

namespace socrec {
namespace {

using nlohmann::json;

json query_to_json(const ContextQuery& q) {
    json out = json::object();
    if (q.location) out["location"] = *q.location;
    if (q.time) out["time"] = *q.time;
    if (q.weather) out["weather"] = *q.weather;
    if (q.emotion) out["emotion"] = *q.emotion;
    return out;
}

std::string finish(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace

std::string recommendation_to_json(const RecommendationList& rec) {
    json doc;
    doc["user"] = rec.user.value;
    doc["query"] = query_to_json(rec.query);
    json entries = json::array();
    for (const auto& p : rec.entries) {
        json e;
        e["item"] = p.item.value;
        e["score"] = p.score;
        e["support"] = p.support;
        e["fallback"] = p.fallback;
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return finish(doc);
}

std::string popularity_to_json(const UserId& user, const ContextQuery& query,
                               const std::vector<ItemId>& items) {
    json doc;
    doc["user"] = user.value;
    doc["query"] = query_to_json(query);
    doc["fallback"] = "popularity";
    json entries = json::array();
    for (const auto& i : items) {
        json e;
        e["item"] = i.value;
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    return finish(doc);
}

std::string report_to_json(const EvaluationReport& report, bool include_per_user) {
    json doc;
    doc["n"] = report.n;
    doc["relevance_threshold"] = report.relevance_threshold;
    doc["clustering"] = {
        {"k", report.clustering.k},
        {"mode", to_string(report.clustering.mode)},
        {"max_iterations", report.clustering.max_iterations},
        {"epsilon", report.clustering.epsilon},
    };
    doc["split"] = {
        {"holdout_fraction", report.split.holdout_fraction},
        {"seed", report.split.seed},
        {"per_user", report.split.per_user},
    };
    doc["macro_precision_at_n"] = report.macro_precision;
    doc["macro_recall_at_n"] = report.macro_recall;
    doc["evaluable_users"] = report.evaluable_users;
    doc["no_evaluable_users"] = report.no_evaluable_users;
    doc["cold_start_users"] = report.cold_start_users;
    doc["fallback_only_users"] = report.fallback_only_users;
    doc["friend_same_cluster_rate"] = report.friend_same_cluster_rate;
    doc["friend_rated_users"] = report.friend_rated_users;
    if (include_per_user) {
        json table = json::array();
        for (const auto& ue : report.per_user) {
            json row;
            row["user"] = ue.user.value;
            row["precision"] = ue.precision;
            row["recall"] = ue.recall;
            row["relevant"] = ue.relevant_count;
            row["fallback_only"] = ue.fallback_only;
            table.push_back(std::move(row));
        }
        doc["per_user"] = std::move(table);
    }
    return finish(doc);
}

} // namespace socrec

#ifndef SOCREC_JSON_IO_HPP
#define SOCREC_JSON_IO_HPP

#include <string>
#include <vector>

#include "socrec/evaluation.hpp"

namespace socrec {

// JSON output shapes used by the CLI. Keys are emitted in sorted order and
// documents end with a newline, so identical inputs serialize byte-identically.

// {"user": ..., "query": {dim: value, ...}, "entries":
//   [{"item": ..., "score": ..., "support": ..., "fallback": ...}, ...]}
std::string recommendation_to_json(const RecommendationList& rec);

// Degraded cold-start output:
// {"user": ..., "query": {...}, "fallback": "popularity", "entries": [{"item": ...}, ...]}
std::string popularity_to_json(const UserId& user, const ContextQuery& query,
                               const std::vector<ItemId>& items);

std::string report_to_json(const EvaluationReport& report, bool include_per_user);

} // namespace socrec

#endif

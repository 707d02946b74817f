#include "socrec/similarity.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace socrec {

SimilarityOutcome pearson_paired(const std::vector<double>& x, const std::vector<double>& y) {
    assert(x.size() == y.size());
    const std::size_t n = x.size();
    if (n < 2) return SimilarityOutcome::undefined(UndefinedReason::insufficient_overlap);

    // Zero variance iff all samples on a side are equal; the exact flatness
    // test avoids deciding on a rounding-noise norm.
    auto flat = [](const std::vector<double>& v) {
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return *lo == *hi;
    };
    if (flat(x) || flat(y)) return SimilarityOutcome::undefined(UndefinedReason::zero_variance);

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        dot += dx * dy;
        nx += dx * dx;
        ny += dy * dy;
    }
    double r = dot / (std::sqrt(nx) * std::sqrt(ny));
    r = std::clamp(r, -1.0, 1.0); // spill beyond the bound is <= 1e-12
    return SimilarityOutcome::defined(r);
}

SimilarityOutcome pearson(const RatingsMatrix& m, const UserId& a, const UserId& b) {
    const auto& ra = m.row(a);
    const auto& rb = m.row(b);
    std::vector<double> x, y;
    for (const auto& [item, cell] : ra) {
        auto it = rb.find(item);
        if (it == rb.end()) continue;
        x.push_back(cell.value);
        y.push_back(it->second.value);
    }
    return pearson_paired(x, y);
}

double effective_similarity(const RatingsMatrix& m, const UserId& a, const UserId& b) {
    auto outcome = pearson(m, a, b);
    return outcome.is_defined() ? outcome.value() : 0.0;
}

std::vector<std::pair<UserId, double>> similarity_row(const RatingsMatrix& m, const UserId& a,
                                                      const std::vector<UserId>& candidates) {
    std::vector<std::pair<UserId, double>> out;
    out.reserve(candidates.size());
    for (const auto& c : candidates) out.emplace_back(c, effective_similarity(m, a, c));
    return out;
}

} // namespace socrec

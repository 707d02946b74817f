#ifndef SOCREC_SIMILARITY_HPP
#define SOCREC_SIMILARITY_HPP

#include <utility>
#include <vector>

#include "socrec/dataset.hpp"

namespace socrec {

enum class UndefinedReason { insufficient_overlap, zero_variance };

// Pearson correlation is undefined on fewer than two paired samples and on
// flat (zero-variance) vectors; the outcome carries the reason.
class SimilarityOutcome {
public:
    static SimilarityOutcome defined(double value) { return SimilarityOutcome(value); }
    static SimilarityOutcome undefined(UndefinedReason r) { return SimilarityOutcome(r); }

    bool is_defined() const { return defined_; }
    double value() const { return value_; }
    UndefinedReason reason() const { return reason_; }

    bool operator==(const SimilarityOutcome& o) const {
        if (defined_ != o.defined_) return false;
        return defined_ ? value_ == o.value_ : reason_ == o.reason_;
    }

private:
    explicit SimilarityOutcome(double v) : defined_(true), value_(v) {}
    explicit SimilarityOutcome(UndefinedReason r) : defined_(false), reason_(r) {}

    bool defined_;
    double value_ = 0.0;
    UndefinedReason reason_ = UndefinedReason::insufficient_overlap;
};

// Pearson over two paired sample vectors (same length, index-aligned).
// Means are taken over these samples. Results are clamped to [-1, 1]
// against floating-point spill.
SimilarityOutcome pearson_paired(const std::vector<double>& x, const std::vector<double>& y);

// Pearson between two users over their co-rated items. Fewer than two
// co-rated items -> InsufficientOverlap; a flat vector -> ZeroVariance.
SimilarityOutcome pearson(const RatingsMatrix& m, const UserId& a, const UserId& b);

// Total version used by clustering and prediction: undefined outcomes
// collapse to the neutral weight 0.
double effective_similarity(const RatingsMatrix& m, const UserId& a, const UserId& b);

// effective_similarity against each candidate, preserving candidate order.
std::vector<std::pair<UserId, double>> similarity_row(const RatingsMatrix& m, const UserId& a,
                                                      const std::vector<UserId>& candidates);

} // namespace socrec

#endif

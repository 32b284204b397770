#ifndef CODEMIX_METRICS_HPP
#define CODEMIX_METRICS_HPP

#include <cstddef>
#include <vector>

#include "codemix/text.hpp"

namespace codemix {

// Sentence-level (alpha, over CMI in [0,100]) and span-level (beta, over the
// multilinguality ratio in [0,1]) decision thresholds.
struct ThresholdPair {
    double alpha = 0.0;
    double beta = 0.0;

    bool operator==(const ThresholdPair&) const = default;
};

// Per-span mixing measurements plus the binary decision.
struct SpanScore {
    std::size_t span_index = 0;
    std::vector<double> sentence_cmis;  // one CMI per sentence
    std::vector<int> flags;             // per-sentence code-mixed flags, same length
    std::size_t n_cm = 0;               // sum of flags
    double mr = 0.0;                    // n_cm / sentence count
    int decision = 0;                   // 1 iff eligible and mr above threshold
};

// Pooled mean / population-std summaries of sentence CMI (scaled to [0,1])
// and of the span multilinguality ratio.
struct MecStatistics {
    double cmi_mean = 0.0;
    double cmi_std = 0.0;
    double mr_mean = 0.0;
    double mr_std = 0.0;
};

// Code-mixing index of a tagged token sequence, in [0,100]. With n tokens,
// u of them tagged Other and w_l the per-language counts, returns
// 100*(1 - max(w_l)/(n-u)) when n > u, else 0. Throws DataError on an empty
// list or an untagged token.
double cmi_score(const std::vector<Token>& tokens);

// Sentence code-mixedness decision: 1 iff cmi > alpha (strict).
int f_cm(double cmi, double alpha);

// Scores one span: per-sentence CMIs and flags, their sum, the
// multilinguality ratio, and the span decision (1 iff the span is eligible
// and mr > beta, strictly). Throws DataError on a span with no sentences.
SpanScore score_span(const Span& span, const ThresholdPair& thresholds);

// Descriptive statistics over a batch of span scores. Sentence CMIs are
// pooled across spans and divided by 100 before averaging; MR statistics
// are per span. Standard deviations are population form. Empty input gives
// all zeros.
MecStatistics mec_statistics(const std::vector<SpanScore>& spans);

}  // namespace codemix

#endif  // CODEMIX_METRICS_HPP

#ifndef CODEMIX_THRESHOLDS_HPP
#define CODEMIX_THRESHOLDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "codemix/metrics.hpp"
#include "codemix/text.hpp"

namespace codemix {

// One labeled span of the annotated set: the span (tagged) plus the
// operator's binary code-mixed label, keyed by (article_id, span_index).
struct AnnotatedSpan {
    std::string article_id;
    std::size_t span_index = 0;
    int label = 0;  // 1 = code-mixed
    Span span;
};

// Inclusive search grid over (alpha, beta). Values are enumerated on a
// scaled-integer lattice (six decimal places) so decimal steps like 0.025
// land exactly on their nominal values instead of accumulating float error.
struct GridSpec {
    double alpha_low = 0.0;
    double alpha_high = 50.0;
    double alpha_step = 1.0;
    double beta_low = 0.0;
    double beta_high = 0.5;
    double beta_step = 0.025;

    // Enumerated axis values, endpoints inclusive. Throws UsageError when
    // low > high or step <= 0.
    std::vector<double> alpha_values() const;
    std::vector<double> beta_values() const;
};

// One evaluated grid cell.
struct GridCell {
    ThresholdPair thresholds;
    double accuracy = 0.0;  // percent
};

// Fitted thresholds: the arg-max cell under the tie-break rule plus the full
// accuracy surface in row-major (alpha-outer) order.
struct FitResult {
    ThresholdPair thresholds;
    double accuracy = 0.0;  // percent at `thresholds`
    std::vector<GridCell> surface;
};

// Grid search over all (alpha, beta) cells: classify every annotated span
// via the span-scoring rule and count hits where decision == label;
// cell accuracy = 100 * hits / span count. Ties resolve to the smallest
// alpha, then the smallest beta. Throws DataError on empty data.
FitResult fit_thresholds(const std::vector<AnnotatedSpan>& data, const GridSpec& grid);

enum class StrategyKind { LA, GA, ALG, SDG, MDG };

std::string_view to_string(StrategyKind kind);
StrategyKind strategy_kind_from_string(std::string_view s);  // case-insensitive

// A resolved strategy: one threshold pair for LA/GA/ALG/SDG, exactly three
// (local, category, combined; duplicates permitted) for MDG.
struct StrategySpec {
    StrategyKind kind = StrategyKind::SDG;
    std::string donor_source;  // SDG provenance, informational
    std::vector<ThresholdPair> pairs;
};

// Everything strategy_thresholds may need; each kind reads its own subset.
struct StrategyInputs {
    std::optional<MecStatistics> local_stats;     // LA, ALG
    std::optional<MecStatistics> category_stats;  // GA, ALG
    std::optional<ThresholdPair> donor_fit;       // SDG
    std::string donor_source;                     // SDG provenance
    std::optional<ThresholdPair> local_fit;       // MDG
    std::optional<ThresholdPair> category_fit;    // MDG
    std::optional<ThresholdPair> combined_fit;    // MDG
};

// Resolves a generalization strategy to concrete thresholds:
//   LA  → (local mean sentence CMI rescaled to [0,100], local mean MR)
//   GA  → the same means over the category pool
//   ALG → element-wise average of the LA and GA pairs
//   SDG → the donor's fitted pair
//   MDG → the three fitted pairs (local, category pool, combined pool)
// Throws DataError naming the first absent required input.
StrategySpec strategy_thresholds(StrategyKind kind, const StrategyInputs& inputs);

// Classifies one span: single-pair strategies score it directly; MDG takes
// three independent decisions and outputs 1 iff at least two vote 1.
int classify_span(const Span& span, const StrategySpec& strategy);

}  // namespace codemix

#endif  // CODEMIX_THRESHOLDS_HPP

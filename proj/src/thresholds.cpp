#include "codemix/thresholds.hpp"

#include <cmath>

#include "codemix/errors.hpp"

namespace codemix {

namespace {

// Grid axes are enumerated on an integer lattice scaled by 1e6 so decimal
// steps (0.025, 0.001, ...) hit their nominal values exactly; accumulating
// doubles would drift and make cells like beta = 0.475 unreachable.
constexpr double kScale = 1e6;

std::vector<double> axis_values(double low, double high, double step, const char* axis) {
    if (!std::isfinite(low) || !std::isfinite(high) || !std::isfinite(step))
        throw UsageError(std::string(axis) + " grid values must be finite");
    if (low > high) throw UsageError(std::string(axis) + " grid low exceeds high");
    const auto lo = std::llround(low * kScale);
    const auto hi = std::llround(high * kScale);
    const auto st = std::llround(step * kScale);
    if (st <= 0) throw UsageError(std::string(axis) + " grid step must be at least 1e-6");
    std::vector<double> values;
    for (long long v = lo; v <= hi; v += st) values.push_back(static_cast<double>(v) / kScale);
    return values;
}

}  // namespace

std::vector<double> GridSpec::alpha_values() const {
    return axis_values(alpha_low, alpha_high, alpha_step, "alpha");
}

std::vector<double> GridSpec::beta_values() const {
    return axis_values(beta_low, beta_high, beta_step, "beta");
}

FitResult fit_thresholds(const std::vector<AnnotatedSpan>& data, const GridSpec& grid) {
    if (data.empty()) throw DataError("fit_thresholds: no annotated spans");
    const auto alphas = grid.alpha_values();
    const auto betas = grid.beta_values();

    // Sentence CMIs do not depend on the thresholds; compute them once.
    struct Prepared {
        std::vector<double> cmis;
        bool eligible = false;
        int label = 0;
    };
    std::vector<Prepared> prepared;
    prepared.reserve(data.size());
    for (const AnnotatedSpan& annotated : data) {
        if (annotated.label != 0 && annotated.label != 1)
            throw DataError("fit_thresholds: label outside {0,1} for article '" +
                            annotated.article_id + "'");
        const SpanScore base = score_span(annotated.span, ThresholdPair{0.0, 0.0});
        prepared.push_back({base.sentence_cmis, annotated.span.eligible, annotated.label});
    }

    FitResult result;
    result.surface.reserve(alphas.size() * betas.size());
    long long best_hits = -1;
    std::size_t best_alpha = 0;
    std::size_t best_beta = 0;
    std::vector<double> mrs(prepared.size());
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
        const double alpha = alphas[ai];
        for (std::size_t p = 0; p < prepared.size(); ++p) {
            std::size_t n_cm = 0;
            for (const double cmi : prepared[p].cmis)
                n_cm += static_cast<std::size_t>(f_cm(cmi, alpha));
            mrs[p] = static_cast<double>(n_cm) / static_cast<double>(prepared[p].cmis.size());
        }
        for (std::size_t bi = 0; bi < betas.size(); ++bi) {
            const double beta = betas[bi];
            long long hits = 0;
            for (std::size_t p = 0; p < prepared.size(); ++p) {
                const int decision = (prepared[p].eligible && mrs[p] > beta) ? 1 : 0;
                hits += decision == prepared[p].label ? 1 : 0;
            }
            const double accuracy =
                100.0 * static_cast<double>(hits) / static_cast<double>(prepared.size());
            result.surface.push_back({ThresholdPair{alpha, beta}, accuracy});
            // Strict '>' with alpha-major iteration realizes the tie-break:
            // smallest alpha first, then smallest beta.
            if (hits > best_hits) {
                best_hits = hits;
                best_alpha = ai;
                best_beta = bi;
            }
        }
    }
    result.thresholds = ThresholdPair{alphas[best_alpha], betas[best_beta]};
    result.accuracy = 100.0 * static_cast<double>(best_hits) / static_cast<double>(prepared.size());
    return result;
}

std::string_view to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::LA: return "LA";
        case StrategyKind::GA: return "GA";
        case StrategyKind::ALG: return "ALG";
        case StrategyKind::SDG: return "SDG";
        case StrategyKind::MDG: return "MDG";
    }
    return "SDG";
}

StrategyKind strategy_kind_from_string(std::string_view s) {
    std::string upper;
    upper.reserve(s.size());
    for (const char c : s) upper += static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
    if (upper == "LA") return StrategyKind::LA;
    if (upper == "GA") return StrategyKind::GA;
    if (upper == "ALG") return StrategyKind::ALG;
    if (upper == "SDG") return StrategyKind::SDG;
    if (upper == "MDG") return StrategyKind::MDG;
    throw UsageError("unknown strategy '" + std::string(s) +
                     "' (expected LA, GA, ALG, SDG or MDG)");
}

namespace {

const MecStatistics& require_stats(const std::optional<MecStatistics>& stats, const char* what) {
    if (!stats) throw DataError(std::string("strategy requires ") + what);
    return *stats;
}

ThresholdPair require_fit(const std::optional<ThresholdPair>& fit, const char* what) {
    if (!fit) throw DataError(std::string("strategy requires ") + what);
    return *fit;
}

// Mean sentence CMI is kept in [0,1] by the statistics; the sentence
// threshold lives on the [0,100] CMI scale.
ThresholdPair mean_pair(const MecStatistics& stats) {
    return ThresholdPair{stats.cmi_mean * 100.0, stats.mr_mean};
}

}  // namespace

StrategySpec strategy_thresholds(StrategyKind kind, const StrategyInputs& inputs) {
    StrategySpec spec;
    spec.kind = kind;
    switch (kind) {
        case StrategyKind::LA:
            spec.pairs = {mean_pair(require_stats(inputs.local_stats, "local mixing statistics"))};
            break;
        case StrategyKind::GA:
            spec.pairs = {
                mean_pair(require_stats(inputs.category_stats, "category mixing statistics"))};
            break;
        case StrategyKind::ALG: {
            const ThresholdPair local =
                mean_pair(require_stats(inputs.local_stats, "local mixing statistics"));
            const ThresholdPair category =
                mean_pair(require_stats(inputs.category_stats, "category mixing statistics"));
            spec.pairs = {ThresholdPair{(local.alpha + category.alpha) / 2.0,
                                        (local.beta + category.beta) / 2.0}};
            break;
        }
        case StrategyKind::SDG:
            spec.donor_source = inputs.donor_source;
            spec.pairs = {require_fit(inputs.donor_fit, "donor fitted thresholds")};
            break;
        case StrategyKind::MDG:
            spec.pairs = {require_fit(inputs.local_fit, "local fitted thresholds"),
                          require_fit(inputs.category_fit, "category-pool fitted thresholds"),
                          require_fit(inputs.combined_fit, "combined-pool fitted thresholds")};
            break;
    }
    return spec;
}

int classify_span(const Span& span, const StrategySpec& strategy) {
    if (strategy.kind == StrategyKind::MDG) {
        if (strategy.pairs.size() != 3)
            throw UsageError("majority-vote strategy requires exactly three threshold pairs");
        int votes = 0;
        for (const ThresholdPair& pair : strategy.pairs)
            votes += score_span(span, pair).decision;
        return votes >= 2 ? 1 : 0;
    }
    if (strategy.pairs.size() != 1)
        throw UsageError("single-pair strategy requires exactly one threshold pair");
    return score_span(span, strategy.pairs.front()).decision;
}

}  // namespace codemix

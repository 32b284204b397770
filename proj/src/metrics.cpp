#include "codemix/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "codemix/errors.hpp"

namespace codemix {

double cmi_score(const std::vector<Token>& tokens) {
    if (tokens.empty()) throw DataError("cmi_score: empty token list");
    std::size_t hindi = 0;
    std::size_t english = 0;
    std::size_t other = 0;
    for (const Token& token : tokens) {
        if (!token.tag) throw DataError("cmi_score: untagged token '" + token.surface + "'");
        switch (*token.tag) {
            case LanguageTag::Hindi: ++hindi; break;
            case LanguageTag::English: ++english; break;
            case LanguageTag::Other: ++other; break;
        }
    }
    const std::size_t n = tokens.size();
    if (n == other) return 0.0;
    const auto max_w = static_cast<double>(std::max(hindi, english));
    const auto tagged = static_cast<double>(n - other);
    // Single division keeps the result a correctly rounded rational, so
    // strict threshold comparisons behave exactly at grid boundaries.
    return 100.0 * (tagged - max_w) / tagged;
}

int f_cm(double cmi, double alpha) { return cmi > alpha ? 1 : 0; }

SpanScore score_span(const Span& span, const ThresholdPair& thresholds) {
    if (span.sentences.empty()) throw DataError("score_span: span has no sentences");
    SpanScore score;
    score.span_index = span.index;
    score.sentence_cmis.reserve(span.sentences.size());
    score.flags.reserve(span.sentences.size());
    for (const Sentence& sentence : span.sentences) {
        const double cmi = sentence.cmi ? *sentence.cmi : cmi_score(sentence.tokens);
        const int flag = f_cm(cmi, thresholds.alpha);
        score.sentence_cmis.push_back(cmi);
        score.flags.push_back(flag);
        score.n_cm += static_cast<std::size_t>(flag);
    }
    score.mr = static_cast<double>(score.n_cm) / static_cast<double>(span.sentences.size());
    score.decision = (span.eligible && score.mr > thresholds.beta) ? 1 : 0;
    return score;
}

namespace {

void mean_and_population_std(const std::vector<double>& xs, double& mean, double& std_dev) {
    if (xs.empty()) {
        mean = 0.0;
        std_dev = 0.0;
        return;
    }
    double sum = 0.0;
    for (const double x : xs) sum += x;
    mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (const double x : xs) sq += (x - mean) * (x - mean);
    std_dev = std::sqrt(sq / static_cast<double>(xs.size()));
}

}  // namespace

MecStatistics mec_statistics(const std::vector<SpanScore>& spans) {
    std::vector<double> cmis;
    std::vector<double> mrs;
    mrs.reserve(spans.size());
    for (const SpanScore& span : spans) {
        for (const double cmi : span.sentence_cmis) cmis.push_back(cmi / 100.0);
        mrs.push_back(span.mr);
    }
    MecStatistics stats;
    mean_and_population_std(cmis, stats.cmi_mean, stats.cmi_std);
    mean_and_population_std(mrs, stats.mr_mean, stats.mr_std);
    return stats;
}

}  // namespace codemix

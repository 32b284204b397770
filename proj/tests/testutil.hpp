#ifndef CODEMIX_TESTS_TESTUTIL_HPP
#define CODEMIX_TESTS_TESTUTIL_HPP

// Shared test helpers: independently coded oracles that the suites freeze
// expectations against, plus small builders for tokens, sentences and spans.
// The oracles are written straight from the published formulas, on purpose
// not sharing any code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "codemix/metrics.hpp"
#include "codemix/text.hpp"
#include "codemix/thresholds.hpp"

namespace testutil {

using codemix::Article;
using codemix::LanguageTag;
using codemix::Script;
using codemix::Sentence;
using codemix::Span;
using codemix::Token;

// --------------------------------------------------------------- oracles --

// Mixing score in textbook form: 100 * (1 - max_w / (n - u)) with u the
// neutral-tag count; 0 when every token is neutral.
inline double oracle_cmi(const std::vector<LanguageTag>& tags) {
    double hindi = 0, english = 0, other = 0;
    for (const LanguageTag tag : tags) {
        if (tag == LanguageTag::Hindi) ++hindi;
        else if (tag == LanguageTag::English) ++english;
        else ++other;
    }
    const double n = static_cast<double>(tags.size());
    if (n - other == 0) return 0.0;
    return 100.0 * (1.0 - std::max(hindi, english) / (n - other));
}

// A span reduced to what the decision rule needs.
struct OracleSpan {
    std::vector<double> cmis;  // per-sentence mixing scores
    bool eligible = true;      // more than one sentence
};

struct OracleScore {
    std::vector<int> flags;
    int n_cm = 0;
    double mr = 0.0;
    int decision = 0;
};

// Sentence flags (cmi > alpha), their count, the ratio over sentence count,
// and the eligibility-gated span decision (mr > beta).
inline OracleScore oracle_score(const OracleSpan& span, double alpha, double beta) {
    OracleScore score;
    for (const double cmi : span.cmis) {
        const int flag = cmi > alpha ? 1 : 0;
        score.flags.push_back(flag);
        score.n_cm += flag;
    }
    score.mr = static_cast<double>(score.n_cm) / static_cast<double>(span.cmis.size());
    score.decision = (span.eligible && score.mr > beta) ? 1 : 0;
    return score;
}

struct OracleAnnotated {
    OracleSpan span;
    int label = 0;
};

struct OracleFit {
    double alpha = 0.0;
    double beta = 0.0;
    double accuracy = 0.0;
};

// Exhaustive grid evaluation with the documented tie-break: first maximum in
// alpha-major, beta-minor order. Axis values walk a scaled-integer lattice so
// decimal steps land exactly.
inline std::vector<double> oracle_axis(double low, double high, double step) {
    std::vector<double> values;
    const long long lo = std::llround(low * 1e6);
    const long long hi = std::llround(high * 1e6);
    const long long st = std::llround(step * 1e6);
    for (long long v = lo; v <= hi; v += st) values.push_back(static_cast<double>(v) / 1e6);
    return values;
}

inline OracleFit oracle_fit(const std::vector<OracleAnnotated>& data, const codemix::GridSpec& grid) {
    const std::vector<double> alphas = oracle_axis(grid.alpha_low, grid.alpha_high, grid.alpha_step);
    const std::vector<double> betas = oracle_axis(grid.beta_low, grid.beta_high, grid.beta_step);
    OracleFit best;
    long long best_hits = -1;
    for (const double alpha : alphas) {
        for (const double beta : betas) {
            long long hits = 0;
            for (const OracleAnnotated& item : data)
                if (oracle_score(item.span, alpha, beta).decision == item.label) ++hits;
            if (hits > best_hits) {
                best_hits = hits;
                best = {alpha, beta, 100.0 * static_cast<double>(hits) / static_cast<double>(data.size())};
            }
        }
    }
    return best;
}

// -------------------------------------------------------------- builders --

inline Token make_token(std::string surface, LanguageTag tag, Script script = Script::Roman) {
    Token token;
    token.surface = std::move(surface);
    token.script = script;
    token.tag = tag;
    return token;
}

inline Sentence make_sentence(const std::vector<LanguageTag>& tags) {
    Sentence sentence;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        sentence.text += (i ? " w" : "w") + std::to_string(i);
        sentence.tokens.push_back(make_token("w" + std::to_string(i), tags[i]));
    }
    return sentence;
}

inline Span make_span(const std::vector<std::vector<LanguageTag>>& sentence_tags, int index = 0) {
    Span span;
    span.index = index;
    for (const auto& tags : sentence_tags) span.sentences.push_back(make_sentence(tags));
    span.eligible = span.sentences.size() > 1;
    return span;
}

// ------------------------------------------------------------ generators --

inline std::vector<LanguageTag> random_tags(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<LanguageTag> tags;
    for (int i = 0; i < count; ++i)
        tags.push_back(static_cast<LanguageTag>(pick(rng)));
    return tags;
}

// Random tagged span with its oracle twin: k sentences of 1..max_tokens
// tokens; single-sentence spans come out ineligible like real segmentation.
inline std::pair<Span, OracleSpan> random_span(std::mt19937& rng, int max_sentences = 6,
                                               int max_tokens = 8) {
    std::uniform_int_distribution<int> sentence_count(1, max_sentences);
    std::uniform_int_distribution<int> token_count(1, max_tokens);
    std::vector<std::vector<LanguageTag>> sentence_tags;
    const int k = sentence_count(rng);
    for (int i = 0; i < k; ++i) sentence_tags.push_back(random_tags(rng, token_count(rng)));
    Span span = make_span(sentence_tags);
    OracleSpan oracle;
    oracle.eligible = span.eligible;
    for (const auto& tags : sentence_tags) oracle.cmis.push_back(oracle_cmi(tags));
    return {std::move(span), std::move(oracle)};
}

}  // namespace testutil

#endif  // CODEMIX_TESTS_TESTUTIL_HPP

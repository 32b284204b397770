#ifndef CODEMIX_EVAL_HPP
#define CODEMIX_EVAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "codemix/text.hpp"

namespace codemix {

// One joined prediction/label row for a span.
struct PredictionRecord {
    std::string article_id;
    std::size_t span_index = 0;
    int predicted = 0;
    int label = 0;
};

struct PredictionSet {
    std::vector<PredictionRecord> records;
};

// Classification metrics over a prediction set. When no monolingual
// (label 0) spans exist, FMR is reported as 0 with `fmr_undefined` set.
struct EvalReport {
    double accuracy_pct = 0.0;
    double fmr_pct = 0.0;
    double d_at_10_pct = 0.0;
    bool fmr_undefined = false;
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

// accuracy = 100*(tp+tn)/total; FMR = 100*fp/(fp+tn); D@10 over article
// groupings (spans per article taken from the record counts). Throws
// DataError on an empty set.
EvalReport evaluate(const PredictionSet& preds);

// Same, with explicit per-article span totals for the D@10 denominator.
EvalReport evaluate(const PredictionSet& preds,
                    const std::map<std::string, std::size_t>& spans_per_article);

// Percentage of articles whose true positives exceed 10% of their spans
// (strictly). Every article in preds must appear in the map.
double d_at_10(const PredictionSet& preds,
               const std::map<std::string, std::size_t>& spans_per_article);

// Cohen's kappa over two equal-length binary label lists. Degenerate
// convention: when chance agreement is 1, returns 1 if observed agreement
// is 1, else 0. Throws DataError on empty or mismatched lengths.
double cohen_kappa(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

struct AgreementCounts {
    std::size_t agree_cm = 0;    // both 1
    std::size_t agree_mono = 0;  // both 0
    std::size_t disagree = 0;

    bool operator==(const AgreementCounts&) const = default;
};

// Element-wise tally of (1,1), (0,0) and mismatching pairs.
AgreementCounts complete_agreement(const std::vector<int>& labels_a,
                                   const std::vector<int>& labels_b);

// Corpus description: article count, average words and characters per
// article, and Hindi/English token percentages over all tokens.
struct CorpusStats {
    std::size_t articles = 0;
    double avg_words = 0.0;
    double avg_chars = 0.0;
    double pct_hindi = 0.0;
    double pct_english = 0.0;
};

// Streaming accumulator so corpus statistics never require the whole corpus
// in memory. Words = tokens containing at least one letter, digit or
// combining mark; characters = the article's recorded code-point count.
class CorpusStatsAccumulator {
public:
    void add(const Article& article);  // requires tagged tokens
    CorpusStats finish() const;        // throws DataError when empty

private:
    std::size_t articles_ = 0;
    std::size_t words_ = 0;
    std::size_t chars_ = 0;
    std::size_t tokens_ = 0;
    std::size_t hindi_ = 0;
    std::size_t english_ = 0;
};

CorpusStats corpus_stats(const std::vector<Article>& articles);

// True when the token counts as a word for the AW statistic.
bool is_word_token(const Token& token);

}  // namespace codemix

#endif  // CODEMIX_EVAL_HPP

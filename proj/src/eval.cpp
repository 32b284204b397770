#include "codemix/eval.hpp"

#include <cmath>

#include "codemix/errors.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

namespace {

void require_binary(int value, const char* what) {
    if (value != 0 && value != 1)
        throw DataError(std::string(what) + " outside {0,1}: " + std::to_string(value));
}

std::map<std::string, std::size_t> spans_from_records(const PredictionSet& preds) {
    std::map<std::string, std::size_t> spans;
    for (const PredictionRecord& record : preds.records) ++spans[record.article_id];
    return spans;
}

}  // namespace

double d_at_10(const PredictionSet& preds,
               const std::map<std::string, std::size_t>& spans_per_article) {
    std::map<std::string, std::size_t> true_positives;
    for (const PredictionRecord& record : preds.records) {
        true_positives.try_emplace(record.article_id, 0);
        if (record.predicted == 1 && record.label == 1) ++true_positives[record.article_id];
    }
    if (true_positives.empty()) return 0.0;
    std::size_t qualifying = 0;
    for (const auto& [article_id, tp] : true_positives) {
        const auto it = spans_per_article.find(article_id);
        if (it == spans_per_article.end() || it->second == 0)
            throw DataError("d_at_10: no span total for article '" + article_id + "'");
        const double ratio = static_cast<double>(tp) / static_cast<double>(it->second);
        if (ratio > 0.10) ++qualifying;
    }
    return 100.0 * static_cast<double>(qualifying) / static_cast<double>(true_positives.size());
}

EvalReport evaluate(const PredictionSet& preds,
                    const std::map<std::string, std::size_t>& spans_per_article) {
    if (preds.records.empty()) throw DataError("evaluate: empty prediction set");
    EvalReport report;
    for (const PredictionRecord& record : preds.records) {
        require_binary(record.predicted, "prediction");
        require_binary(record.label, "label");
        if (record.predicted == 1)
            record.label == 1 ? ++report.tp : ++report.fp;
        else
            record.label == 1 ? ++report.fn : ++report.tn;
    }
    const auto total = static_cast<double>(preds.records.size());
    report.accuracy_pct = 100.0 * static_cast<double>(report.tp + report.tn) / total;
    if (report.fp + report.tn == 0) {
        report.fmr_undefined = true;  // no monolingual spans: FMR has no denominator
        report.fmr_pct = 0.0;
    } else {
        report.fmr_pct = 100.0 * static_cast<double>(report.fp) /
                         static_cast<double>(report.fp + report.tn);
    }
    report.d_at_10_pct = d_at_10(preds, spans_per_article);
    return report;
}

EvalReport evaluate(const PredictionSet& preds) {
    return evaluate(preds, spans_from_records(preds));
}

double cohen_kappa(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
    if (labels_a.size() != labels_b.size())
        throw DataError("cohen_kappa: label lists have different lengths");
    if (labels_a.empty()) throw DataError("cohen_kappa: empty label lists");
    std::size_t agree = 0;
    std::size_t a_ones = 0;
    std::size_t b_ones = 0;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        require_binary(labels_a[i], "label");
        require_binary(labels_b[i], "label");
        agree += labels_a[i] == labels_b[i] ? 1 : 0;
        a_ones += static_cast<std::size_t>(labels_a[i]);
        b_ones += static_cast<std::size_t>(labels_b[i]);
    }
    const auto n = static_cast<double>(labels_a.size());
    const double p_o = static_cast<double>(agree) / n;
    const double p_e = (static_cast<double>(a_ones) * static_cast<double>(b_ones) +
                        (n - static_cast<double>(a_ones)) * (n - static_cast<double>(b_ones))) /
                       (n * n);
    if (p_e == 1.0) return p_o == 1.0 ? 1.0 : 0.0;  // both lists constant
    return (p_o - p_e) / (1.0 - p_e);
}

AgreementCounts complete_agreement(const std::vector<int>& labels_a,
                                   const std::vector<int>& labels_b) {
    if (labels_a.size() != labels_b.size())
        throw DataError("complete_agreement: label lists have different lengths");
    AgreementCounts counts;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        if (labels_a[i] == 1 && labels_b[i] == 1)
            ++counts.agree_cm;
        else if (labels_a[i] == 0 && labels_b[i] == 0)
            ++counts.agree_mono;
        else
            ++counts.disagree;
    }
    return counts;
}

bool is_word_token(const Token& token) {
    for (const char32_t cp : uni::decode_utf8(token.surface))
        if (uni::is_word_char(cp)) return true;
    return false;
}

void CorpusStatsAccumulator::add(const Article& article) {
    ++articles_;
    chars_ += article.chars;
    for (const Span& span : article.spans)
        for (const Sentence& sentence : span.sentences)
            for (const Token& token : sentence.tokens) {
                ++tokens_;
                if (is_word_token(token)) ++words_;
                if (token.tag == LanguageTag::Hindi) ++hindi_;
                if (token.tag == LanguageTag::English) ++english_;
            }
}

CorpusStats CorpusStatsAccumulator::finish() const {
    if (articles_ == 0) throw DataError("corpus_stats: no articles");
    CorpusStats stats;
    stats.articles = articles_;
    stats.avg_words = static_cast<double>(words_) / static_cast<double>(articles_);
    stats.avg_chars = static_cast<double>(chars_) / static_cast<double>(articles_);
    if (tokens_ > 0) {
        stats.pct_hindi = 100.0 * static_cast<double>(hindi_) / static_cast<double>(tokens_);
        stats.pct_english = 100.0 * static_cast<double>(english_) / static_cast<double>(tokens_);
    }
    return stats;
}

CorpusStats corpus_stats(const std::vector<Article>& articles) {
    CorpusStatsAccumulator acc;
    for (const Article& article : articles) acc.add(article);
    return acc.finish();
}

}  // namespace codemix

#ifndef CODEMIX_RECORDS_HPP
#define CODEMIX_RECORDS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codemix/metrics.hpp"
#include "codemix/text.hpp"
#include "codemix/thresholds.hpp"

// Line-delimited record formats shared by the pipeline stages. Every record
// is a single-line UTF-8 JSON object; parse errors throw DataError with the
// offending detail.

namespace codemix {

inline constexpr std::string_view kToolName = "codemix";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Tagged article: metadata, character count, and all spans with tagged
// tokens and cached sentence CMIs. Tokens serialize as compact
// [surface, script, tag] triples.
std::string tagged_article_to_line(const Article& article);
Article tagged_article_from_line(std::string_view line);

// Annotation record: one operator label per span.
struct AnnotationRecord {
    std::string article_id;
    std::size_t span_index = 0;
    int label = 0;

    bool operator==(const AnnotationRecord&) const = default;
};

std::string annotation_to_line(const AnnotationRecord& record);
AnnotationRecord annotation_from_line(std::string_view line);
std::vector<AnnotationRecord> read_annotations(const std::string& path);

// Span prediction emitted by detection: the binary decision for every span,
// with source and strategy provenance for grouped evaluation.
struct SpanPrediction {
    std::string article_id;
    std::string source;
    std::size_t span_index = 0;
    int predicted = 0;
    std::string strategy;

    bool operator==(const SpanPrediction&) const = default;
};

std::string prediction_to_line(const SpanPrediction& record);
SpanPrediction prediction_from_line(std::string_view line);
std::vector<SpanPrediction> read_predictions(const std::string& path);

// Span score record: per-sentence CMIs and the span decision.
std::string span_score_to_line(const std::string& article_id, const SpanScore& score);

// One positively classified span of the emitted dataset.
struct DatasetRecord {
    std::string article_id;
    std::string source;
    std::size_t span_index = 0;
    std::string text;  // sentences joined with single spaces
    std::size_t sentence_count = 0;
    std::size_t n_cm = 0;
    double mr = 0.0;
    double avg_cmi = 0.0;  // mean sentence CMI of the span
    std::string strategy;
    std::vector<ThresholdPair> thresholds;  // pair(s) that produced the decision
};

std::string dataset_record_to_line(const DatasetRecord& record);

// First line of a dataset file: run provenance (tool, version, strategy,
// tagger id) so emitted datasets stay comparable across threshold choices.
std::string dataset_header_line(std::string_view strategy, std::string_view tagger_id);

// Fitted thresholds for one grouping of the annotated set.
struct NamedFit {
    std::string name;  // "source:<name>", "category:<name>" or "combined"
    ThresholdPair thresholds;
    double accuracy = 0.0;
    std::size_t spans = 0;  // annotated spans in the grouping
};

// Fit output document (a single JSON file, not line-delimited).
struct FitsFile {
    std::string tagger_id;
    GridSpec grid;
    std::vector<NamedFit> fits;
    // Full accuracy surfaces keyed by fit name; written only on request.
    std::map<std::string, std::vector<GridCell>> surfaces;
};

void write_fits_file(const std::string& path, const FitsFile& fits);
FitsFile read_fits_file(const std::string& path);

// Fitted pair for a grouping name, if present.
std::optional<ThresholdPair> find_fit(const FitsFile& fits, std::string_view name);

}  // namespace codemix

#endif  // CODEMIX_RECORDS_HPP

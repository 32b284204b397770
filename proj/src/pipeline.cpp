#include "codemix/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "codemix/corpus.hpp"
#include "codemix/errors.hpp"
#include "codemix/eval.hpp"
#include "codemix/records.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

std::string PipelineConfig::category_of(const std::string& source) const {
    const auto it = categories.find(source);
    return it == categories.end() ? std::string() : it->second;
}

PipelineConfig default_config() {
    PipelineConfig config;
    config.tagger.hindi_lexicon = "data/lexicons/hindi_roman.txt";
    config.tagger.english_lexicon = "data/lexicons/english.txt";
    config.categories = {{"AAP", "speech"}, {"INC", "speech"}, {"MKB", "speech"},
                         {"PIB", "speech"}, {"PMS", "speech"}, {"DB", "news"},
                         {"DJ", "news"}};
    return config;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return std::string(s.substr(a, b - a));
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw UsageError("config key '" + std::string(key) + "' expects a boolean, got '" +
                     std::string(value) + "'");
}

double parse_double(std::string_view key, std::string_view value, double low, double high) {
    double parsed = 0.0;
    try {
        std::size_t consumed = 0;
        parsed = std::stod(std::string(value), &consumed);
        if (consumed != value.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw UsageError("config key '" + std::string(key) + "' expects a number, got '" +
                         std::string(value) + "'");
    }
    if (!(parsed >= low && parsed <= high))
        throw UsageError("config key '" + std::string(key) + "' must be in [" +
                         std::to_string(low) + ", " + std::to_string(high) + "]");
    return parsed;
}

}  // namespace

GridSpec parse_grid(std::string_view csv) {
    std::vector<double> fields;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string_view part =
            csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        const std::string text = trim(part);
        try {
            std::size_t consumed = 0;
            fields.push_back(std::stod(text, &consumed));
            if (consumed != text.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw UsageError("grid expects six numbers "
                             "(alpha_low,alpha_high,alpha_step,beta_low,beta_high,beta_step)");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (fields.size() != 6)
        throw UsageError("grid expects six numbers, got " + std::to_string(fields.size()));
    GridSpec grid{fields[0], fields[1], fields[2], fields[3], fields[4], fields[5]};
    grid.alpha_values();  // validate both axes now, not at fit time
    grid.beta_values();
    return grid;
}

void set_config_value(PipelineConfig& config, std::string_view key, std::string_view value) {
    const std::string v = trim(value);
    if (key == "tagger") {
        if (v == "lexicon") {
            config.tagger.kind = TaggerKind::Lexicon;
        } else if (v == "external") {
            config.tagger.kind = TaggerKind::External;
        } else if (v.starts_with("external:")) {
            config.tagger.kind = TaggerKind::External;
            config.tagger.command = trim(v.substr(9));
        } else {
            throw UsageError("config key 'tagger' expects lexicon, external or external:<command>");
        }
    } else if (key == "hindi_lexicon") {
        config.tagger.hindi_lexicon = v;
    } else if (key == "english_lexicon") {
        config.tagger.english_lexicon = v;
    } else if (key == "tagger_command") {
        config.tagger.command = v;
    } else if (key == "transliterate") {
        config.tagger.transliterate = parse_bool(key, v);
    } else if (key == "paragraph_break") {
        config.paragraph_break = paragraph_break_from_string(v);
    } else if (key == "grid") {
        config.grid = parse_grid(v);
    } else if (key == "strategy") {
        config.strategy = strategy_kind_from_string(v);
    } else if (key == "donor") {
        config.donor = v;
    } else if (key == "input") {
        config.input = v;
    } else if (key == "source") {
        config.source = v;
    } else if (key == "output") {
        config.output = v;
    } else if (key == "annotations") {
        config.annotations = v;
    } else if (key == "fits") {
        config.fits = v;
    } else if (key == "predictions") {
        config.predictions = v;
    } else if (key == "surface") {
        config.write_surface = parse_bool(key, v);
    } else if (key == "alpha") {
        config.score_thresholds.alpha = parse_double(key, v, 0.0, 100.0);
    } else if (key == "beta") {
        config.score_thresholds.beta = parse_double(key, v, 0.0, 1.0);
    } else if (key == "seed") {
        config.seed = static_cast<unsigned long>(parse_double(key, v, 0.0, 1e18));
    } else if (key.starts_with("category.")) {
        const std::string source(key.substr(9));
        if (source.empty()) throw UsageError("category key needs a source name: category.<source>");
        if (v != "speech" && v != "news")
            throw UsageError("config key '" + std::string(key) + "' expects speech or news");
        config.categories[source] = v;
    } else {
        throw UsageError("unknown config key '" + std::string(key) + "'");
    }
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    PipelineConfig config = default_config();
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(line_number) +
                             ": expected key = value");
        try {
            set_config_value(config, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
        } catch (const UsageError& e) {
            throw UsageError(path + ":" + std::to_string(line_number) + ": " + e.what());
        }
    }
    return config;
}

namespace {

// Stage output: named file, or stdout when the path is empty.
class OutputFile {
public:
    explicit OutputFile(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw DataError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void finish() {
        if (!path_.empty()) {
            file_.flush();
            if (!file_) throw DataError("failed writing output file: " + path_);
        }
    }

private:
    std::string path_;
    std::ofstream file_;
};

// Strict reader over a tagged-article file (our own output format).
class TaggedReader {
public:
    explicit TaggedReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw DataError("cannot open tagged-article file: " + path);
    }
    std::optional<Article> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_number_;
            if (trim(line).empty()) continue;
            try {
                return tagged_article_from_line(line);
            } catch (const DataError& e) {
                throw DataError(path_ + ":" + std::to_string(line_number_) + ": " + e.what());
            }
        }
        return std::nullopt;
    }

private:
    std::string path_;
    std::ifstream in_;
    std::size_t line_number_ = 0;
};

// Streaming mean / population-std so statistics never hold the corpus.
struct Moments {
    std::size_t n = 0;
    double sum = 0.0;
    double sumsq = 0.0;

    void add(double x) {
        ++n;
        sum += x;
        sumsq += x * x;
    }
    void merge(const Moments& other) {
        n += other.n;
        sum += other.sum;
        sumsq += other.sumsq;
    }
    double mean() const { return n == 0 ? 0.0 : sum / static_cast<double>(n); }
    double stddev() const {
        if (n == 0) return 0.0;
        const double m = mean();
        const double variance = sumsq / static_cast<double>(n) - m * m;
        return variance > 0.0 ? std::sqrt(variance) : 0.0;
    }
};

// Per-group mixing statistics: pooled sentence CMIs (scaled to [0,1]) and
// span multilinguality ratios, flags taken at alpha = 0.
struct MixingMoments {
    Moments cmi;
    Moments mr;
    std::size_t spans = 0;

    void add_span(const SpanScore& score) {
        for (const double c : score.sentence_cmis) cmi.add(c / 100.0);
        mr.add(score.mr);
        ++spans;
    }
    void merge(const MixingMoments& other) {
        cmi.merge(other.cmi);
        mr.merge(other.mr);
        spans += other.spans;
    }
    MecStatistics stats() const {
        return MecStatistics{cmi.mean(), cmi.stddev(), mr.mean(), mr.stddev()};
    }
};

void require_input(const PipelineConfig& config, const char* command) {
    if (config.input.empty())
        throw UsageError(std::string(command) + " requires an input file (--input)");
}

std::string fit_key_source(const std::string& source) { return "source:" + source; }
std::string fit_key_category(const std::string& category) { return "category:" + category; }

constexpr const char* kCombinedKey = "combined";

std::string format_pct(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << value;
    return out.str();
}

std::string format_threshold(double value) {
    std::ostringstream out;
    out << std::setprecision(10) << value;
    return out.str();
}

// Minimal left-aligned table printer for the stage summaries.
void print_table(std::ostream& log, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            log << row[i];
            if (i + 1 < row.size())
                log << std::string(widths[i] - row[i].size() + 2, ' ');
        }
        log << "\n";
    }
}

}  // namespace

void cmd_tag(const PipelineConfig& config, std::ostream& log) {
    require_input(config, "tag");
    const Tagger tagger(config.tagger);
    ArticleReader reader(config.input, config.source);
    OutputFile out(config.output);

    struct SourceTally {
        std::size_t articles = 0;
        std::size_t tokens = 0;
        std::size_t hindi = 0;
        std::size_t english = 0;
    };
    std::map<std::string, SourceTally> tallies;

    while (auto article = reader.next()) {
        segment_article(*article, config.paragraph_break);
        tagger.tag_article(*article);
        out.stream() << tagged_article_to_line(*article) << "\n";
        SourceTally& tally = tallies[article->source];
        ++tally.articles;
        for (const Span& span : article->spans)
            for (const Sentence& sentence : span.sentences)
                for (const Token& token : sentence.tokens) {
                    ++tally.tokens;
                    if (token.tag == LanguageTag::Hindi) ++tally.hindi;
                    if (token.tag == LanguageTag::English) ++tally.english;
                }
    }
    out.finish();

    for (const IngestError& e : reader.errors())
        log << "warning: " << config.input << ":" << e.line_number << ": skipped record: "
            << e.message << "\n";

    std::vector<std::vector<std::string>> rows{{"source", "articles", "tokens", "%H", "%E",
                                                "%Other"}};
    for (const auto& [source, tally] : tallies) {
        const auto pct = [&](std::size_t count) {
            return tally.tokens == 0 ? format_pct(0.0)
                                     : format_pct(100.0 * static_cast<double>(count) /
                                                  static_cast<double>(tally.tokens));
        };
        rows.push_back({source, std::to_string(tally.articles), std::to_string(tally.tokens),
                        pct(tally.hindi), pct(tally.english),
                        pct(tally.tokens - tally.hindi - tally.english)});
    }
    print_table(log, rows);
    log << "tagged " << reader.articles_read() << " articles ("
        << reader.errors().size() << " malformed records skipped)\n";
}

void cmd_score(const PipelineConfig& config, std::ostream& log) {
    require_input(config, "score");
    TaggedReader reader(config.input);
    OutputFile out(config.output);
    std::size_t spans = 0;
    std::size_t positives = 0;
    while (auto article = reader.next()) {
        for (const Span& span : article->spans) {
            const SpanScore score = score_span(span, config.score_thresholds);
            out.stream() << span_score_to_line(article->id, score) << "\n";
            ++spans;
            positives += static_cast<std::size_t>(score.decision);
        }
    }
    out.finish();
    log << "scored " << spans << " spans at alpha=" << format_threshold(
            config.score_thresholds.alpha)
        << " beta=" << format_threshold(config.score_thresholds.beta) << "; " << positives
        << " code-mixed\n";
}

namespace {

constexpr const char* kTagColor[] = {"\033[33m", "\033[36m", "\033[2m"};  // hi, en, other
constexpr const char* kColorReset = "\033[0m";

void show_span(std::ostream& ui, const Article& article, const Span& span) {
    ui << "\n[" << article.id << " span " << span.index << "] " << span.sentences.size()
       << (span.sentences.size() == 1 ? " sentence" : " sentences")
       << (span.eligible ? "" : " (single sentence: not an eligible span)") << "\n";
    for (const Sentence& sentence : span.sentences) {
        ui << "  ";
        for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
            const Token& token = sentence.tokens[i];
            const int color = token.tag ? static_cast<int>(*token.tag) : 2;
            if (i > 0) ui << " ";
            ui << kTagColor[color] << token.surface << kColorReset;
        }
        ui << "\n";
    }
}

}  // namespace

void cmd_annotate(const PipelineConfig& config, std::istream& ui_in, std::ostream& ui_out,
                  bool interactive) {
    if (!interactive)
        throw UsageError("annotate needs an interactive terminal; to import labels produced "
                         "elsewhere, write annotation records directly (one JSON object per "
                         "line: article_id, span_index, label)");
    require_input(config, "annotate");
    if (config.output.empty())
        throw UsageError("annotate requires an output annotation file (--output)");

    std::set<std::pair<std::string, std::size_t>> already;
    if (std::ifstream(config.output).good())
        for (const AnnotationRecord& record : read_annotations(config.output))
            already.insert({record.article_id, record.span_index});

    std::ofstream out(config.output, std::ios::app);
    if (!out) throw DataError("cannot open annotation file for append: " + config.output);

    TaggedReader reader(config.input);
    std::size_t labeled = 0;
    std::size_t skipped = 0;
    bool quit = false;
    while (!quit) {
        auto article = reader.next();
        if (!article) break;
        for (const Span& span : article->spans) {
            if (already.contains({article->id, span.index})) {
                ++skipped;
                continue;
            }
            show_span(ui_out, *article, span);
            int label = -1;
            while (label < 0) {
                ui_out << "code-mixed? [y/n/q] " << std::flush;
                std::string answer;
                if (!std::getline(ui_in, answer)) {
                    quit = true;  // end of input: keep the partial file
                    break;
                }
                const std::string a = trim(answer);
                if (a == "y" || a == "Y" || a == "yes") label = 1;
                else if (a == "n" || a == "N" || a == "no") label = 0;
                else if (a == "q" || a == "Q" || a == "quit") quit = true;
                if (quit) break;
            }
            if (quit) break;
            out << annotation_to_line(
                       AnnotationRecord{article->id, span.index, label})
                << "\n";
            out.flush();
            ++labeled;
        }
    }
    if (!out) throw DataError("failed writing annotation file: " + config.output);
    ui_out << "\nlabeled " << labeled << " spans (" << skipped
           << " already labeled); annotations in " << config.output << "\n";
}

namespace {

struct JoinedSpans {
    std::vector<AnnotatedSpan> spans;
    std::vector<std::string> sources;  // parallel to spans
};

// Joins annotation records onto the tagged input; every annotation must
// find its span.
JoinedSpans join_annotations(const PipelineConfig& config) {
    const auto annotations = read_annotations(config.annotations);
    if (annotations.empty()) throw DataError("no annotations in " + config.annotations);
    std::map<std::pair<std::string, std::size_t>, int> wanted;
    for (const AnnotationRecord& record : annotations) {
        const auto [it, inserted] =
            wanted.insert({{record.article_id, record.span_index}, record.label});
        if (!inserted)
            throw DataError("duplicate annotation for " + record.article_id + ":" +
                            std::to_string(record.span_index));
    }

    JoinedSpans joined;
    TaggedReader reader(config.input);
    while (auto article = reader.next()) {
        for (Span& span : article->spans) {
            const auto it = wanted.find({article->id, span.index});
            if (it == wanted.end()) continue;
            joined.spans.push_back(
                AnnotatedSpan{article->id, span.index, it->second, std::move(span)});
            joined.sources.push_back(article->source);
            wanted.erase(it);
        }
    }
    if (!wanted.empty()) {
        std::string orphans;
        std::size_t listed = 0;
        for (const auto& [key, label] : wanted) {
            if (listed == 10) {
                orphans += ", and " + std::to_string(wanted.size() - listed) + " more";
                break;
            }
            if (listed > 0) orphans += ", ";
            orphans += key.first + ":" + std::to_string(key.second);
            ++listed;
        }
        throw DataError("annotations without matching spans in " + config.input + ": " + orphans);
    }
    return joined;
}

}  // namespace

void cmd_fit(const PipelineConfig& config, std::ostream& log) {
    require_input(config, "fit");
    if (config.annotations.empty())
        throw UsageError("fit requires an annotation file (--annotations)");
    if (config.output.empty())
        throw UsageError("fit requires an output path for the fits file (--output)");

    const JoinedSpans joined = join_annotations(config);

    std::map<std::string, std::vector<std::size_t>> by_source;
    std::map<std::string, std::vector<std::size_t>> by_category;
    for (std::size_t i = 0; i < joined.spans.size(); ++i) {
        by_source[joined.sources[i]].push_back(i);
        const std::string category = config.category_of(joined.sources[i]);
        if (category.empty())
            log << "warning: source '" << joined.sources[i]
                << "' has no category mapping; excluded from category pools\n";
        else
            by_category[category].push_back(i);
    }

    FitsFile fits;
    fits.tagger_id = Tagger(config.tagger).id();
    fits.grid = config.grid;

    const auto fit_group = [&](const std::string& name, const std::vector<std::size_t>& indices) {
        std::vector<AnnotatedSpan> subset;
        subset.reserve(indices.size());
        for (const std::size_t i : indices) subset.push_back(joined.spans[i]);
        const FitResult result = fit_thresholds(subset, config.grid);
        fits.fits.push_back(NamedFit{name, result.thresholds, result.accuracy, subset.size()});
        if (config.write_surface) fits.surfaces[name] = result.surface;
    };

    for (const auto& [source, indices] : by_source) fit_group(fit_key_source(source), indices);
    for (const auto& [category, indices] : by_category)
        fit_group(fit_key_category(category), indices);
    {
        std::vector<std::size_t> all(joined.spans.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        fit_group(kCombinedKey, all);
    }

    write_fits_file(config.output, fits);

    std::vector<std::vector<std::string>> rows{{"grouping", "spans", "alpha", "beta",
                                                "accuracy"}};
    for (const NamedFit& fit : fits.fits)
        rows.push_back({fit.name, std::to_string(fit.spans),
                        format_threshold(fit.thresholds.alpha),
                        format_threshold(fit.thresholds.beta), format_pct(fit.accuracy)});
    print_table(log, rows);
    log << "fitted " << fits.fits.size() << " groupings over " << joined.spans.size()
        << " annotated spans; thresholds in " << config.output << "\n";
}

namespace {

// Resolves the per-source strategy for detection, reading fitted thresholds
// and/or corpus statistics as the strategy kind requires.
class StrategyResolver {
public:
    StrategyResolver(const PipelineConfig& config) : config_(config) {
        if (config.strategy == StrategyKind::SDG || config.strategy == StrategyKind::MDG) {
            if (config.fits.empty())
                throw UsageError("strategy " + std::string(to_string(config.strategy)) +
                                 " requires a fits file (--fits)");
            fits_ = read_fits_file(config.fits);
            // The donor lookup is source-independent; fail before any output
            // is written rather than after emitting a dataset header.
            if (config.strategy == StrategyKind::SDG) donor_fit();
        }
        needs_statistics_ = config.strategy == StrategyKind::LA ||
                            config.strategy == StrategyKind::GA ||
                            config.strategy == StrategyKind::ALG;
    }

    bool needs_statistics() const { return needs_statistics_; }

    void add_statistics(const std::string& source, const SpanScore& score) {
        source_moments_[source].add_span(score);
    }

    const StrategySpec& for_source(const std::string& source) {
        const auto cached = cache_.find(source);
        if (cached != cache_.end()) return cached->second;

        StrategyInputs inputs;
        switch (config_.strategy) {
            case StrategyKind::LA:
                inputs.local_stats = stats_of(source);
                break;
            case StrategyKind::GA:
                inputs.category_stats = category_stats_of(source);
                break;
            case StrategyKind::ALG:
                inputs.local_stats = stats_of(source);
                inputs.category_stats = category_stats_of(source);
                break;
            case StrategyKind::SDG:
                inputs.donor_source = config_.donor;
                inputs.donor_fit = donor_fit();
                break;
            case StrategyKind::MDG: {
                inputs.local_fit = fit_or_throw(fit_key_source(source),
                                                "source '" + source + "'");
                const std::string category = config_.category_of(source);
                if (category.empty())
                    throw DataError("source '" + source +
                                    "' has no category mapping; set category." + source +
                                    " in the config");
                inputs.category_fit = fit_or_throw(fit_key_category(category),
                                                   "category pool '" + category + "'");
                inputs.combined_fit = fit_or_throw(kCombinedKey, "combined pool");
                break;
            }
        }
        return cache_.emplace(source, strategy_thresholds(config_.strategy, inputs))
            .first->second;
    }

private:
    MecStatistics stats_of(const std::string& source) const {
        const auto it = source_moments_.find(source);
        return it == source_moments_.end() ? MecStatistics{} : it->second.stats();
    }

    MecStatistics category_stats_of(const std::string& source) const {
        const std::string category = config_.category_of(source);
        if (category.empty())
            throw DataError("source '" + source + "' has no category mapping; set category." +
                            source + " in the config");
        MixingMoments pooled;
        for (const auto& [other, moments] : source_moments_)
            if (config_.category_of(other) == category) pooled.merge(moments);
        return pooled.stats();
    }

    ThresholdPair donor_fit() const {
        const std::string& donor = config_.donor;
        for (const std::string& key :
             {donor, fit_key_source(donor), fit_key_category(donor), std::string(kCombinedKey)}) {
            if (key == kCombinedKey && donor != kCombinedKey) break;
            if (const auto fit = find_fit(fits_, key)) return *fit;
        }
        throw DataError("fits file has no thresholds for donor '" + donor + "'");
    }

    ThresholdPair fit_or_throw(const std::string& key, const std::string& what) const {
        if (const auto fit = find_fit(fits_, key)) return *fit;
        throw DataError("fits file has no thresholds for " + what + " (looked up '" + key +
                        "')");
    }

    const PipelineConfig& config_;
    FitsFile fits_;
    bool needs_statistics_ = false;
    std::map<std::string, MixingMoments> source_moments_;
    std::map<std::string, StrategySpec> cache_;
};

}  // namespace

void cmd_detect(const PipelineConfig& config, std::ostream& log) {
    require_input(config, "detect");
    StrategyResolver resolver(config);

    // First pass only when the strategy derives thresholds from corpus
    // statistics; fitted-pair strategies stream the input once.
    if (resolver.needs_statistics()) {
        TaggedReader reader(config.input);
        while (auto article = reader.next())
            for (const Span& span : article->spans)
                resolver.add_statistics(article->source,
                                        score_span(span, ThresholdPair{0.0, 0.0}));
    }

    OutputFile out(config.output);
    std::ofstream predictions_out;
    if (!config.predictions.empty()) {
        predictions_out.open(config.predictions);
        if (!predictions_out)
            throw DataError("cannot open predictions file: " + config.predictions);
    }

    const std::string strategy_name(to_string(config.strategy));
    out.stream() << dataset_header_line(strategy_name, Tagger(config.tagger).id()) << "\n";

    std::size_t articles = 0;
    std::size_t spans = 0;
    std::size_t mcts = 0;
    CorpusStatsAccumulator article_stats;
    Moments article_cmi;
    Moments mct_cmi;
    std::size_t mct_words = 0;
    std::size_t mct_chars = 0;

    TaggedReader reader(config.input);
    while (auto article = reader.next()) {
        ++articles;
        article_stats.add(*article);
        const StrategySpec& strategy = resolver.for_source(article->source);
        for (const Span& span : article->spans) {
            ++spans;
            std::vector<SpanScore> scores;
            scores.reserve(strategy.pairs.size());
            for (const ThresholdPair& pair : strategy.pairs)
                scores.push_back(score_span(span, pair));
            int votes = 0;
            for (const SpanScore& score : scores) votes += score.decision;
            const int decision =
                strategy.kind == StrategyKind::MDG ? (votes >= 2 ? 1 : 0) : scores[0].decision;
            for (const double cmi : scores[0].sentence_cmis) article_cmi.add(cmi);

            if (predictions_out.is_open())
                predictions_out << prediction_to_line(SpanPrediction{article->id,
                                                                     article->source, span.index,
                                                                     decision, strategy_name})
                                << "\n";
            if (decision != 1) continue;
            ++mcts;
            // Record measurements under the first pair that voted with the
            // final decision (the only pair for single-pair strategies).
            const SpanScore* contributing = &scores[0];
            for (const SpanScore& score : scores)
                if (score.decision == decision) {
                    contributing = &score;
                    break;
                }
            DatasetRecord record;
            record.article_id = article->id;
            record.source = article->source;
            record.span_index = span.index;
            record.sentence_count = span.sentences.size();
            record.n_cm = contributing->n_cm;
            record.mr = contributing->mr;
            record.strategy = strategy_name;
            record.thresholds = strategy.pairs;
            double cmi_sum = 0.0;
            for (const double cmi : contributing->sentence_cmis) {
                cmi_sum += cmi;
                mct_cmi.add(cmi);
            }
            record.avg_cmi =
                cmi_sum / static_cast<double>(contributing->sentence_cmis.size());
            std::string text;
            for (const Sentence& sentence : span.sentences) {
                if (!text.empty()) text += " ";
                text += sentence.text;
                for (const Token& token : sentence.tokens)
                    if (is_word_token(token)) ++mct_words;
            }
            mct_chars += uni::count_codepoints(text);
            record.text = std::move(text);
            out.stream() << dataset_record_to_line(record) << "\n";
        }
    }
    out.finish();
    if (predictions_out.is_open()) {
        predictions_out.flush();
        if (!predictions_out)
            throw DataError("failed writing predictions file: " + config.predictions);
    }

    if (articles == 0) {
        log << "no articles in " << config.input << "\n";
        return;
    }
    const CorpusStats stats = article_stats.finish();
    std::vector<std::vector<std::string>> rows{{"", "count", "avg CMI", "avg words",
                                                "avg chars"}};
    rows.push_back({"articles", std::to_string(articles), format_pct(article_cmi.mean()),
                    format_pct(stats.avg_words), format_pct(stats.avg_chars)});
    if (mcts > 0)
        rows.push_back({"MCTs", std::to_string(mcts), format_pct(mct_cmi.mean()),
                        format_pct(static_cast<double>(mct_words) / static_cast<double>(mcts)),
                        format_pct(static_cast<double>(mct_chars) /
                                   static_cast<double>(mcts))});
    print_table(log, rows);
    log << "strategy " << strategy_name << ": " << mcts << " code-mixed spans out of " << spans
        << " across " << articles << " articles ("
        << format_pct(static_cast<double>(mcts) / static_cast<double>(articles))
        << " MCTs/article)\n";
}

void cmd_eval(const PipelineConfig& config, std::ostream& log) {
    if (config.predictions.empty())
        throw UsageError("eval requires a predictions file (--predictions)");
    if (config.annotations.empty())
        throw UsageError("eval requires an annotation file (--annotations)");

    const auto predictions = read_predictions(config.predictions);
    const auto annotations = read_annotations(config.annotations);
    if (annotations.empty()) throw DataError("no annotations in " + config.annotations);

    std::map<std::pair<std::string, std::size_t>, const SpanPrediction*> by_key;
    std::map<std::string, std::size_t> spans_per_article;
    for (const SpanPrediction& prediction : predictions) {
        const auto [it, inserted] =
            by_key.insert({{prediction.article_id, prediction.span_index}, &prediction});
        if (!inserted)
            throw DataError("duplicate prediction for " + prediction.article_id + ":" +
                            std::to_string(prediction.span_index));
        ++spans_per_article[prediction.article_id];
    }

    // Group joined records by (source, strategy).
    std::map<std::pair<std::string, std::string>, PredictionSet> groups;
    PredictionSet all;
    std::string orphans;
    std::size_t orphan_count = 0;
    std::set<std::pair<std::string, std::size_t>> seen;
    for (const AnnotationRecord& annotation : annotations) {
        const auto key = std::make_pair(annotation.article_id, annotation.span_index);
        if (!seen.insert(key).second)
            throw DataError("duplicate annotation for " + annotation.article_id + ":" +
                            std::to_string(annotation.span_index));
        const auto it = by_key.find(key);
        if (it == by_key.end()) {
            ++orphan_count;
            if (orphan_count <= 10) {
                if (!orphans.empty()) orphans += ", ";
                orphans += annotation.article_id + ":" + std::to_string(annotation.span_index);
            }
            continue;
        }
        const PredictionRecord record{annotation.article_id, annotation.span_index,
                                      it->second->predicted, annotation.label};
        groups[{it->second->source, it->second->strategy}].records.push_back(record);
        all.records.push_back(record);
    }
    if (orphan_count > 0) {
        if (orphan_count > 10)
            orphans += ", and " + std::to_string(orphan_count - 10) + " more";
        throw DataError("annotations without matching predictions: " + orphans);
    }

    bool any_fmr_undefined = false;
    std::vector<std::vector<std::string>> rows{{"source", "strategy", "spans", "accuracy",
                                                "FMR", "D@10", "kappa"}};
    const auto add_row = [&](const std::string& source, const std::string& strategy,
                             const PredictionSet& set) {
        const EvalReport report = evaluate(set, spans_per_article);
        std::vector<int> predicted;
        std::vector<int> labels;
        for (const PredictionRecord& record : set.records) {
            predicted.push_back(record.predicted);
            labels.push_back(record.label);
        }
        any_fmr_undefined |= report.fmr_undefined;
        rows.push_back({source, strategy, std::to_string(set.records.size()),
                        format_pct(report.accuracy_pct),
                        format_pct(report.fmr_pct) + (report.fmr_undefined ? "*" : ""),
                        format_pct(report.d_at_10_pct),
                        format_pct(cohen_kappa(predicted, labels))});
    };
    for (const auto& [key, set] : groups) add_row(key.first, key.second, set);
    if (groups.size() > 1) add_row("(all)", "-", all);
    print_table(log, rows);
    if (any_fmr_undefined)
        log << "* no monolingual spans in the group; FMR undefined, reported as 0\n";
}

void cmd_stats(const PipelineConfig& config, std::ostream& log) {
    require_input(config, "stats");
    std::map<std::string, CorpusStatsAccumulator> corpus_by_source;
    CorpusStatsAccumulator corpus_all;
    std::map<std::string, MixingMoments> mixing_by_source;
    MixingMoments mixing_all;

    TaggedReader reader(config.input);
    while (auto article = reader.next()) {
        corpus_by_source[article->source].add(*article);
        corpus_all.add(*article);
        for (const Span& span : article->spans) {
            const SpanScore score = score_span(span, ThresholdPair{0.0, 0.0});
            mixing_by_source[article->source].add_span(score);
            mixing_all.add_span(score);
        }
    }

    const CorpusStats overall = corpus_all.finish();  // throws when empty

    std::vector<std::vector<std::string>> rows{{"source", "articles", "AW", "AC", "%H", "%E"}};
    const auto stats_row = [&](const std::string& name, const CorpusStats& stats) {
        rows.push_back({name, std::to_string(stats.articles), format_pct(stats.avg_words),
                        format_pct(stats.avg_chars), format_pct(stats.pct_hindi),
                        format_pct(stats.pct_english)});
    };
    for (const auto& [source, acc] : corpus_by_source) stats_row(source, acc.finish());
    if (corpus_by_source.size() > 1) stats_row("(all)", overall);
    print_table(log, rows);

    log << "\n";
    std::vector<std::vector<std::string>> mixing_rows{
        {"source", "spans", "mean CMI", "std CMI", "mean MR", "std MR"}};
    const auto mixing_row = [&](const std::string& name, const MixingMoments& moments) {
        const MecStatistics stats = moments.stats();
        mixing_rows.push_back({name, std::to_string(moments.spans), format_pct(stats.cmi_mean),
                               format_pct(stats.cmi_std), format_pct(stats.mr_mean),
                               format_pct(stats.mr_std)});
    };
    for (const auto& [source, moments] : mixing_by_source) mixing_row(source, moments);
    if (mixing_by_source.size() > 1) mixing_row("(all)", mixing_all);
    print_table(log, mixing_rows);
}

}  // namespace codemix

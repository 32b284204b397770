#ifndef CODEMIX_PIPELINE_HPP
#define CODEMIX_PIPELINE_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "codemix/lid.hpp"
#include "codemix/metrics.hpp"
#include "codemix/segment.hpp"
#include "codemix/thresholds.hpp"

namespace codemix {

// Everything a pipeline run needs: tagger, grid, strategy, segmentation
// convention, the source→category map, and file paths. Populated from a
// flat key=value config file; CLI flags override config values.
struct PipelineConfig {
    TaggerSpec tagger;
    GridSpec grid;
    StrategyKind strategy = StrategyKind::MDG;
    std::string donor = "combined";  // SDG donor grouping
    ParagraphBreak paragraph_break = ParagraphBreak::Blank;
    std::map<std::string, std::string> categories;  // source → speech|news

    std::string input;        // articles (tag) or tagged articles (later stages)
    std::string source;       // fallback source for input records without one
    std::string output;       // stage output path; empty = stdout
    std::string annotations;  // labels file (fit, eval, annotate resume)
    std::string fits;         // fitted-thresholds file (detect)
    std::string predictions;  // per-span decisions (detect out, eval in)
    bool write_surface = false;           // fit: include accuracy surfaces
    ThresholdPair score_thresholds;       // score subcommand
    unsigned long seed = 0;               // reserved; the pipeline is deterministic

    // Category for a source: explicit mapping, else the built-in default,
    // else "" (unknown).
    std::string category_of(const std::string& source) const;
};

// Defaults: lexicon tagger over the shipped wordlists, default grid, MDG,
// blank-line paragraphs, and the built-in source→category map.
PipelineConfig default_config();

// Reads a flat key=value file ('#' comments, blank lines ignored). Unknown
// keys and malformed values throw UsageError with the line number.
PipelineConfig load_config(const std::string& path);

// Applies one key=value setting; shared by the config reader and CLI flags.
void set_config_value(PipelineConfig& config, std::string_view key, std::string_view value);

// "alpha_low,alpha_high,alpha_step,beta_low,beta_high,beta_step"
GridSpec parse_grid(std::string_view csv);

// Pipeline stages. Each reads/writes the paths in the config, reports
// human-readable summaries on `log`, and throws Usage/Data/TaggerProtocol
// errors which the CLI maps onto exit codes.

// Segment + tag every article; write tagged-article lines; print a
// per-source token-share summary.
void cmd_tag(const PipelineConfig& config, std::ostream& log);

// Score every span of a tagged file under fixed thresholds; write span
// score records.
void cmd_score(const PipelineConfig& config, std::ostream& log);

// Interactive span labeling over a tagged file, resuming past any labels
// already in the output file. `interactive` reflects the caller's terminal
// check; false throws UsageError suggesting batch label import.
void cmd_annotate(const PipelineConfig& config, std::istream& ui_in, std::ostream& ui_out,
                  bool interactive);

// Grid-search fits per source, per category pool, and combined; write the
// fits file and print a per-grouping table.
void cmd_fit(const PipelineConfig& config, std::ostream& log);

// Classify every span under the configured strategy; write dataset records
// for positives (plus optional per-span predictions) and print a summary.
void cmd_detect(const PipelineConfig& config, std::ostream& log);

// Join predictions with annotation labels and print evaluation rows grouped
// by source and strategy.
void cmd_eval(const PipelineConfig& config, std::ostream& log);

// Corpus statistics (per source and overall) plus mixing-score statistics
// from a tagged file.
void cmd_stats(const PipelineConfig& config, std::ostream& log);

}  // namespace codemix

#endif  // CODEMIX_PIPELINE_HPP

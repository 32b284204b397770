#include <unistd.h>

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "codemix/errors.hpp"
#include "codemix/pipeline.hpp"
#include "codemix/records.hpp"

namespace {

// Config file first, then flags in command-line order: flags win.
using Overrides = std::vector<std::pair<std::string, std::string>>;

void add_value_flag(CLI::App* cmd, Overrides& overrides, const std::string& flag,
                    std::string key, const std::string& help) {
    cmd->add_option_function<std::string>(
        flag,
        [&overrides, key = std::move(key)](const std::string& value) {
            overrides.emplace_back(key, value);
        },
        help);
}

void add_bool_flag(CLI::App* cmd, Overrides& overrides, const std::string& flag, std::string key,
                   const std::string& help) {
    cmd->add_flag_callback(
        flag, [&overrides, key = std::move(key)] { overrides.emplace_back(key, "true"); }, help);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-sentential code-mixed span detection pipeline"};
    app.set_version_flag("--version", std::string(codemix::kToolVersion));
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file");

    Overrides overrides;
    add_value_flag(&app, overrides, "--tagger", "tagger",
                   "token tagger: lexicon, external or external:<command>");
    add_value_flag(&app, overrides, "--tagger-command", "tagger_command",
                   "external tagger command line");
    add_value_flag(&app, overrides, "--hindi-lexicon", "hindi_lexicon",
                   "romanized-Hindi wordlist path");
    add_value_flag(&app, overrides, "--english-lexicon", "english_lexicon",
                   "English wordlist path");
    add_bool_flag(&app, overrides, "--transliterate", "transliterate",
                  "romanize Devanagari tokens before lookup");
    add_value_flag(&app, overrides, "--paragraph-break", "paragraph_break",
                   "paragraph boundary: blank (default) or newline");
    add_value_flag(&app, overrides, "--grid", "grid",
                   "search grid: alpha_low,alpha_high,alpha_step,beta_low,beta_high,beta_step");
    add_value_flag(&app, overrides, "--strategy", "strategy",
                   "threshold generalization: LA, GA, ALG, SDG or MDG");
    add_value_flag(&app, overrides, "--donor", "donor",
                   "SDG donor grouping (source, category or combined)");
    add_value_flag(&app, overrides, "--seed", "seed", "reserved; the pipeline is deterministic");
    add_value_flag(&app, overrides, "--input", "input", "input file");
    add_value_flag(&app, overrides, "--source", "source",
                   "fallback source for records without one");
    add_value_flag(&app, overrides, "--output", "output", "output file (default: stdout)");
    add_value_flag(&app, overrides, "--annotations", "annotations", "annotation records file");
    add_value_flag(&app, overrides, "--fits", "fits", "fitted thresholds file");
    add_value_flag(&app, overrides, "--predictions", "predictions", "per-span decisions file");
    add_value_flag(&app, overrides, "--alpha", "alpha", "sentence CMI threshold (score)");
    add_value_flag(&app, overrides, "--beta", "beta", "multilinguality ratio threshold (score)");
    add_bool_flag(&app, overrides, "--surface", "surface",
                  "include full accuracy surfaces in the fits file");

    CLI::App* tag = app.add_subcommand("tag", "segment articles and tag every token");
    CLI::App* score = app.add_subcommand("score", "score spans under fixed thresholds");
    CLI::App* annotate = app.add_subcommand("annotate", "label spans interactively");
    CLI::App* fit = app.add_subcommand("fit", "grid-search thresholds on annotated spans");
    CLI::App* detect = app.add_subcommand("detect", "emit code-mixed spans as a dataset");
    CLI::App* eval = app.add_subcommand("eval", "compare predictions against labels");
    CLI::App* stats = app.add_subcommand("stats", "corpus and mixing statistics");
    for (CLI::App* sub : {tag, score, annotate, fit, detect, eval, stats}) {
        sub->fallthrough();
        // Shared flags live on the root command; point there from each
        // subcommand's own help page.
        sub->footer("Shared flags (--input, --output, --config, ...) apply to every\n"
                    "subcommand; run with --help (no subcommand) for the full list.");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        codemix::PipelineConfig config =
            config_path.empty() ? codemix::default_config() : codemix::load_config(config_path);
        for (const auto& [key, value] : overrides)
            codemix::set_config_value(config, key, value);

        // Record output on stdout moves summaries to stderr.
        const bool data_on_stdout = config.output.empty();
        std::ostream& log = data_on_stdout ? std::cerr : std::cout;

        if (tag->parsed()) {
            codemix::cmd_tag(config, log);
        } else if (score->parsed()) {
            codemix::cmd_score(config, log);
        } else if (annotate->parsed()) {
            const bool interactive = isatty(STDIN_FILENO) == 1 && isatty(STDOUT_FILENO) == 1;
            codemix::cmd_annotate(config, std::cin, std::cout, interactive);
        } else if (fit->parsed()) {
            codemix::cmd_fit(config, std::cout);
        } else if (detect->parsed()) {
            codemix::cmd_detect(config, log);
        } else if (eval->parsed()) {
            codemix::cmd_eval(config, std::cout);
        } else if (stats->parsed()) {
            codemix::cmd_stats(config, std::cout);
        }
        return 0;
    } catch (const codemix::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const codemix::TaggerProtocolError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const codemix::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// End-to-end tests of the installed binary: exit codes, stream discipline
// (records on stdout, summaries on stderr) and a full tag→fit→detect→eval
// round trip. The binary path arrives in CODEMIX_BIN.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "codemix/records.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
    return path.string();
}

fs::path work_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "codemix_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string binary() {
    const char* bin = std::getenv("CODEMIX_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CODEMIX_BIN must point at the built binary");
    return bin;
}

// Runs the binary with the given arguments, optionally feeding stdin.
RunResult run(const std::string& args, const std::string& stdin_data = "") {
    const fs::path out_path = work_dir() / "run.out";
    const fs::path err_path = work_dir() / "run.err";
    std::string command = binary() + " " + args;
    if (!stdin_data.empty()) {
        const fs::path in_path = work_dir() / "run.in";
        write_file(in_path, stdin_data);
        command += " < '" + in_path.string() + "'";
    } else {
        command += " < /dev/null";
    }
    command += " > '" + out_path.string() + "' 2> '" + err_path.string() + "'";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

// Shared fixture files: lexicons, a raw corpus, and common flag strings.
struct Files {
    std::string articles;
    std::string lexicon_flags;
};

const Files& files() {
    static const Files f = [] {
        Files built;
        const std::string hi = write_file(work_dir() / "hi.txt", "desh\nbaat\nhai\nki\naur\n");
        const std::string en = write_file(work_dir() / "en.txt", "the\ngreat\nvirus\ntalk\n");
        nlohmann::json a1{{"id", "A1"},
                          {"source", "AAP"},
                          {"body", "desh ki baat hai. desh great hai.\n\ndesh ki baat. "
                                   "virus talk great."}};
        nlohmann::json a2{{"id", "A2"},
                          {"source", "DB"},
                          {"body", "the great talk. desh aur baat.\n\nvirus hai."}};
        built.articles =
            write_file(work_dir() / "articles.jsonl", a1.dump() + "\n" + a2.dump() + "\n");
        built.lexicon_flags = "--hindi-lexicon '" + hi + "' --english-lexicon '" + en + "'";
        return built;
    }();
    return f;
}

std::string path_of(const char* name) { return (work_dir() / name).string(); }

}  // namespace

TEST_CASE("help and version exit cleanly") {
    const RunResult help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("tag") != std::string::npos);
    CHECK(help.out.find("detect") != std::string::npos);

    const RunResult version = run("--version");
    CHECK(version.exit_code == 0);
    CHECK(version.out.find("0.1.0") != std::string::npos);

    const RunResult sub_help = run("tag --help");
    CHECK(sub_help.exit_code == 0);
    CHECK(sub_help.out.find("--input") != std::string::npos);
}

TEST_CASE("usage mistakes exit 1 with an error line") {
    const RunResult none = run("");
    CHECK(none.exit_code == 1);
    CHECK(none.err.find("error:") != std::string::npos);

    const RunResult unknown = run("frobnicate");
    CHECK(unknown.exit_code == 1);

    const RunResult no_input = run("tag " + files().lexicon_flags);
    CHECK(no_input.exit_code == 1);
    CHECK(no_input.err.find("input") != std::string::npos);
}

TEST_CASE("missing data files exit 2") {
    const RunResult result =
        run("tag --input /nonexistent/corpus.jsonl " + files().lexicon_flags);
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("error:") != std::string::npos);
}

TEST_CASE("a failing external tagger exits 3") {
    const RunResult result = run("tag --input '" + files().articles +
                                 "' --tagger external --tagger-command false");
    CHECK(result.exit_code == 3);
    CHECK(result.err.find("error:") != std::string::npos);
}

TEST_CASE("tag writes records to stdout and the summary to stderr") {
    const RunResult result = run("tag --input '" + files().articles + "' " +
                                 files().lexicon_flags);
    CHECK(result.exit_code == 0);
    // stdout holds exactly the two records, parseable as tagged articles
    std::istringstream out(result.out);
    std::string line;
    std::size_t records = 0;
    while (std::getline(out, line)) {
        if (line.empty()) continue;
        CHECK_NOTHROW(codemix::tagged_article_from_line(line));
        ++records;
    }
    CHECK(records == 2);
    CHECK(result.err.find("tagged 2 articles") != std::string::npos);
    CHECK(result.out.find("tagged 2 articles") == std::string::npos);
}

TEST_CASE("tag runs are byte-identical and the summary moves to stdout with --output") {
    const std::string first = path_of("tagged_one.jsonl");
    const std::string second = path_of("tagged_two.jsonl");
    const RunResult one = run("tag --input '" + files().articles + "' " +
                              files().lexicon_flags + " --output '" + first + "'");
    const RunResult two = run("tag --input '" + files().articles + "' " +
                              files().lexicon_flags + " --output '" + second + "'");
    CHECK(one.exit_code == 0);
    CHECK(two.exit_code == 0);
    CHECK(read_file(first) == read_file(second));
    CHECK(one.out.find("tagged 2 articles") != std::string::npos);
    CHECK(one.err.empty());
}

TEST_CASE("the full pipeline round-trips through the CLI") {
    const std::string tagged = path_of("pipeline_tagged.jsonl");
    REQUIRE(run("tag --input '" + files().articles + "' " + files().lexicon_flags +
                " --output '" + tagged + "'")
                .exit_code == 0);

    const std::string labels =
        write_file(work_dir() / "labels.jsonl",
                   codemix::annotation_to_line({"A1", 0, 1}) + "\n" +
                       codemix::annotation_to_line({"A1", 1, 0}) + "\n" +
                       codemix::annotation_to_line({"A2", 0, 0}) + "\n" +
                       codemix::annotation_to_line({"A2", 1, 0}) + "\n");

    const std::string fits = path_of("fits.json");
    const RunResult fit = run("fit --input '" + tagged + "' --annotations '" + labels +
                              "' --output '" + fits + "' " + files().lexicon_flags);
    CHECK(fit.exit_code == 0);
    CHECK(fit.out.find("combined") != std::string::npos);
    CHECK(nlohmann::json::parse(read_file(fits))["fits"].size() == 5);

    const std::string dataset = path_of("dataset.jsonl");
    const std::string predictions = path_of("predictions.jsonl");
    const RunResult detect =
        run("detect --input '" + tagged + "' --strategy mdg --fits '" + fits +
            "' --output '" + dataset + "' --predictions '" + predictions + "' " +
            files().lexicon_flags);
    CHECK(detect.exit_code == 0);
    CHECK(detect.out.find("strategy MDG") != std::string::npos);
    const std::string dataset_text = read_file(dataset);
    CHECK(dataset_text.find("\"record\":\"header\"") != std::string::npos);
    CHECK(dataset_text.find("\"record\":\"mct\"") != std::string::npos);

    const RunResult eval = run("eval --predictions '" + predictions + "' --annotations '" +
                               labels + "'");
    CHECK(eval.exit_code == 0);
    CHECK(eval.out.find("accuracy") != std::string::npos);
    CHECK(eval.out.find("100.0000") != std::string::npos);

    const RunResult stats = run("stats --input '" + tagged + "'");
    CHECK(stats.exit_code == 0);
    CHECK(stats.out.find("mean CMI") != std::string::npos);
}

TEST_CASE("score applies fixed thresholds from flags") {
    const std::string tagged = path_of("score_tagged.jsonl");
    REQUIRE(run("tag --input '" + files().articles + "' " + files().lexicon_flags +
                " --output '" + tagged + "'")
                .exit_code == 0);
    const RunResult result = run("score --input '" + tagged + "' --alpha 25 --beta 0.35");
    CHECK(result.exit_code == 0);
    CHECK(result.err.find("alpha=25") != std::string::npos);
    std::istringstream out(result.out);
    std::string line;
    std::size_t records = 0;
    while (std::getline(out, line))
        if (!line.empty()) {
            CHECK(nlohmann::json::parse(line).contains("decision"));
            ++records;
        }
    CHECK(records == 4);
}

TEST_CASE("config files steer the run and flags override them") {
    const std::string tagged = path_of("cfg_tagged.jsonl");
    const std::string cfg = write_file(work_dir() / "run.cfg",
                                       "input = " + files().articles + "\n" +
                                           "output = " + tagged + "\n");
    const RunResult result = run("tag --config '" + cfg + "' " + files().lexicon_flags);
    CHECK(result.exit_code == 0);
    CHECK(fs::exists(tagged));

    const std::string bad = write_file(work_dir() / "bad.cfg", "nonsense = 1\n");
    const RunResult broken = run("tag --config '" + bad + "'");
    CHECK(broken.exit_code == 1);
    CHECK(broken.err.find("nonsense") != std::string::npos);
}

TEST_CASE("annotate refuses a piped session") {
    const std::string tagged = path_of("annotate_tagged.jsonl");
    REQUIRE(run("tag --input '" + files().articles + "' " + files().lexicon_flags +
                " --output '" + tagged + "'")
                .exit_code == 0);
    const RunResult result = run("annotate --input '" + tagged + "' --output '" +
                                     path_of("annotate_labels.jsonl") + "'",
                                 "y\n");
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("interactive") != std::string::npos);
}

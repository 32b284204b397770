#include <filesystem>
#include <fstream>
#include <string>

#include "codemix/errors.hpp"
#include "codemix/records.hpp"
#include "doctest.h"
#include "json.hpp"
#include "testutil.hpp"

using namespace codemix;
using nlohmann::json;

namespace {

constexpr LanguageTag H = LanguageTag::Hindi;
constexpr LanguageTag E = LanguageTag::English;

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

Article sample_article() {
    Article art;
    art.id = "A1";
    art.source = "TOI";
    art.title = "शीर्षक";
    art.category = "news";
    art.date = "2021-03-01";
    art.body = "raw body text that never leaves the process";
    art.chars = 42;
    Span span;
    span.index = 0;
    span.eligible = true;
    Sentence one;
    one.text = "desh ki baat.";
    one.tokens = {testutil::make_token("desh", H), testutil::make_token("ki", H),
                  testutil::make_token("baat", H),
                  testutil::make_token(".", LanguageTag::Other, Script::Neutral)};
    one.cmi = 0.0;
    Sentence two;
    two.text = "great baat!";
    two.tokens = {testutil::make_token("great", E), testutil::make_token("baat", H),
                  testutil::make_token("!", LanguageTag::Other, Script::Neutral)};
    two.cmi = 50.0;
    span.sentences = {one, two};
    art.spans.push_back(span);
    return art;
}

}  // namespace

TEST_CASE("tagged article round-trips every serializable field") {
    const Article art = sample_article();
    const std::string line = tagged_article_to_line(art);
    CHECK(line.find('\n') == std::string::npos);
    const Article back = tagged_article_from_line(line);
    CHECK(back.id == art.id);
    CHECK(back.source == art.source);
    CHECK(back.title == art.title);
    CHECK(back.category == art.category);
    CHECK(back.date == art.date);
    CHECK(back.chars == art.chars);
    REQUIRE(back.spans.size() == 1);
    CHECK(back.spans[0].eligible);
    REQUIRE(back.spans[0].sentences.size() == 2);
    const Sentence& two = back.spans[0].sentences[1];
    CHECK(two.text == "great baat!");
    REQUIRE(two.tokens.size() == 3);
    CHECK(two.tokens[0].surface == "great");
    CHECK(two.tokens[0].tag == E);
    CHECK(two.tokens[2].script == Script::Neutral);
    REQUIRE(two.cmi.has_value());
    CHECK(*two.cmi == 50.0);
}

TEST_CASE("the raw body never reaches the tagged record") {
    const Article art = sample_article();
    const std::string line = tagged_article_to_line(art);
    CHECK(line.find("raw body") == std::string::npos);
    CHECK_FALSE(json::parse(line).contains("body"));
    CHECK(tagged_article_from_line(line).body.empty());
}

TEST_CASE("optional metadata is omitted, not emitted as null") {
    Article art = sample_article();
    art.title.reset();
    art.category.reset();
    art.date.reset();
    const json j = json::parse(tagged_article_to_line(art));
    CHECK_FALSE(j.contains("title"));
    CHECK_FALSE(j.contains("category"));
    const Article back = tagged_article_from_line(j.dump());
    CHECK_FALSE(back.title.has_value());
}

TEST_CASE("untagged tokens serialize with a null tag") {
    Article art = sample_article();
    art.spans[0].sentences[0].tokens[0].tag.reset();
    const Article back = tagged_article_from_line(tagged_article_to_line(art));
    CHECK_FALSE(back.spans[0].sentences[0].tokens[0].tag.has_value());
}

TEST_CASE("tagged article parsing rejects malformed lines with detail") {
    CHECK_THROWS_AS(tagged_article_from_line("not json"), DataError);
    CHECK_THROWS_AS(tagged_article_from_line("[1,2]"), DataError);
    CHECK_THROWS_AS(tagged_article_from_line(R"({"id":"a"})"), DataError);  // missing fields
    // token triple with a bogus tag name
    const std::string bad = R"({"id":"a","source":"s","chars":1,"spans":[{"index":0,)"
                            R"("eligible":false,"sentences":[{"text":"x","tokens":)"
                            R"([["x","Roman","Klingon"]]}]}]})";
    CHECK_THROWS_AS(tagged_article_from_line(bad), DataError);
    CHECK_THROWS_WITH_AS(tagged_article_from_line(R"({"id":"a","source":"s","chars":1})"),
                         doctest::Contains("spans"), DataError);
}

TEST_CASE("annotation records round-trip and validate the label") {
    const AnnotationRecord record{"A1", 3, 1};
    CHECK(annotation_from_line(annotation_to_line(record)) == record);
    CHECK_THROWS_WITH_AS(annotation_from_line(R"({"article_id":"a","span_index":0,"label":2})"),
                         doctest::Contains("label"), DataError);
    CHECK_THROWS_AS(annotation_from_line(R"({"article_id":"a","label":1})"), DataError);
}

TEST_CASE("annotation files skip blank lines and cite path and line on errors") {
    const auto path = temp_file("codemix_test_annotations.jsonl",
                                annotation_to_line({"A1", 0, 1}) + "\n\n   \n" +
                                    annotation_to_line({"A1", 1, 0}) + "\n");
    const auto records = read_annotations(path.string());
    REQUIRE(records.size() == 2);
    CHECK(records[1] == AnnotationRecord{"A1", 1, 0});

    const auto bad = temp_file("codemix_test_annotations_bad.jsonl",
                               annotation_to_line({"A1", 0, 1}) + "\nnot json\n");
    CHECK_THROWS_WITH_AS(read_annotations(bad.string()), doctest::Contains(":2:"), DataError);
    CHECK_THROWS_AS(read_annotations("/nonexistent/annotations.jsonl"), DataError);
}

TEST_CASE("prediction records round-trip and validate the decision") {
    const SpanPrediction record{"A1", "TOI", 2, 1, "MDG"};
    CHECK(prediction_from_line(prediction_to_line(record)) == record);
    CHECK_THROWS_AS(
        prediction_from_line(
            R"({"article_id":"a","source":"s","span_index":0,"predicted":7,"strategy":"LA"})"),
        DataError);

    const auto path = temp_file("codemix_test_predictions.jsonl",
                                prediction_to_line(record) + "\n" +
                                    prediction_to_line({"A2", "TOI", 0, 0, "MDG"}) + "\n");
    const auto records = read_predictions(path.string());
    REQUIRE(records.size() == 2);
    CHECK(records[0] == record);
}

TEST_CASE("span score lines carry the scoring trail but not the per-sentence flags") {
    SpanScore score;
    score.span_index = 4;
    score.sentence_cmis = {0.0, 50.0};
    score.flags = {0, 1};
    score.n_cm = 1;
    score.mr = 0.5;
    score.decision = 1;
    const json j = json::parse(span_score_to_line("A1", score));
    CHECK(j["article_id"] == "A1");
    CHECK(j["span_index"] == 4);
    CHECK(j["sentence_cmis"] == json::array({0.0, 50.0}));
    CHECK(j["n_cm"] == 1);
    CHECK(j["mr"] == 0.5);
    CHECK(j["decision"] == 1);
    CHECK_FALSE(j.contains("flags"));  // recoverable from cmis and alpha
}

TEST_CASE("dataset records tag themselves and list the deciding thresholds") {
    DatasetRecord record;
    record.article_id = "A1";
    record.source = "TOI";
    record.span_index = 1;
    record.text = "desh ki baat. great baat!";
    record.sentence_count = 2;
    record.n_cm = 1;
    record.mr = 0.5;
    record.avg_cmi = 25.0;
    record.strategy = "MDG";
    record.thresholds = {{25.0, 0.35}, {30.0, 0.4}, {29.0, 0.45}};
    const json j = json::parse(dataset_record_to_line(record));
    CHECK(j["record"] == "mct");
    CHECK(j["text"] == record.text);
    CHECK(j["sentence_count"] == 2);
    CHECK(j["thresholds"].size() == 3);
    CHECK(j["thresholds"][0] == json::array({25.0, 0.35}));
}

TEST_CASE("dataset headers carry tool and run provenance") {
    const json j = json::parse(dataset_header_line("SDG", "lexicon:hi.txt,en.txt"));
    CHECK(j["record"] == "header");
    CHECK(j["tool"] == "codemix");
    CHECK(j["version"] == std::string(kToolVersion));
    CHECK(j["strategy"] == "SDG");
    CHECK(j["tagger"] == "lexicon:hi.txt,en.txt");
}

TEST_CASE("fits files round-trip fits, grid and surfaces") {
    FitsFile fits;
    fits.tagger_id = "lexicon:x";
    fits.grid.alpha_high = 10.0;
    fits.fits.push_back({"source:TOI", {25.0, 0.35}, 100.0, 40});
    fits.fits.push_back({"combined", {29.0, 0.45}, 91.5, 80});
    fits.surfaces["combined"] = {{{0.0, 0.0}, 50.0}, {{1.0, 0.025}, 75.0}};

    const auto path = std::filesystem::temp_directory_path() / "codemix_test_fits.json";
    write_fits_file(path.string(), fits);
    const FitsFile back = read_fits_file(path.string());
    CHECK(back.tagger_id == fits.tagger_id);
    CHECK(back.grid.alpha_high == 10.0);
    CHECK(back.grid.beta_step == fits.grid.beta_step);
    REQUIRE(back.fits.size() == 2);
    CHECK(back.fits[0].name == "source:TOI");
    CHECK(back.fits[0].thresholds.alpha == 25.0);
    CHECK(back.fits[0].accuracy == 100.0);
    CHECK(back.fits[1].spans == 80);
    REQUIRE(back.surfaces.count("combined") == 1);
    REQUIRE(back.surfaces.at("combined").size() == 2);
    CHECK(back.surfaces.at("combined")[1].accuracy == 75.0);

    CHECK(find_fit(back, "combined").has_value());
    CHECK(find_fit(back, "combined")->beta == 0.45);
    CHECK_FALSE(find_fit(back, "source:missing").has_value());
}

TEST_CASE("fits files without surfaces omit the key entirely") {
    FitsFile fits;
    fits.fits.push_back({"combined", {1.0, 0.1}, 80.0, 5});
    const auto path = std::filesystem::temp_directory_path() / "codemix_test_fits_plain.json";
    write_fits_file(path.string(), fits);
    std::ifstream in(path);
    json j;
    in >> j;
    CHECK_FALSE(j.contains("surfaces"));
}

TEST_CASE("fits file errors carry the path") {
    CHECK_THROWS_AS(read_fits_file("/nonexistent/fits.json"), DataError);
    const auto path = temp_file("codemix_test_fits_bad.json", "{\"fits\": []}");
    CHECK_THROWS_WITH_AS(read_fits_file(path.string()), doctest::Contains("grid"), DataError);
    const auto garbage = temp_file("codemix_test_fits_garbage.json", "!!");
    CHECK_THROWS_AS(read_fits_file(garbage.string()), DataError);
}

TEST_CASE("tagged article lines survive a file round trip with Devanagari intact") {
    const Article art = sample_article();
    const auto path = temp_file("codemix_test_tagged.jsonl", tagged_article_to_line(art) + "\n");
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    const Article back = tagged_article_from_line(line);
    REQUIRE(back.title.has_value());
    CHECK(*back.title == "शीर्षक");
}

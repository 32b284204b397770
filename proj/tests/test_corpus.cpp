#include <sstream>
#include <string>

#include "codemix/corpus.hpp"
#include "codemix/errors.hpp"
#include "codemix/text.hpp"
#include "doctest.h"

using namespace codemix;

TEST_CASE("reader yields articles in file order with all fields") {
    std::istringstream in(
        R"({"id":"a1","source":"AAP","title":"T","category":"speech","date":"2021-01-02","body":"Pehli baat.\n\nDusri baat."})"
        "\n"
        R"({"id":"a2","source":"DJ","body":"Chhota lekh."})"
        "\n");
    ArticleReader reader(in);

    auto first = reader.next();
    REQUIRE(first.has_value());
    CHECK(first->id == "a1");
    CHECK(first->source == "AAP");
    CHECK(first->title == "T");
    CHECK(first->category == "speech");
    CHECK(first->date == "2021-01-02");
    CHECK(first->body == "Pehli baat.\n\nDusri baat.");
    CHECK(first->chars == first->body.size());  // ascii body: bytes = code points

    auto second = reader.next();
    REQUIRE(second.has_value());
    CHECK(second->id == "a2");
    CHECK_FALSE(second->title.has_value());
    CHECK_FALSE(second->category.has_value());

    CHECK_FALSE(reader.next().has_value());
    CHECK(reader.articles_read() == 2);
    CHECK(reader.errors().empty());
}

TEST_CASE("character count is code points, not bytes") {
    std::istringstream in(R"({"id":"a","source":"s","body":"देश"})" "\n");
    ArticleReader reader(in);
    auto article = reader.next();
    REQUIRE(article.has_value());
    CHECK(article->chars == 3);
    CHECK(article->body.size() == 9);
}

TEST_CASE("body text is normalized on read") {
    // e + combining acute arrives decomposed, stored composed
    std::istringstream in("{\"id\":\"a\",\"source\":\"s\",\"body\":\"caf\\u0065\\u0301\"}\n");
    ArticleReader reader(in);
    auto article = reader.next();
    REQUIRE(article.has_value());
    CHECK(article->body == "café");
    CHECK(article->chars == 4);
}

TEST_CASE("a malformed record is skipped and reported, the rest survive") {
    std::istringstream in(
        R"({"id":"ok1","source":"s","body":"A."})"
        "\n"
        "this is not a record\n"
        R"({"id":"ok2","source":"s","body":"B."})"
        "\n");
    ArticleReader reader(in);
    CHECK(reader.next()->id == "ok1");
    CHECK(reader.next()->id == "ok2");
    CHECK_FALSE(reader.next().has_value());
    REQUIRE(reader.errors().size() == 1);
    CHECK(reader.errors()[0].line_number == 2);
}

TEST_CASE("missing required fields are per-record errors") {
    std::istringstream in(
        R"({"source":"s","body":"no id"})"
        "\n"
        R"({"id":"","source":"s","body":"empty id"})"
        "\n"
        R"({"id":"x","source":"s"})"
        "\n"
        R"({"id":"y","source":"s","body":42})"
        "\n");
    ArticleReader reader(in);
    CHECK_FALSE(reader.next().has_value());
    CHECK(reader.errors().size() == 4);
}

TEST_CASE("fallback source applies only when the record has none") {
    std::istringstream in(
        R"({"id":"a","body":"No source field."})"
        "\n"
        R"({"id":"b","source":"DJ","body":"Has one."})"
        "\n");
    ArticleReader reader(in, "PIB");
    CHECK(reader.next()->source == "PIB");
    CHECK(reader.next()->source == "DJ");
}

TEST_CASE("missing source without a fallback is an error") {
    std::istringstream in(R"({"id":"a","body":"text"})" "\n");
    ArticleReader reader(in);
    CHECK_FALSE(reader.next().has_value());
    REQUIRE(reader.errors().size() == 1);
    CHECK(reader.errors()[0].line_number == 1);
}

TEST_CASE("blank lines are ignored, not errors") {
    std::istringstream in("\n\n" R"({"id":"a","source":"s","body":"x"})" "\n\n");
    ArticleReader reader(in);
    CHECK(reader.next()->id == "a");
    CHECK_FALSE(reader.next().has_value());
    CHECK(reader.errors().empty());
}

TEST_CASE("empty input yields an empty stream with zero errors") {
    std::istringstream in("");
    ArticleReader reader(in);
    CHECK_FALSE(reader.next().has_value());
    CHECK(reader.articles_read() == 0);
    CHECK(reader.errors().empty());
}

TEST_CASE("unreadable path throws at construction") {
    CHECK_THROWS_AS(ArticleReader("/nonexistent/articles.jsonl"), DataError);
    CHECK_THROWS_AS(ingest_articles("/nonexistent/articles.jsonl"), DataError);
}

TEST_CASE("language tag and script round-trip through their names") {
    for (const LanguageTag tag : {LanguageTag::Hindi, LanguageTag::English, LanguageTag::Other})
        CHECK(language_tag_from_string(to_string(tag)) == tag);
    for (const Script script :
         {Script::Devanagari, Script::Roman, Script::Mixed, Script::Neutral})
        CHECK(script_from_string(to_string(script)) == script);
    CHECK_THROWS_AS(language_tag_from_string("klingon"), DataError);
    CHECK_THROWS_AS(script_from_string("wingdings"), DataError);
}

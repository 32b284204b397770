#include "codemix/corpus.hpp"

#include <fstream>
#include <iostream>
#include <istream>

#include "codemix/errors.hpp"
#include "codemix/unicode.hpp"
#include "json.hpp"

namespace codemix {

std::string_view to_string(LanguageTag tag) {
    switch (tag) {
        case LanguageTag::Hindi: return "hi";
        case LanguageTag::English: return "en";
        case LanguageTag::Other: return "other";
    }
    return "other";
}

LanguageTag language_tag_from_string(std::string_view s) {
    if (s == "hi") return LanguageTag::Hindi;
    if (s == "en") return LanguageTag::English;
    if (s == "other") return LanguageTag::Other;
    throw DataError("unknown language tag '" + std::string(s) + "'");
}

std::string_view to_string(Script script) {
    switch (script) {
        case Script::Devanagari: return "devanagari";
        case Script::Roman: return "roman";
        case Script::Mixed: return "mixed";
        case Script::Neutral: return "neutral";
    }
    return "neutral";
}

Script script_from_string(std::string_view s) {
    if (s == "devanagari") return Script::Devanagari;
    if (s == "roman") return Script::Roman;
    if (s == "mixed") return Script::Mixed;
    if (s == "neutral") return Script::Neutral;
    throw DataError("unknown script '" + std::string(s) + "'");
}

namespace {

using nlohmann::json;

std::optional<std::string> optional_text(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw DataError("field '" + std::string(key) + "' must be text");
    return uni::nfc(it->get<std::string>());
}

bool blank_line(const std::string& line) {
    for (const char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

}  // namespace

ArticleReader::ArticleReader(std::istream& in, std::string fallback_source)
    : in_(&in), fallback_source_(std::move(fallback_source)) {}

ArticleReader::ArticleReader(const std::string& path, std::string fallback_source)
    : owned_(std::make_unique<std::ifstream>(path)),
      in_(owned_.get()),
      fallback_source_(std::move(fallback_source)) {
    if (!static_cast<std::ifstream&>(*owned_).is_open())
        throw DataError("cannot open article file: " + path);
}

std::optional<Article> ArticleReader::next() {
    std::string line;
    while (std::getline(*in_, line)) {
        ++line_number_;
        if (blank_line(line)) continue;
        try {
            const json j = json::parse(line);
            if (!j.is_object()) throw DataError("record is not an object");
            Article article;
            auto id = optional_text(j, "id");
            if (!id || id->empty()) throw DataError("missing or empty 'id'");
            article.id = std::move(*id);
            auto source = optional_text(j, "source");
            article.source = source ? std::move(*source) : fallback_source_;
            if (article.source.empty())
                throw DataError("missing 'source' and no fallback source configured");
            const auto body = j.find("body");
            if (body == j.end() || !body->is_string())
                throw DataError("missing or non-text 'body'");
            article.body = uni::nfc(body->get<std::string>());
            article.chars = uni::count_codepoints(article.body);
            article.title = optional_text(j, "title");
            article.category = optional_text(j, "category");
            article.date = optional_text(j, "date");
            ++articles_read_;
            return article;
        } catch (const json::exception& e) {
            errors_.push_back({line_number_, e.what()});
        } catch (const DataError& e) {
            errors_.push_back({line_number_, e.what()});
        }
    }
    return std::nullopt;
}

std::vector<Article> ingest_articles(const std::string& path, const std::string& fallback_source,
                                     std::vector<IngestError>* errors) {
    ArticleReader reader(path, fallback_source);
    std::vector<Article> articles;
    while (auto article = reader.next()) articles.push_back(std::move(*article));
    if (errors) {
        errors->insert(errors->end(), reader.errors().begin(), reader.errors().end());
    } else {
        for (const IngestError& e : reader.errors())
            std::cerr << path << ":" << e.line_number << ": skipped record: " << e.message << "\n";
    }
    return articles;
}

}  // namespace codemix

#ifndef CODEMIX_TEXT_HPP
#define CODEMIX_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codemix {

enum class LanguageTag { Hindi, English, Other };

// Other subsumes language-independent tokens: named entities written in
// neither target script, numbers, punctuation, abbreviations, mentions,
// hashtags.
enum class Script { Devanagari, Roman, Mixed, Neutral };

std::string_view to_string(LanguageTag tag);
std::string_view to_string(Script script);
LanguageTag language_tag_from_string(std::string_view s);  // "hi" | "en" | "other"
Script script_from_string(std::string_view s);

struct Token {
    std::string surface;  // non-empty
    Script script = Script::Neutral;
    std::optional<LanguageTag> tag;  // unset until language annotation
};

struct Sentence {
    std::string text;  // raw sentence string, surrounding whitespace trimmed
    std::vector<Token> tokens;
    std::optional<double> cmi;  // cached; equals cmi_score(tokens) when set
};

// A paragraph-delimited run of consecutive sentences. Only spans with more
// than one sentence are eligible for a positive code-mixed decision.
struct Span {
    std::vector<Sentence> sentences;
    std::size_t index = 0;  // ordinal within the article, 0-based
    bool eligible = false;  // sentence count > 1
};

struct Article {
    std::string id;
    std::string source;
    std::optional<std::string> title;  // metadata only, never part of a span
    std::optional<std::string> category;
    std::optional<std::string> date;
    std::string body;  // raw text, line breaks preserved
    std::size_t chars = 0;  // code points of the NFC body, kept for statistics
    std::vector<Span> spans;
};

}  // namespace codemix

#endif  // CODEMIX_TEXT_HPP

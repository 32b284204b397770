#ifndef CODEMIX_LID_HPP
#define CODEMIX_LID_HPP

#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "codemix/text.hpp"

namespace codemix {

enum class TaggerKind { Lexicon, External };

// How to tag tokens: the built-in lexicon tagger (two wordlists) or an
// external process speaking the one-token-per-line protocol. When
// `transliterate` is set, Devanagari tokens are romanized before lookup
// instead of being tagged Hindi directly.
struct TaggerSpec {
    TaggerKind kind = TaggerKind::Lexicon;
    std::string hindi_lexicon;    // path, Lexicon kind
    std::string english_lexicon;  // path, Lexicon kind
    std::string command;          // shell command, External kind
    bool transliterate = false;
};

// Case-insensitive membership tagger over two wordlists. Priority rule for
// Roman-script tokens: in exactly one lexicon → that language; in both or
// neither → Other (ambiguous romanized forms are the known Hinglish failure
// mode, so we decline to guess).
class LexiconTagger {
public:
    LexiconTagger() = default;  // empty; load/from_words are the real constructors

    // Loads wordlist files: one lowercase form per line, UTF-8, '#' comment
    // lines ignored. Throws DataError on unreadable or empty lists.
    static LexiconTagger load(const std::string& hindi_path, const std::string& english_path);
    static LexiconTagger from_words(std::vector<std::string> hindi_roman,
                                    std::vector<std::string> english);

    LanguageTag lookup(std::string_view surface) const;  // lowercases internally

    std::size_t hindi_size() const { return hindi_.size(); }
    std::size_t english_size() const { return english_.size(); }

private:
    std::unordered_set<std::string> hindi_;
    std::unordered_set<std::string> english_;
};

// Deterministic character-map romanization of the Devanagari block:
// consonants carry an inherent 'a' (replaced by matras, removed by virama),
// anusvara/chandrabindu → 'n', visarga → 'h', danda dropped, Devanagari
// digits → ASCII. Unmapped code points pass through unchanged; pure-Roman
// input is returned as-is, so the map is idempotent on its own output.
std::string transliterate_deva(std::string_view surface);

// Runs `command` with one token per stdin line; expects exactly one tag per
// stdout line (`hi` | `en` | `other`), same count and order. Any deviation
// (spawn failure, nonzero exit, count mismatch, unknown tag) throws
// TaggerProtocolError. Zero tokens still runs the command, which must emit
// zero lines.
std::vector<LanguageTag> run_external_tagger(const std::vector<std::string>& tokens,
                                             const std::string& command);

// Runtime for a TaggerSpec. Construction loads lexicons (Lexicon kind) or
// records the command (External kind). The transliterator hook defaults to
// transliterate_deva and only applies when spec.transliterate is set.
class Tagger {
public:
    using Transliterator = std::function<std::string(std::string_view)>;

    explicit Tagger(const TaggerSpec& spec);
    Tagger(LexiconTagger lexicon, bool transliterate = false);  // test convenience

    void set_transliterator(Transliterator fn);

    // Tags every token in place: Neutral and Mixed scripts → Other;
    // Devanagari → Hindi directly unless transliterating; Roman (and
    // romanized Devanagari) → backend lookup. Order and surfaces are
    // preserved; only tags change. One external-tagger batch per call.
    void tag_tokens(std::vector<Token>& tokens) const;

    // Tags all tokens of all spans (one external batch per article) and
    // caches each sentence's CMI.
    void tag_article(Article& article) const;

    const TaggerSpec& spec() const { return spec_; }

    // Stable identifier for output provenance headers.
    std::string id() const;

private:
    void apply_backend(std::vector<Token*>& pending, std::vector<std::string>& keys) const;

    TaggerSpec spec_;
    LexiconTagger lexicon_;
    Transliterator transliterator_;
};

}  // namespace codemix

#endif  // CODEMIX_LID_HPP

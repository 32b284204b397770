#include "codemix/lid.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "codemix/errors.hpp"
#include "codemix/metrics.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

namespace {

// Devanagari consonant bases; the inherent 'a' is handled by the caller.
const char* consonant_base(char32_t cp) {
    switch (cp) {
        case U'क': return "k";
        case U'ख': return "kh";
        case U'ग': return "g";
        case U'घ': return "gh";
        case U'ङ': return "n";
        case U'च': return "ch";
        case U'छ': return "chh";
        case U'ज': return "j";
        case U'झ': return "jh";
        case U'ञ': return "n";
        case U'ट': return "t";
        case U'ठ': return "th";
        case U'ड': return "d";
        case U'ढ': return "dh";
        case U'ण': return "n";
        case U'त': return "t";
        case U'थ': return "th";
        case U'द': return "d";
        case U'ध': return "dh";
        case U'न': return "n";
        case U'ऩ': return "n";
        case U'प': return "p";
        case U'फ': return "ph";
        case U'ब': return "b";
        case U'भ': return "bh";
        case U'म': return "m";
        case U'य': return "y";
        case U'र': return "r";
        case U'ऱ': return "r";
        case U'ल': return "l";
        case U'ळ': return "l";
        case U'ऴ': return "l";
        case U'व': return "v";
        case U'श': return "sh";
        case U'ष': return "sh";
        case U'स': return "s";
        case U'ह': return "h";
        case U'\u0958': return "q";   // क़
        case U'\u0959': return "kh";  // ख़
        case U'\u095a': return "g";   // ग़
        case U'\u095b': return "z";   // ज़
        case U'\u095c': return "r";   // ड़
        case U'\u095d': return "rh";  // ढ़
        case U'\u095e': return "f";   // फ़
        case U'\u095f': return "y";   // य़
        default: return nullptr;
    }
}

const char* independent_vowel(char32_t cp) {
    switch (cp) {
        case U'ऄ':
        case U'अ': return "a";
        case U'आ': return "aa";
        case U'इ': return "i";
        case U'ई': return "ii";
        case U'उ': return "u";
        case U'ऊ': return "uu";
        case U'ऋ': return "ri";
        case U'ऌ': return "li";
        case U'ऍ':
        case U'ऎ':
        case U'ए': return "e";
        case U'ऐ': return "ai";
        case U'ऑ':
        case U'ऒ':
        case U'ओ': return "o";
        case U'औ': return "au";
        case U'ॠ': return "ri";
        case U'ॡ': return "li";
        default: return nullptr;
    }
}

const char* matra(char32_t cp) {
    switch (cp) {
        case U'ा': return "aa";
        case U'ि': return "i";
        case U'ी': return "ii";
        case U'ु': return "u";
        case U'ू': return "uu";
        case U'ृ':
        case U'ॄ': return "ri";
        case U'ॅ':
        case U'ॆ':
        case U'े': return "e";
        case U'ै': return "ai";
        case U'ॉ':
        case U'ॊ':
        case U'ो': return "o";
        case U'ौ': return "au";
        case U'ॢ':
        case U'ॣ': return "li";
        default: return nullptr;
    }
}

constexpr char32_t kVirama = U'्';
constexpr char32_t kNukta = U'़';

// Dropped outright: sentence marks and symbols with no Roman counterpart.
bool dropped_sign(char32_t cp) {
    switch (cp) {
        case U'।':
        case U'॥':
        case U'ऽ':
        case U'॰':
        case U'ॱ':
            return true;
        default:
            return false;
    }
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (const char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return s.substr(a, b - a);
}

std::unordered_set<std::string> read_wordlist(const std::string& path, const char* which) {
    std::ifstream in(path);
    if (!in) throw DataError(std::string(which) + " lexicon unreadable: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        const std::string form = trim(line);
        if (form.empty() || form[0] == '#') continue;
        words.insert(uni::to_lower(uni::nfc(form)));
    }
    if (words.empty()) throw DataError(std::string(which) + " lexicon is empty: " + path);
    return words;
}

// Romanization change a combining nukta makes to the consonant just emitted.
const char* nukta_upgrade(const char* base) {
    const std::string_view b = base;
    if (b == "k") return "q";
    if (b == "j") return "z";
    if (b == "d") return "r";
    if (b == "dh") return "rh";
    if (b == "ph") return "f";
    return nullptr;
}

std::string basename_of(const std::string& path) {
    const auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

}  // namespace

std::string transliterate_deva(std::string_view surface) {
    std::string out;
    out.reserve(surface.size());
    bool pending = false;      // last consonant still owes its inherent 'a'
    std::size_t base_at = 0;   // where the pending consonant's romanization begins
    auto has_vowel = [&] {
        return out.find_first_of("aeiou") != std::string::npos;
    };
    // Word-final flushes delete the schwa the way romanized spelling does
    // (desh, not desha) — unless dropping it would leave a vowelless string.
    auto flush = [&](bool word_final = false) {
        if (pending && !(word_final && has_vowel())) out += 'a';
        pending = false;
    };
    for (const char32_t cp : uni::decode_utf8(surface)) {
        if (const char* base = consonant_base(cp)) {
            flush();
            base_at = out.size();
            out += base;
            pending = true;
        } else if (const char* m = matra(cp)) {
            out += m;
            pending = false;
        } else if (cp == kVirama) {
            pending = false;
        } else if (cp == kNukta) {
            // Canonical order keeps nukta right after its consonant, and
            // normalization leaves these letters decomposed; upgrade the
            // romanization we just emitted.
            if (pending) {
                if (const char* up = nukta_upgrade(out.c_str() + base_at))
                    out.replace(base_at, std::string::npos, up);
            }
        } else if (const char* v = independent_vowel(cp)) {
            flush();
            out += v;
        } else if (cp == U'ँ' || cp == U'ं') {
            flush();
            out += 'n';
        } else if (cp == U'ः') {
            flush();
            out += 'h';
        } else if (cp == U'ॐ') {
            flush();
            out += "om";
        } else if (cp >= U'०' && cp <= U'९') {
            flush();
            out += static_cast<char>('0' + (cp - U'०'));
        } else if (dropped_sign(cp)) {
            flush(/*word_final=*/true);
        } else {
            flush();
            uni::append_utf8(out, cp);
        }
    }
    flush(/*word_final=*/true);
    return out;
}

LexiconTagger LexiconTagger::load(const std::string& hindi_path, const std::string& english_path) {
    LexiconTagger tagger;
    tagger.hindi_ = read_wordlist(hindi_path, "hindi");
    tagger.english_ = read_wordlist(english_path, "english");
    return tagger;
}

LexiconTagger LexiconTagger::from_words(std::vector<std::string> hindi_roman,
                                        std::vector<std::string> english) {
    LexiconTagger tagger;
    for (auto& w : hindi_roman) tagger.hindi_.insert(uni::to_lower(uni::nfc(w)));
    for (auto& w : english) tagger.english_.insert(uni::to_lower(uni::nfc(w)));
    return tagger;
}

LanguageTag LexiconTagger::lookup(std::string_view surface) const {
    const std::string key = uni::to_lower(surface);
    const bool in_hindi = hindi_.contains(key);
    const bool in_english = english_.contains(key);
    if (in_hindi && !in_english) return LanguageTag::Hindi;
    if (in_english && !in_hindi) return LanguageTag::English;
    return LanguageTag::Other;  // ambiguous or unknown: decline to guess
}

std::vector<LanguageTag> run_external_tagger(const std::vector<std::string>& tokens,
                                             const std::string& command) {
    if (command.empty()) throw TaggerProtocolError("external tagger command is empty");

    char batch_template[] = "/tmp/codemix-batch-XXXXXX";
    const int fd = mkstemp(batch_template);
    if (fd < 0) throw TaggerProtocolError("cannot create tagger batch file");
    const std::string batch_path = batch_template;
    {
        std::string payload;
        for (const std::string& token : tokens) {
            payload += token;
            payload += '\n';
        }
        std::size_t off = 0;
        while (off < payload.size()) {
            const ssize_t wrote = write(fd, payload.data() + off, payload.size() - off);
            if (wrote < 0) {
                close(fd);
                unlink(batch_path.c_str());
                throw TaggerProtocolError("cannot write tagger batch file");
            }
            off += static_cast<std::size_t>(wrote);
        }
        close(fd);
    }

    // subshell so the redirect feeds the whole command, pipelines included
    const std::string shell = "( " + command + " ) < " + shell_quote(batch_path);
    FILE* pipe = popen(shell.c_str(), "r");
    if (!pipe) {
        unlink(batch_path.c_str());
        throw TaggerProtocolError("failed to launch external tagger: " + command);
    }
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    unlink(batch_path.c_str());
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw TaggerProtocolError("external tagger exited abnormally: " + command);

    std::vector<LanguageTag> tags;
    tags.reserve(tokens.size());
    std::istringstream lines(output);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            tags.push_back(language_tag_from_string(line));
        } catch (const DataError&) {
            throw TaggerProtocolError("external tagger emitted unknown tag '" + line + "'");
        }
    }
    if (tags.size() != tokens.size())
        throw TaggerProtocolError("external tagger tag count mismatch: sent " +
                                  std::to_string(tokens.size()) + " tokens, received " +
                                  std::to_string(tags.size()) + " tags");
    return tags;
}

Tagger::Tagger(const TaggerSpec& spec) : spec_(spec), transliterator_([](std::string_view s) {
    return transliterate_deva(s);
}) {
    if (spec_.kind == TaggerKind::Lexicon) {
        lexicon_ = LexiconTagger::load(spec_.hindi_lexicon, spec_.english_lexicon);
    } else if (spec_.command.empty()) {
        throw UsageError("external tagger requires a command");
    }
}

Tagger::Tagger(LexiconTagger lexicon, bool transliterate)
    : lexicon_(std::move(lexicon)), transliterator_([](std::string_view s) {
          return transliterate_deva(s);
      }) {
    spec_.kind = TaggerKind::Lexicon;
    spec_.transliterate = transliterate;
}

void Tagger::set_transliterator(Transliterator fn) { transliterator_ = std::move(fn); }

void Tagger::apply_backend(std::vector<Token*>& pending,
                           std::vector<std::string>& keys) const {
    if (pending.empty()) return;
    if (spec_.kind == TaggerKind::Lexicon) {
        for (std::size_t i = 0; i < pending.size(); ++i)
            pending[i]->tag = lexicon_.lookup(keys[i]);
        return;
    }
    const auto tags = run_external_tagger(keys, spec_.command);
    for (std::size_t i = 0; i < pending.size(); ++i) pending[i]->tag = tags[i];
}

namespace {

// Applies the script rules; tokens needing a backend lookup are collected
// along with their lookup key (the surface, or its romanization — surfaces
// themselves are never rewritten).
void route_token(Token& token, bool transliterate, const Tagger::Transliterator& romanize,
                 std::vector<Token*>& pending, std::vector<std::string>& keys) {
    switch (token.script) {
        case Script::Neutral:
        case Script::Mixed:
            token.tag = LanguageTag::Other;
            return;
        case Script::Devanagari:
            if (!transliterate) {
                token.tag = LanguageTag::Hindi;
                return;
            }
            pending.push_back(&token);
            keys.push_back(romanize(token.surface));
            return;
        case Script::Roman:
            pending.push_back(&token);
            keys.push_back(token.surface);
            return;
    }
}

}  // namespace

void Tagger::tag_tokens(std::vector<Token>& tokens) const {
    std::vector<Token*> pending;
    std::vector<std::string> keys;
    for (Token& token : tokens)
        route_token(token, spec_.transliterate, transliterator_, pending, keys);
    apply_backend(pending, keys);
}

void Tagger::tag_article(Article& article) const {
    std::vector<Token*> pending;
    std::vector<std::string> keys;
    for (Span& span : article.spans)
        for (Sentence& sentence : span.sentences)
            for (Token& token : sentence.tokens)
                route_token(token, spec_.transliterate, transliterator_, pending, keys);
    apply_backend(pending, keys);
    for (Span& span : article.spans)
        for (Sentence& sentence : span.sentences) sentence.cmi = cmi_score(sentence.tokens);
}

std::string Tagger::id() const {
    std::string id;
    if (spec_.kind == TaggerKind::Lexicon) {
        id = "lexicon:" + basename_of(spec_.hindi_lexicon) + "+" +
             basename_of(spec_.english_lexicon);
    } else {
        id = "external:" + spec_.command;
    }
    if (spec_.transliterate) id += "+translit";
    return id;
}

}  // namespace codemix

#include "codemix/segment.hpp"

#include <algorithm>

#include "codemix/errors.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

namespace {

constexpr char32_t kDanda = U'।';
constexpr char32_t kDoubleDanda = U'॥';

bool is_split_trigger(char32_t cp) {
    return cp == U'.' || cp == U'!' || cp == U'?' || cp == kDanda;
}

bool is_terminal_run_char(char32_t cp) {
    return is_split_trigger(cp) || cp == kDoubleDanda;
}

bool is_closing_char(char32_t cp) {
    switch (cp) {
        case U'"':
        case U'\'':
        case U')':
        case U']':
        case U'}':
        case U'”':  // ”
        case U'’':  // ’
        case U'»':  // »
            return true;
        default:
            return false;
    }
}

std::vector<std::string> split_into_sentences(const std::vector<char32_t>& cps) {
    std::vector<std::string> out;
    const std::size_t n = cps.size();
    std::size_t start = 0;

    auto flush = [&](std::size_t end) {
        std::size_t a = start;
        std::size_t b = end;
        while (a < b && uni::is_space(cps[a])) ++a;
        while (b > a && uni::is_space(cps[b - 1])) --b;
        if (a < b) out.push_back(uni::encode_utf8(cps.data() + a, b - a));
        start = end;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const char32_t cp = cps[i];
        if (!is_split_trigger(cp)) continue;

        if (cp == U'.') {
            // Guard within the enclosing whitespace-delimited token: multi-dot
            // tokens ("A.I.", "e.g.", "...") and single-capital initials never
            // split.
            std::size_t tok_a = i;
            while (tok_a > 0 && !uni::is_space(cps[tok_a - 1])) --tok_a;
            std::size_t tok_b = i + 1;
            while (tok_b < n && !uni::is_space(cps[tok_b])) ++tok_b;
            int dots = 0;
            for (std::size_t k = tok_a; k < tok_b; ++k)
                if (cps[k] == U'.') ++dots;
            if (dots >= 2) continue;
            if (i - tok_a == 1 && uni::is_latin_upper(cps[tok_a])) continue;
        }

        std::size_t j = i + 1;
        while (j < n && is_terminal_run_char(cps[j])) ++j;
        while (j < n && is_closing_char(cps[j])) ++j;
        // Danda ends a sentence unconditionally; '.', '!' and '?' only when
        // followed by whitespace or end of text (keeps "3.5", URLs intact).
        if (cp != kDanda && j < n && !uni::is_space(cps[j])) continue;

        flush(j);
        i = j - 1;
    }
    flush(n);
    return out;
}

bool line_is_blank(const std::string& line) {
    for (const char32_t cp : uni::decode_utf8(line))
        if (!uni::is_space(cp)) return false;
    return true;
}

std::vector<std::string> split_lines(std::string_view body) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const std::size_t nl = body.find('\n', pos);
        std::string line(body.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                       : nl - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

Script classify_script_cps(const char32_t* cps, std::size_t n) {
    bool deva = false;
    bool latin = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (uni::is_devanagari_letter(cps[i]))
            deva = true;
        else if (uni::is_latin_letter(cps[i]))
            latin = true;
    }
    if (deva && latin) return Script::Mixed;
    if (deva) return Script::Devanagari;
    if (latin) return Script::Roman;
    return Script::Neutral;
}

void emit_chunk(const std::vector<char32_t>& cps, std::size_t a, std::size_t b,
                std::vector<Token>& out) {
    // Invisible format controls (ZWJ/ZWNJ) are dropped at chunk edges and
    // never emitted as tokens of their own.
    while (a < b && uni::is_format_char(cps[a])) ++a;
    while (b > a && uni::is_format_char(cps[b - 1])) --b;

    while (a < b && !uni::is_word_char(cps[a])) {
        if (!uni::is_format_char(cps[a]))
            out.push_back(Token{uni::encode_utf8(cps.data() + a, 1), Script::Neutral, {}});
        ++a;
    }

    std::size_t e = b;
    std::vector<char32_t> detached;  // trailing punctuation, innermost last
    while (e > a && !uni::is_word_char(cps[e - 1])) {
        if (cps[e - 1] == U'.') {
            bool has_inner_dot = false;
            for (std::size_t k = a; k + 1 < e; ++k)
                if (cps[k] == U'.') {
                    has_inner_dot = true;
                    break;
                }
            if (has_inner_dot) break;  // abbreviation: keep the final dot attached
        }
        if (!uni::is_format_char(cps[e - 1])) detached.push_back(cps[e - 1]);
        --e;
    }

    if (e > a)
        out.push_back(Token{uni::encode_utf8(cps.data() + a, e - a),
                            classify_script_cps(cps.data() + a, e - a), {}});
    for (auto it = detached.rbegin(); it != detached.rend(); ++it)
        out.push_back(Token{uni::encode_utf8(&*it, 1), Script::Neutral, {}});
}

}  // namespace

ParagraphBreak paragraph_break_from_string(std::string_view s) {
    if (s == "blank") return ParagraphBreak::Blank;
    if (s == "newline") return ParagraphBreak::Newline;
    throw UsageError("unknown paragraph-break mode '" + std::string(s) +
                     "' (expected blank or newline)");
}

std::string_view to_string(ParagraphBreak mode) {
    return mode == ParagraphBreak::Blank ? "blank" : "newline";
}

std::vector<std::vector<std::string>> segment_sentences(std::string_view body,
                                                        ParagraphBreak mode) {
    std::vector<std::string> paragraphs;
    const auto lines = split_lines(body);
    if (mode == ParagraphBreak::Newline) {
        for (const auto& line : lines)
            if (!line_is_blank(line)) paragraphs.push_back(line);
    } else {
        std::string current;
        for (const auto& line : lines) {
            if (line_is_blank(line)) {
                if (!current.empty()) paragraphs.push_back(std::move(current));
                current.clear();
            } else {
                if (!current.empty()) current.push_back('\n');
                current += line;
            }
        }
        if (!current.empty()) paragraphs.push_back(std::move(current));
    }

    std::vector<std::vector<std::string>> out;
    for (const auto& para : paragraphs) {
        auto sentences = split_into_sentences(uni::decode_utf8(para));
        if (!sentences.empty()) out.push_back(std::move(sentences));
    }
    return out;
}

Script classify_script(std::string_view surface) {
    const auto cps = uni::decode_utf8(surface);
    return classify_script_cps(cps.data(), cps.size());
}

std::vector<Token> tokenize(std::string_view sentence) {
    std::vector<Token> out;
    const auto cps = uni::decode_utf8(sentence);
    const std::size_t n = cps.size();
    std::size_t i = 0;
    while (i < n) {
        if (uni::is_space(cps[i])) {
            ++i;
            continue;
        }
        std::size_t b = i;
        while (b < n && !uni::is_space(cps[b])) ++b;
        emit_chunk(cps, i, b, out);
        i = b;
    }
    return out;
}

void build_spans(Article& article,
                 const std::vector<std::vector<std::string>>& sentence_groups) {
    article.spans.clear();
    std::size_t index = 0;
    for (const auto& group : sentence_groups) {
        Span span;
        for (const auto& text : group) {
            Sentence sentence;
            sentence.text = text;
            sentence.tokens = tokenize(text);
            if (sentence.tokens.empty()) continue;  // invisible-only content
            span.sentences.push_back(std::move(sentence));
        }
        if (span.sentences.empty()) continue;
        span.index = index++;
        span.eligible = span.sentences.size() > 1;
        article.spans.push_back(std::move(span));
    }
}

void segment_article(Article& article, ParagraphBreak mode) {
    build_spans(article, segment_sentences(article.body, mode));
}

}  // namespace codemix

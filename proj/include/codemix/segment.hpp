#ifndef CODEMIX_SEGMENT_HPP
#define CODEMIX_SEGMENT_HPP

#include <string_view>
#include <vector>

#include "codemix/text.hpp"

namespace codemix {

// Paragraph boundary convention: Blank splits on one-or-more blank lines,
// Newline treats every line as its own paragraph.
enum class ParagraphBreak { Blank, Newline };

ParagraphBreak paragraph_break_from_string(std::string_view s);  // "blank" | "newline"
std::string_view to_string(ParagraphBreak mode);

// Splits a body into paragraphs of sentence strings. Sentences end at danda,
// '.', '!' or '?'; a '.' does not split inside multi-dot tokens ("A.I.",
// "e.g."), after a single capital letter ("J. Smith"), or when not followed
// by whitespace ("3.5"). Joining the output back together preserves the
// body's non-whitespace content in order.
std::vector<std::vector<std::string>> segment_sentences(
    std::string_view body, ParagraphBreak mode = ParagraphBreak::Blank);

// Whitespace tokenization with edge punctuation detached into Neutral
// tokens. A trailing '.' stays attached when the core already contains one
// ("A.I."). Scripts are classified from code points; tags are left unset.
std::vector<Token> tokenize(std::string_view sentence);

Script classify_script(std::string_view surface);

// Populates article.spans from segment_sentences output: one span per
// paragraph, indices ascending, eligible iff the span has > 1 sentence.
// Sentence tokens are filled via tokenize; tags are left unset.
void build_spans(Article& article, const std::vector<std::vector<std::string>>& sentence_groups);

// Convenience: segment_sentences + build_spans on the article's own body.
void segment_article(Article& article, ParagraphBreak mode = ParagraphBreak::Blank);

}  // namespace codemix

#endif  // CODEMIX_SEGMENT_HPP

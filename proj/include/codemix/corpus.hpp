#ifndef CODEMIX_CORPUS_HPP
#define CODEMIX_CORPUS_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "codemix/text.hpp"

namespace codemix {

// One skipped input record: the line it came from and why.
struct IngestError {
    std::size_t line_number = 0;
    std::string message;
};

// Streaming reader over a line-delimited article file.
//
// Input schema (one JSON object per line): required `id` and `body`
// (embedded "\n" preserved); `source` required unless a fallback source name
// is supplied; optional `title`, `category`, `date`. Text fields are
// NFC-normalized on read. Malformed records are skipped and tallied in
// errors(); an unreadable file throws DataError at construction.
class ArticleReader {
public:
    ArticleReader(std::istream& in, std::string fallback_source = "");
    explicit ArticleReader(const std::string& path, std::string fallback_source = "");

    // Next valid article in file order, or nullopt at end of input.
    std::optional<Article> next();

    const std::vector<IngestError>& errors() const { return errors_; }
    std::size_t articles_read() const { return articles_read_; }

private:
    std::unique_ptr<std::istream> owned_;
    std::istream* in_;
    std::string fallback_source_;
    std::size_t line_number_ = 0;
    std::size_t articles_read_ = 0;
    std::vector<IngestError> errors_;
};

// Reads the whole file eagerly; convenience over ArticleReader for small
// inputs and tests. Per-record errors are appended to `errors` when given,
// otherwise reported to stderr.
std::vector<Article> ingest_articles(const std::string& path,
                                     const std::string& fallback_source = "",
                                     std::vector<IngestError>* errors = nullptr);

}  // namespace codemix

#endif  // CODEMIX_CORPUS_HPP

#ifndef CODEMIX_ERRORS_HPP
#define CODEMIX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codemix {

// Exit codes used by the CLI: 0 success, 1 usage/config, 2 data, 3 tagger protocol.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct TaggerProtocolError : std::runtime_error {
    explicit TaggerProtocolError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace codemix

#endif  // CODEMIX_ERRORS_HPP

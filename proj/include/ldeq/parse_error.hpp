#ifndef LDEQ_PARSE_ERROR_HPP
#define LDEQ_PARSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ldeq {

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace ldeq

#endif

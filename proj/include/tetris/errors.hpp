#ifndef TETRIS_ERRORS_HPP
#define TETRIS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tetris {

// Malformed graph input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Strict-mode oracle access to a vertex that has not been revealed.
class AccessViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge count estimation failed: every stratum was collision-free,
// which signals the walk is far too short for the graph size.
class InsufficientCollisions : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tetris

#endif // TETRIS_ERRORS_HPP

#ifndef PIN_ERRORS_HPP
#define PIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pin {

// Malformed graph input: self-loop, index out of range, negative multiplicity.
class GraphError : public std::invalid_argument {
public:
    explicit GraphError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap (terminal count, tree count, brute-force bits,
// enumeration box volume) was exceeded. Never silently truncate.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Graph file syntax error; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

} // namespace pin

#endif

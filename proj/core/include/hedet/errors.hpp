#pragma once

#include <stdexcept>
#include <string>

namespace hedet {

// Invalid arguments to an operation (bad indices, wrong universe, k out of range).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed textual input. `offset` is a 0-based byte position into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

// An exact check and its independent oracle disagreed. Never caught internally.
class OracleMismatchError : public std::logic_error {
public:
    explicit OracleMismatchError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace hedet

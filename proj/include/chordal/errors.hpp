#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

// Structure operations require a chordal input; recognition itself never throws.
class NotChordalError : public std::runtime_error {
public:
    explicit NotChordalError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive enumeration refused because a desk-scale guard was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace chordal

#pragma once

#include <stdexcept>
#include <string>

namespace climb {

/// Malformed input text. line/column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed input that violates a named invariant, e.g. "spawn-in-solid".
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace climb

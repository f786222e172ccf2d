#pragma once
// Small helpers shared by the text-format loaders.

#include "climb/error.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace climb::text {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

inline std::vector<std::string_view> split_lines(std::string_view doc) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= doc.size()) {
        std::size_t end = doc.find('\n', start);
        if (end == std::string_view::npos) end = doc.size();
        std::string_view line = doc.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == doc.size()) break;
        start = end + 1;
    }
    // A trailing newline does not open a new line.
    if (!lines.empty() && lines.back().empty() && !doc.empty() && doc.back() == '\n') lines.pop_back();
    return lines;
}

inline bool is_space(char c) { return c == ' ' || c == '\t'; }

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::optional<double> to_double(std::string_view s) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

inline std::optional<long long> to_int(std::string_view s) {
    long long v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline double require_double(const Token& t, int line) {
    auto v = to_double(t.text);
    if (!v) throw ParseError(line, t.column, "expected a number, got '" + std::string(t.text) + "'");
    return *v;
}

inline long long require_int(const Token& t, int line) {
    auto v = to_int(t.text);
    if (!v) throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return *v;
}

/// Shortest representation that parses back to the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace climb::text

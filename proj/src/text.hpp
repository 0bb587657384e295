#ifndef LDEQ_SRC_TEXT_HPP
#define LDEQ_SRC_TEXT_HPP

// Small tokenizing helpers shared by the text formats.

#include "ldeq/parse_error.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace ldeq::text {

inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_lines(std::string_view s) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= s.size()) {
        auto nl = s.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < s.size()) lines.push_back(s.substr(start));
            break;
        }
        lines.push_back(s.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

inline std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Drops everything from `marker` on.
inline std::string_view strip_comment(std::string_view s, char marker = '#') {
    auto pos = s.find(marker);
    return pos == std::string_view::npos ? s : s.substr(0, pos);
}

inline long long to_int(std::string_view w, int line, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(w) + "'");
    }
    return v;
}

inline double to_double(std::string_view w, int line, const char* what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(w) + "'");
    }
    return v;
}

// Shortest representation that reads back to the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace ldeq::text

#endif

#ifndef CLSFE_UTIL_HPP
#define CLSFE_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clsfe {

// Error with an optional source location (file line or codepoint offset).
class FrontendError : public std::runtime_error {
public:
    explicit FrontendError(const std::string& what) : std::runtime_error(what) {}
    FrontendError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

// Decodes UTF-8 into Unicode scalar values. Malformed bytes raise.
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(const std::vector<char32_t>& codepoints);
std::string utf8_encode(char32_t cp);

// Splits on a single delimiter, keeping empty fields.
std::vector<std::string> split(std::string_view line, char delim);

// Splits on runs of ASCII whitespace, dropping empty tokens.
std::vector<std::string> split_ws(std::string_view text);

std::string ascii_lower(std::string_view s);

// Line iteration that skips blank lines and '#' comments but reports the
// original 1-based line number.
struct NumberedLine {
    std::size_t number;
    std::string text;
};
std::vector<NumberedLine> content_lines(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace clsfe

#endif  // CLSFE_UTIL_HPP

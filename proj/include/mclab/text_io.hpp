#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mclab {

// Shortest decimal form that parses back to the identical double
// (std::to_chars round-trip guarantee).
std::string format_double(double v);

// Strict parsers; the whole token must be consumed.
double parse_double(std::string_view token);
long parse_long(std::string_view token);
uint64_t parse_uint64(std::string_view token);

std::vector<std::string> split(std::string_view line, char sep);
std::string trim(std::string_view s);

// Minimal "key = value" file: one pair per line, '#' starts a comment,
// blank lines ignored. Later duplicates of a key win.
struct KeyValueFile {
    std::vector<std::pair<std::string, std::string>> entries;

    static KeyValueFile read(const std::string& path);
    const std::string* find(const std::string& key) const;
    const std::string& require(const std::string& key) const;
};

} // namespace mclab

#include "mclab/text_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "mclab/errors.hpp"

namespace mclab {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

template <typename T>
T parse_arith(std::string_view token, const char* what) {
    const std::string t = trim(token);
    T value{};
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
        throw std::invalid_argument(std::string("cannot parse ") + what + " from '" + t + "'");
    }
    return value;
}

} // namespace

double parse_double(std::string_view token) { return parse_arith<double>(token, "number"); }
long parse_long(std::string_view token) { return parse_arith<long>(token, "integer"); }
uint64_t parse_uint64(std::string_view token) { return parse_arith<uint64_t>(token, "unsigned integer"); }

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            return out;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const size_t begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) {
        return {};
    }
    const size_t end = s.find_last_not_of(ws);
    return std::string(s.substr(begin, end - begin + 1));
}

KeyValueFile KeyValueFile::read(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    KeyValueFile kv;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value' in " + path, lineno);
        }
        kv.entries.emplace_back(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return kv;
}

const std::string* KeyValueFile::find(const std::string& key) const {
    const std::string* found = nullptr;
    for (const auto& [k, v] : entries) {
        if (k == key) {
            found = &v;
        }
    }
    return found;
}

const std::string& KeyValueFile::require(const std::string& key) const {
    const std::string* v = find(key);
    if (v == nullptr) {
        throw std::runtime_error("missing key '" + key + "'");
    }
    return *v;
}

} // namespace mclab

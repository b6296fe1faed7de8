#include "eden/report.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace eden {

void Report::set(const std::string& key, const std::string& value) {
    if (key.empty() || key.find(' ') != std::string::npos || key.find('\n') != std::string::npos)
        throw InternalError("bad report key '" + key + "'");
    for (auto& [k, v] : fields_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    fields_.emplace_back(key, value);
}

void Report::set(const std::string& key, long long value) { set(key, std::to_string(value)); }

void Report::set(const std::string& key, bool value) {
    set(key, std::string(value ? "true" : "false"));
}

bool Report::has(const std::string& key) const {
    for (const auto& [k, v] : fields_) {
        (void)v;
        if (k == key) return true;
    }
    return false;
}

const std::string& Report::get(const std::string& key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return v;
    throw Error("report has no key '" + key + "'");
}

std::string Report::escape(const std::string& raw) {
    std::string out;
    for (char c : raw) {
        if (c == '\\')
            out += "\\\\";
        else if (c == '\n')
            out += "\\n";
        else
            out += c;
    }
    return out;
}

std::string Report::unescape(const std::string& escaped) {
    std::string out;
    for (size_t i = 0; i < escaped.size(); ++i) {
        if (escaped[i] == '\\' && i + 1 < escaped.size()) {
            ++i;
            out += escaped[i] == 'n' ? '\n' : escaped[i];
        } else {
            out += escaped[i];
        }
    }
    return out;
}

std::string Report::canonical() const {
    auto sorted = fields_;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    for (const auto& [k, v] : sorted) out << k << ' ' << escape(v) << '\n';
    return out.str();
}

std::string Report::human() const {
    std::ostringstream out;
    for (const auto& [k, v] : fields_) out << k << " = " << v << '\n';
    return out.str();
}

Report Report::parse_canonical(const std::string& text) {
    Report r;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        size_t space = line.find(' ');
        if (space == std::string::npos) throw ParseError("bad report line", line_no);
        r.set(line.substr(0, space), unescape(line.substr(space + 1)));
    }
    return r;
}

std::string content_digest(const std::string& bytes) {
    uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

}  // namespace eden

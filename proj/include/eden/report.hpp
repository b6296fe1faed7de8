// report.hpp -- the canonical key-value report emitted by the command line
// front end. Canonical form is line-oriented `key value` in sorted key
// order, newline-escaped, and round-trips byte-identically.

#ifndef EDEN_REPORT_HPP
#define EDEN_REPORT_HPP

#include <string>
#include <vector>

#include "eden/shift.hpp"

namespace eden {

class Report {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, long long value);
    void set(const std::string& key, bool value);

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;

    std::string canonical() const;
    std::string human() const;

    static Report parse_canonical(const std::string& text);

    static std::string escape(const std::string& raw);
    static std::string unescape(const std::string& escaped);

private:
    std::vector<std::pair<std::string, std::string>> fields_;   // insertion order
};

/// FNV-1a 64-bit content digest, as 16 hex characters.
std::string content_digest(const std::string& bytes);

}  // namespace eden

#endif  // EDEN_REPORT_HPP

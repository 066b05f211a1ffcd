#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace coprime {

/// RFC 4180 fields, LF line endings. Fields containing a comma, quote or
/// newline are quoted with doubled quotes.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

std::string csv_escape(std::string_view field);

/// Parses CSV text written by CsvWriter (quoted fields allowed).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Fixed-point rendering with `decimals` digits ("0.150").
std::string fixed(double value, int decimals);

} // namespace coprime

#pragma once

// Minimal strict CSV reader for the engine's input tables: RFC 4180 quoting,
// LF or CRLF line endings, optional UTF-8 BOM, blank lines permitted only at
// the end of the file.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace climate_stress::csv {

struct Record {
  std::size_t line = 0;  // 1-based
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;
  std::vector<Record> records;
};

/// Reads the whole stream. Throws MalformedRow on bad quoting, ragged rows or
/// interior blank lines, and SchemaMismatch when the header differs from
/// `expected_header` (exact and ordered).
Table read(std::istream& in, const std::vector<std::string_view>& expected_header);

/// Parses a finite decimal number; the whole field must be consumed.
/// Throws MalformedRow naming `column` and `line`.
double parse_number(std::string_view text, std::string_view column, std::size_t line);

/// Quotes a field if it contains a delimiter, quote or line break.
std::string escape(std::string_view field);

}  // namespace climate_stress::csv

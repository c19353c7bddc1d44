#include "csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>

#include "climate_stress/error.hpp"

namespace climate_stress::csv {

namespace {

std::string join(const std::vector<std::string_view>& cols) {
  std::string s;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ',';
    s += cols[i];
  }
  return s;
}

// Splits one logical record starting at `pos`. Quoted fields may span lines;
// `line` is advanced past every newline consumed.
std::vector<std::string> split_record(std::string_view text, std::size_t& pos,
                                      std::size_t& line, std::size_t start_line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool after_quote = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (quoted) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          pos += 2;
          continue;
        }
        quoted = false;
        after_quote = true;
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      ++pos;
      continue;
    }
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
      ++pos;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
      ++pos;
      ++line;
      fields.push_back(std::move(field));
      return fields;
    } else if (c == '"' && field.empty() && !after_quote) {
      quoted = true;
      ++pos;
    } else {
      if (after_quote) {
        throw StressError(ErrorCode::MalformedRow, "text after closing quote", start_line);
      }
      field += c;
      ++pos;
    }
  }
  if (quoted) {
    throw StressError(ErrorCode::MalformedRow, "unterminated quoted field", start_line);
  }
  fields.push_back(std::move(field));
  ++line;
  return fields;
}

bool is_blank(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields[0].empty();
}

}  // namespace

Table read(std::istream& in, const std::vector<std::string_view>& expected_header) {
  std::string buffer{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::string_view text = buffer;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  Table table;
  std::size_t pos = 0;
  std::size_t line = 1;
  if (text.empty()) {
    throw StressError(ErrorCode::SchemaMismatch,
                      "empty input; expected header '" + join(expected_header) + "'", 1);
  }
  table.header = split_record(text, pos, line, 1);

  if (table.header.size() != expected_header.size() ||
      !std::equal(table.header.begin(), table.header.end(), expected_header.begin())) {
    std::string detail;
    for (auto col : expected_header) {
      if (std::find(table.header.begin(), table.header.end(), col) == table.header.end()) {
        detail = "missing column '" + std::string(col) + "'";
        break;
      }
    }
    if (detail.empty()) detail = "columns out of order or unexpected column";
    throw StressError(ErrorCode::SchemaMismatch,
                      detail + "; expected header '" + join(expected_header) + "'", 1);
  }

  std::size_t first_blank = 0;
  while (pos < text.size()) {
    std::size_t start = line;
    auto fields = split_record(text, pos, line, start);
    if (is_blank(fields)) {
      if (first_blank == 0) first_blank = start;
      continue;
    }
    if (first_blank != 0) {
      throw StressError(ErrorCode::MalformedRow, "blank line inside table", first_blank);
    }
    if (fields.size() != expected_header.size()) {
      throw StressError(ErrorCode::MalformedRow,
                        "expected " + std::to_string(expected_header.size()) + " fields, got " +
                            std::to_string(fields.size()),
                        start);
    }
    table.records.push_back({start, std::move(fields)});
  }
  return table;
}

double parse_number(std::string_view text, std::string_view column, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw StressError(ErrorCode::MalformedRow,
                      "column '" + std::string(column) + "': not a finite number: '" +
                          std::string(text) + "'",
                      line);
  }
  return value;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string s = "\"";
  for (char c : field) {
    if (c == '"') s += '"';
    s += c;
  }
  s += '"';
  return s;
}

}  // namespace climate_stress::csv

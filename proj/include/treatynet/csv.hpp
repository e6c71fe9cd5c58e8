#pragma once

// Minimal CSV support shared by ingest and report writers: RFC-4180-style
// quoting, header checks, and round-trip-stable number formatting.

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treatynet::csv {

struct Row {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line in the source file
};

/// Parses CSV text. Handles quoted fields, embedded commas/newlines, CRLF.
/// Blank lines are skipped.
std::vector<Row> parse(std::string_view text);

/// Reads and parses a file; throws ValidationError if it cannot be opened.
std::vector<Row> read_file(const std::string& path);

/// Checks that rows[0] matches the expected header exactly; throws
/// ValidationError naming the file otherwise.
void expect_header(const std::vector<Row>& rows, const std::string& path,
                   std::initializer_list<std::string_view> names);

/// Quotes a field if it contains a comma, quote or newline.
std::string escape(std::string_view field);

std::string join_row(std::span<const std::string> fields);

/// Shortest round-trip decimal form ("1", "0.4444444444444444", ...).
std::string format_double(double value);

/// Strict double parse of a whole field; throws ValidationError with context.
double parse_double(std::string_view text, const std::string& context);

}  // namespace treatynet::csv

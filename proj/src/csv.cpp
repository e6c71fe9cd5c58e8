#include "treatynet/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "treatynet/types.hpp"

namespace treatynet::csv {

std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool row_has_data = false;
  int line = 1;
  int row_start_line = 1;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    if (row_has_data || fields.size() > 0) {
      end_field();
      // a row whose only field is empty is a blank line; skip it
      if (fields.size() > 1 || !fields[0].empty()) {
        rows.push_back(Row{std::move(fields), row_start_line});
      }
      fields.clear();
    }
    row_has_data = false;
    row_start_line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        row_has_data = true;
        break;
      case ',':
        end_field();
        row_has_data = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        row_start_line = line;
        break;
      default:
        field.push_back(c);
        row_has_data = true;
        break;
    }
  }
  end_row();
  return rows;
}

std::vector<Row> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void expect_header(const std::vector<Row>& rows, const std::string& path,
                   std::initializer_list<std::string_view> names) {
  auto fail = [&] {
    std::string expected;
    for (auto n : names) {
      if (!expected.empty()) expected += ',';
      expected += n;
    }
    throw ValidationError(path + ":1: expected header '" + expected + "'");
  };
  if (rows.empty()) fail();
  const Row& h = rows.front();
  if (h.fields.size() != names.size()) fail();
  std::size_t i = 0;
  for (auto n : names) {
    if (h.fields[i++] != n) fail();
  }
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join_row(std::span<const std::string> fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += escape(fields[i]);
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, const std::string& context) {
  double value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ValidationError(context + ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace treatynet::csv

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "halfshift/sequence.hpp"

namespace halfshift {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string& name);

using Cell = std::variant<std::int64_t, double, std::string, bool>;

// A flat report: named scalar summary fields plus rows under a fixed column
// set. CSV puts the summary in leading "# key=value" lines followed by a
// mandatory header row; doubles are written with 17 significant digits. JSON
// writes {"command", "summary", "rows"} with shortest round-trip doubles and
// keys in insertion order.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;

  void add_row(std::vector<Cell> row);
};

void write_table(const Table& table, OutputFormat format, std::ostream& out);
std::string format_table(const Table& table, OutputFormat format);

// Sequences on disk: CSV with header `n,re,im`, or a JSON array of
// {"n", "re", "im"} objects. Indices must cover -N/2..N/2 exactly once.
Sequence parse_sequence_csv(const std::string& text, const std::string& source = "<input>");
Sequence parse_sequence_json(const std::string& text, const std::string& source = "<input>");

// Picks the parser from the extension (.json, otherwise CSV). Throws IoError
// if the file cannot be read and ParseError for malformed content.
Sequence read_sequence(const std::filesystem::path& path);

void write_sequence(const Sequence& r, OutputFormat format, std::ostream& out);

// 17 significant digits.
std::string format_double(double value);

}  // namespace halfshift

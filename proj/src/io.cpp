#include "halfshift/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "halfshift/errors.hpp"
#include "json.hpp"

namespace halfshift {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") {
    return OutputFormat::csv;
  }
  if (name == "json") {
    return OutputFormat::json;
  }
  throw ParameterError("unknown output format '" + name + "' (expected csv or json)");
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the column set of " + command);
  }
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string cell_to_csv(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) {
            return v;
          }
          std::string quoted = "\"";
          for (char c : v) {
            if (c == '"') {
              quoted += '"';
            }
            quoted += c;
          }
          return quoted + "\"";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

ordered_json cell_to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) {
            return nullptr;
          }
        }
        return v;
      },
      cell);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(trim(current));
  return fields;
}

template <typename T>
bool parse_number(const std::string& text, T& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') {
    ++begin;
  }
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

Sequence assemble(const std::map<int, Complex>& samples, const std::string& source) {
  if (samples.empty()) {
    throw ParseError(source + ": no samples");
  }
  const int lo = samples.begin()->first;
  const int hi = samples.rbegin()->first;
  if (lo != -hi || hi < 1) {
    throw ParseError(source + ": indices must span a centered range -N/2..N/2 with N >= 2, got " +
                     std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (samples.size() != static_cast<std::size_t>(2 * hi + 1)) {
    throw ParseError(source + ": indices " + std::to_string(lo) + ".." + std::to_string(hi) +
                     " are not contiguous");
  }
  std::vector<Complex> values;
  values.reserve(samples.size());
  for (const auto& [n, v] : samples) {
    values.push_back(v);
  }
  return Sequence(2 * hi, std::move(values));
}

}  // namespace

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["command"] = table.command;
    ordered_json summary = ordered_json::object();
    for (const auto& [key, value] : table.summary) {
      summary[key] = cell_to_json(value);
    }
    doc["summary"] = std::move(summary);
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        obj[table.columns[i]] = cell_to_json(row[i]);
      }
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : table.summary) {
    out << "# " << key << '=' << cell_to_csv(value) << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << cell_to_csv(row[i]);
    }
    out << '\n';
  }
}

std::string format_table(const Table& table, OutputFormat format) {
  std::ostringstream out;
  write_table(table, format, out);
  return out.str();
}

Sequence parse_sequence_csv(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::map<int, Complex> samples;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') {
      continue;
    }
    const auto fields = split_fields(trimmed);
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (fields != std::vector<std::string>{"n", "re", "im"}) {
        throw ParseError(where + "expected header 'n,re,im'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != 3) {
      throw ParseError(where + "expected 3 fields, got " + std::to_string(fields.size()));
    }
    int n = 0;
    double re = 0.0;
    double im = 0.0;
    if (!parse_number(fields[0], n)) {
      throw ParseError(where + "bad index '" + fields[0] + "'");
    }
    if (!parse_number(fields[1], re) || !parse_number(fields[2], im) ||
        !std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError(where + "bad sample value");
    }
    if (!samples.emplace(n, Complex(re, im)).second) {
      throw ParseError(where + "duplicate index " + std::to_string(n));
    }
  }
  if (!have_header) {
    throw ParseError(source + ": missing header 'n,re,im'");
  }
  return assemble(samples, source);
}

Sequence parse_sequence_json(const std::string& text, const std::string& source) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  const ordered_json* items = &doc;
  if (doc.is_object() && doc.contains("rows")) {
    items = &doc["rows"];
  }
  if (!items->is_array()) {
    throw ParseError(source + ": expected an array of {n, re, im} objects");
  }
  std::map<int, Complex> samples;
  std::size_t index = 0;
  for (const auto& item : *items) {
    const std::string where = source + ": sample " + std::to_string(index++) + ": ";
    if (!item.is_object() || !item.contains("n") || !item.contains("re") ||
        !item.contains("im") || !item["n"].is_number_integer() ||
        !item["re"].is_number() || !item["im"].is_number()) {
      throw ParseError(where + "expected {\"n\": int, \"re\": number, \"im\": number}");
    }
    const int n = item["n"].get<int>();
    if (!samples.emplace(n, Complex(item["re"].get<double>(), item["im"].get<double>())).second) {
      throw ParseError(where + "duplicate index " + std::to_string(n));
    }
  }
  return assemble(samples, source);
}

Sequence read_sequence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".json") {
    return parse_sequence_json(buf.str(), path.string());
  }
  return parse_sequence_csv(buf.str(), path.string());
}

void write_sequence(const Sequence& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (int n = r.first_index(); n <= r.last_index(); ++n) {
      rows.push_back({{"n", n}, {"re", r[n].real()}, {"im", r[n].imag()}});
    }
    out << rows.dump(2) << '\n';
    return;
  }
  Table table{"sequence", {"n", "re", "im"}, {}, {}};
  for (int n = r.first_index(); n <= r.last_index(); ++n) {
    table.add_row({std::int64_t{n}, r[n].real(), r[n].imag()});
  }
  write_table(table, format, out);
}

}  // namespace halfshift

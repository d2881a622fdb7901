#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fiscalstab::io {

enum class Format { text, json, csv };

std::optional<Format> parse_format(std::string_view name);

using Value = std::variant<double, std::int64_t, bool, std::string>;

struct Field {
  std::string name;
  Value value;
};

struct Warning {
  std::string code;
  std::string message;
};

/// Machine-readable result of one command: echoed inputs, a results table,
/// optional summary fields and warnings.
///
/// JSON: {"command", "inputs": [{"name","value"}...], "results": [row objects],
///        "summary": {...}, "warnings": [{"code","message"}...]}
/// CSV:  header plus result rows; inputs, summary and warnings are omitted.
/// text: a lone scalar prints bare; one row prints "name: value" lines;
///       several rows print a tab-separated table, then the summary.
struct Report {
  Report() = default;
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  std::vector<Field> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  std::vector<Field> summary;
  std::vector<Warning> warnings;

  void add_row(std::vector<Value> row);
  void warn(std::string code, std::string message);
};

/// Shortest text that reads back to the same double.
std::string format_number(double value);
std::string format_value(const Value& value);

std::string render(const Report& report, Format format);

}  // namespace fiscalstab::io

#include "fiscalstab/report.hpp"

#include <charconv>
#include <cmath>
#include "json.hpp"

#include "fiscalstab/error.hpp"

namespace fiscalstab::io {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          // JSON has no inf/nan; emit them as strings.
          if (!std::isfinite(x)) return format_number(x);
          return x;
        } else {
          return x;
        }
      },
      v);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

void Report::add_row(std::vector<Value> row) {
  if (row.size() != columns.size()) throw Error("report row width does not match columns");
  rows.push_back(std::move(row));
}

void Report::warn(std::string code, std::string message) {
  for (const auto& w : warnings) {
    if (w.code == code) return;
  }
  warnings.push_back({std::move(code), std::move(message)});
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_value(const Value& value) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) return format_number(x);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else return x;
      },
      value);
}

std::string render(const Report& report, Format format) {
  std::string out;
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["command"] = report.command;
      doc["inputs"] = ordered_json::array();
      for (const auto& f : report.inputs) {
        doc["inputs"].push_back({{"name", f.name}, {"value", to_json(f.value)}});
      }
      doc["results"] = ordered_json::array();
      for (const auto& row : report.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = to_json(row[i]);
        doc["results"].push_back(std::move(obj));
      }
      doc["summary"] = ordered_json::object();
      for (const auto& f : report.summary) doc["summary"][f.name] = to_json(f.value);
      doc["warnings"] = ordered_json::array();
      for (const auto& w : report.warnings) {
        doc["warnings"].push_back({{"code", w.code}, {"message", w.message}});
      }
      out = doc.dump(2);
      out += '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out += (i ? "," : "") + report.columns[i];
      }
      out += '\n';
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_value(row[i]);
        out += '\n';
      }
      break;
    }
    case Format::text: {
      if (report.rows.size() == 1 && report.columns.size() == 1 && report.summary.empty()) {
        out = format_value(report.rows[0][0]) + '\n';
        break;
      }
      if (report.rows.size() == 1) {
        for (std::size_t i = 0; i < report.columns.size(); ++i) {
          out += report.columns[i] + ": " + format_value(report.rows[0][i]) + '\n';
        }
      } else if (!report.rows.empty()) {
        for (std::size_t i = 0; i < report.columns.size(); ++i) {
          out += (i ? "\t" : "") + report.columns[i];
        }
        out += '\n';
        for (const auto& row : report.rows) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "\t" : "") + format_value(row[i]);
          }
          out += '\n';
        }
      }
      for (const auto& f : report.summary) out += f.name + ": " + format_value(f.value) + '\n';
      break;
    }
  }
  return out;
}

}  // namespace fiscalstab::io

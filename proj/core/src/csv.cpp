#include "fiscalstab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fiscalstab/error.hpp"

namespace fiscalstab::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<double> optional_number(const CsvDocument& doc, std::size_t row,
                                      std::optional<std::size_t> col, std::string_view name) {
  if (!col) return std::nullopt;
  const std::string& cell = doc.rows[row][*col];
  if (cell.empty()) return std::nullopt;
  return parse_number(cell, doc.lines[row], name);
}

double required_number(const CsvDocument& doc, std::size_t row, std::size_t col,
                       std::string_view name) {
  const std::string& cell = doc.rows[row][col];
  if (cell.empty()) throw InputError("missing value", doc.lines[row], std::string(name));
  return parse_number(cell, doc.lines[row], name);
}

}  // namespace

std::optional<std::size_t> CsvDocument::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

CsvDocument parse_csv(std::string_view text) {
  CsvDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  // Strip a UTF-8 byte-order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;

  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    auto fields = split(line);
    if (doc.header.empty()) {
      std::set<std::string> seen;
      for (const auto& name : fields) {
        if (name.empty()) throw InputError("empty column name in header", line_no);
        if (!seen.insert(name).second) throw InputError("duplicate column", line_no, name);
      }
      doc.header = std::move(fields);
      continue;
    }
    if (fields.size() != doc.header.size()) {
      throw InputError("expected " + std::to_string(doc.header.size()) + " fields, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    doc.rows.push_back(std::move(fields));
    doc.lines.push_back(line_no);
  }
  if (doc.header.empty()) throw InputError("no header line");
  return doc;
}

CsvDocument read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

double parse_number(std::string_view cell, std::size_t line, std::string_view column) {
  const std::string col(column);
  if (cell.empty()) throw InputError("missing value", line, col);
  std::string_view body = cell;
  if (body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    throw InputError("not a number: '" + std::string(cell) + "'", line, col);
  }
  if (!std::isfinite(value)) throw InputError("non-finite value", line, col);
  return value;
}

Decimal exact_column_sum(const CsvDocument& doc, std::string_view column) {
  const auto col = doc.column(column);
  if (!col) throw InputError("missing column", 0, std::string(column));
  Decimal total;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const std::string& cell = doc.rows[r][*col];
    try {
      total += Decimal::parse(cell);
    } catch (const InputError& e) {
      throw InputError(e.what(), doc.lines[r], std::string(column));
    }
  }
  return total;
}

std::vector<double> numeric_column(const CsvDocument& doc, std::string_view column) {
  const auto col = doc.column(column);
  if (!col) throw InputError("missing column", 0, std::string(column));
  std::vector<double> out;
  out.reserve(doc.rows.size());
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    out.push_back(required_number(doc, r, *col, column));
  }
  return out;
}

ObservationTable to_observation_table(const CsvDocument& doc) {
  const char* required[] = {"year", "y_current", "y_potential", "revenue", "expenditure"};
  std::size_t idx[5];
  for (int i = 0; i < 5; ++i) {
    const auto col = doc.column(required[i]);
    if (!col) throw InputError("missing required column", 0, required[i]);
    idx[i] = *col;
  }
  const auto eps_v = doc.column("eps_v");
  const auto eps_c = doc.column("eps_c");
  std::array<std::optional<std::size_t>, 4> t_cols;
  std::array<std::optional<std::size_t>, 4> eps_t_cols;
  for (int i = 0; i < 4; ++i) {
    t_cols[i] = doc.column("t" + std::to_string(i + 1));
    eps_t_cols[i] = doc.column("eps_t" + std::to_string(i + 1));
  }
  const auto x_term = doc.column("x_term");
  const auto u_current = doc.column("u_current");
  const auto u_structural = doc.column("u_structural");
  const auto eps_c_u = doc.column("eps_c_u");
  const auto debt = doc.column("debt_ratio");

  ObservationTable table;
  table.rows.reserve(doc.rows.size());
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    ObservationRecord rec;
    rec.line = doc.lines[r];

    const std::string& year_cell = doc.rows[r][idx[0]];
    int year = 0;
    const auto [ptr, ec] =
        std::from_chars(year_cell.data(), year_cell.data() + year_cell.size(), year);
    if (year_cell.empty() || ec != std::errc() || ptr != year_cell.data() + year_cell.size()) {
      throw InputError("year must be an integer, got '" + year_cell + "'", rec.line, "year");
    }
    if (!table.rows.empty() && year <= table.rows.back().year) {
      throw InputError(year == table.rows.back().year ? "duplicate year " + year_cell
                                                      : "years must be strictly increasing",
                       rec.line, "year");
    }
    rec.year = year;
    rec.y_current = required_number(doc, r, idx[1], "y_current");
    rec.y_potential = required_number(doc, r, idx[2], "y_potential");
    rec.revenue = required_number(doc, r, idx[3], "revenue");
    rec.expenditure = required_number(doc, r, idx[4], "expenditure");
    rec.eps_v = optional_number(doc, r, eps_v, "eps_v");
    rec.eps_c = optional_number(doc, r, eps_c, "eps_c");
    for (int i = 0; i < 4; ++i) {
      rec.t[i] = optional_number(doc, r, t_cols[i], "t" + std::to_string(i + 1));
      rec.eps_t[i] = optional_number(doc, r, eps_t_cols[i], "eps_t" + std::to_string(i + 1));
    }
    rec.x_term = optional_number(doc, r, x_term, "x_term");
    rec.u_current = optional_number(doc, r, u_current, "u_current");
    rec.u_structural = optional_number(doc, r, u_structural, "u_structural");
    rec.eps_c_u = optional_number(doc, r, eps_c_u, "eps_c_u");
    rec.debt_ratio = optional_number(doc, r, debt, "debt_ratio");
    table.rows.push_back(std::move(rec));
  }
  return table;
}

ObservationTable ingest_csv(const std::filesystem::path& path) {
  return to_observation_table(read_csv(path));
}

void require_disaggregate_columns(const ObservationTable& table) {
  for (const auto& rec : table.rows) {
    for (int i = 0; i < 4; ++i) {
      if (!rec.t[i]) throw InputError("missing value", rec.line, "t" + std::to_string(i + 1));
      if (!rec.eps_t[i]) {
        throw InputError("missing value", rec.line, "eps_t" + std::to_string(i + 1));
      }
    }
    if (!rec.u_current) throw InputError("missing value", rec.line, "u_current");
    if (!rec.u_structural) throw InputError("missing value", rec.line, "u_structural");
    if (!rec.eps_c_u) throw InputError("missing value", rec.line, "eps_c_u");
  }
}

void require_debt_ratio(const ObservationTable& table) {
  for (const auto& rec : table.rows) {
    if (!rec.debt_ratio) throw InputError("missing value", rec.line, "debt_ratio");
  }
}

}  // namespace fiscalstab::io

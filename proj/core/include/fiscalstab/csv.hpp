#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiscalstab/decimal.hpp"

namespace fiscalstab::io {

/// Raw comma-separated document. Fields are trimmed; blank lines and lines
/// starting with '#' are skipped. Quoting is not supported: the schema has no
/// text columns. `lines[i]` is the 1-based source line of `rows[i]`.
struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;

  std::optional<std::size_t> column(std::string_view name) const;
};

CsvDocument parse_csv(std::string_view text);
CsvDocument read_csv(const std::filesystem::path& path);

/// Decimal-point number with no thousands separators. Throws InputError
/// carrying `line` and `column` on anything else, including inf/nan.
double parse_number(std::string_view cell, std::size_t line, std::string_view column);

/// Exact decimal total of one column; avoids binary rounding of the addends.
Decimal exact_column_sum(const CsvDocument& doc, std::string_view column);

/// Column values as doubles. Throws InputError when the column is missing.
std::vector<double> numeric_column(const CsvDocument& doc, std::string_view column);

/// One year of national-accounts data. Optional columns that are absent from
/// the file, or blank in this row, stay empty.
struct ObservationRecord {
  std::size_t line = 0;
  int year = 0;
  double y_current = 0.0;
  double y_potential = 0.0;
  double revenue = 0.0;
  double expenditure = 0.0;
  std::optional<double> eps_v;
  std::optional<double> eps_c;
  std::array<std::optional<double>, 4> t{};
  std::array<std::optional<double>, 4> eps_t{};
  std::optional<double> x_term;
  std::optional<double> u_current;
  std::optional<double> u_structural;
  std::optional<double> eps_c_u;
  std::optional<double> debt_ratio;
};

struct ObservationTable {
  std::vector<ObservationRecord> rows;
};

/// Required columns: year, y_current, y_potential, revenue, expenditure.
/// Years must be integers and strictly increasing. Unknown columns are ignored,
/// so a decomposition report written as CSV can be read back.
ObservationTable to_observation_table(const CsvDocument& doc);
ObservationTable ingest_csv(const std::filesystem::path& path);

/// Throws InputError naming the first row/column that lacks the
/// disaggregate-method fields (t1..t4, eps_t1..eps_t4, u_current,
/// u_structural, eps_c_u).
void require_disaggregate_columns(const ObservationTable& table);

/// Throws InputError naming the first row without debt_ratio.
void require_debt_ratio(const ObservationTable& table);

}  // namespace fiscalstab::io

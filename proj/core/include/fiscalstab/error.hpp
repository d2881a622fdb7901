#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fiscalstab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation. `field()` names it.
class DomainError : public Error {
 public:
  DomainError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Derivative requested at a point where the function has a kink.
class NonDifferentiableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computation produced a non-finite value or failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A trajectory crosses a pole of its closed form or escapes to infinity.
class SingularityError : public NumericError {
 public:
  SingularityError(const std::string& what, std::optional<double> blow_up_time)
      : NumericError(what), blow_up_time_(blow_up_time) {}

  std::optional<double> blow_up_time() const noexcept { return blow_up_time_; }

 private:
  std::optional<double> blow_up_time_;
};

/// Malformed input data. Row and column are 1-based; 0 means "not applicable".
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t row = 0, std::string column = {})
      : Error(format(what, row, column)), row_(row), column_(std::move(column)) {}

  std::size_t row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t row,
                            const std::string& column) {
    std::string out;
    if (row != 0) out += "row " + std::to_string(row);
    if (!column.empty()) out += (out.empty() ? "column '" : ", column '") + column + "'";
    return out.empty() ? what : out + ": " + what;
  }

  std::size_t row_;
  std::string column_;
};

}  // namespace fiscalstab

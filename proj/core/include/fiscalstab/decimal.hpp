#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fiscalstab::io {

/// Fixed-point decimal used for exact column totals: value = units * 10^-scale.
/// Parsing accepts an optional sign, digits and one '.', nothing else.
class Decimal {
 public:
  Decimal() = default;

  /// Throws InputError on malformed text or when more than 18 significant
  /// digits are needed.
  static Decimal parse(std::string_view text);

  /// Throws NumericError on overflow.
  Decimal operator+(const Decimal& other) const;
  Decimal& operator+=(const Decimal& other) { return *this = *this + other; }

  /// Canonical text: no trailing fractional zeros, no leading '+'.
  std::string to_string() const;
  double to_double() const;

  std::int64_t units() const noexcept { return units_; }
  int scale() const noexcept { return scale_; }

  /// Values compare equal regardless of representation (1.50 == 1.5).
  friend bool operator==(const Decimal& a, const Decimal& b);

 private:
  Decimal(std::int64_t units, int scale) : units_(units), scale_(scale) {}
  Decimal rescaled(int scale) const;

  std::int64_t units_ = 0;
  int scale_ = 0;
};

}  // namespace fiscalstab::io

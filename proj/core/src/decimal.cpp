#include "fiscalstab/decimal.hpp"

#include <charconv>
#include <algorithm>

#include "fiscalstab/error.hpp"

namespace fiscalstab::io {
namespace {

constexpr int kMaxScale = 18;

std::int64_t pow10(int n) {
  std::int64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Decimal Decimal::parse(std::string_view text) {
  const std::string original(text);
  if (text.empty()) throw InputError("empty decimal");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::int64_t units = 0;
  int scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  int significant = 0;
  for (const char ch : text) {
    if (ch == '.') {
      if (seen_point) throw InputError("malformed decimal '" + original + "'");
      seen_point = true;
      continue;
    }
    if (ch < '0' || ch > '9') throw InputError("malformed decimal '" + original + "'");
    seen_digit = true;
    if (seen_point) ++scale;
    if (significant > 0 || ch != '0') ++significant;
    if (scale > kMaxScale || significant > 18 || __builtin_mul_overflow(units, 10, &units) ||
        __builtin_add_overflow(units, ch - '0', &units)) {
      throw InputError("decimal '" + original + "' exceeds 18 digits");
    }
  }
  if (!seen_digit) throw InputError("malformed decimal '" + original + "'");
  return {negative ? -units : units, scale};
}

Decimal Decimal::rescaled(int scale) const {
  std::int64_t u = units_;
  if (__builtin_mul_overflow(u, pow10(scale - scale_), &u)) {
    throw NumericError("decimal overflow");
  }
  return {u, scale};
}

Decimal Decimal::operator+(const Decimal& other) const {
  const int scale = std::max(scale_, other.scale_);
  const Decimal a = rescaled(scale);
  const Decimal b = other.rescaled(scale);
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a.units_, b.units_, &sum)) throw NumericError("decimal overflow");
  return {sum, scale};
}

bool operator==(const Decimal& a, const Decimal& b) {
  const int scale = std::max(a.scale_, b.scale_);
  return a.rescaled(scale).units_ == b.rescaled(scale).units_;
}

std::string Decimal::to_string() const {
  if (units_ == 0) return "0";
  const bool negative = units_ < 0;
  std::string digits = std::to_string(negative ? -units_ : units_);
  int scale = scale_;
  while (scale > 0 && digits.size() > 1 && digits.back() == '0') {
    digits.pop_back();
    --scale;
  }
  if (scale > 0) {
    if (static_cast<int>(digits.size()) <= scale) {
      digits.insert(0, static_cast<std::size_t>(scale) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale), ".");
  }
  return negative ? "-" + digits : digits;
}

double Decimal::to_double() const {
  // Rounds the exact decimal once, unlike units / 10^scale.
  const std::string text = to_string();
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

}  // namespace fiscalstab::io

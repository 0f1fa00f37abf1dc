#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace multicount {

/// Arbitrary-precision nonnegative integer.
///
/// Every operation that could leave the nonnegative range (subtraction
/// below zero, inexact division) throws instead of wrapping.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses a plain decimal string: digits only, no sign, no whitespace.
  /// Throws std::invalid_argument on anything else.
  static Natural from_string(std::string_view decimal);

  std::string to_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  std::optional<std::uint64_t> to_u64() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  /// Throws std::domain_error when rhs > *this.
  Natural& operator-=(const Natural& rhs);

  /// Exact quotient; throws std::domain_error if divisor is zero or does
  /// not divide *this.
  Natural divide_exact(const Natural& divisor) const;
  bool divisible_by(const Natural& divisor) const;

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

  const mpz_class& mpz() const { return value_; }
  /// Adopts a GMP value; throws std::domain_error if it is negative.
  static Natural from_mpz(mpz_class value);

 private:
  mpz_class value_;
};

Natural gcd(const Natural& a, const Natural& b);

}  // namespace multicount

#include "multicount/natural.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace multicount {

Natural::Natural(std::uint64_t value) {
  // mpz_class has no portable uint64 constructor on every platform.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

Natural Natural::from_string(std::string_view decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a nonnegative decimal integer: '" + std::string(decimal) + "'");
  }
  Natural out;
  out.value_.set_str(std::string(decimal), 10);
  return out;
}

Natural Natural::from_mpz(mpz_class value) {
  if (sgn(value) < 0) throw std::domain_error("negative value cannot be a Natural");
  Natural out;
  out.value_ = std::move(value);
  return out;
}

std::string Natural::to_string() const { return value_.get_str(10); }

std::optional<std::uint64_t> Natural::to_u64() const {
  if (mpz_sizeinbase(value_.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (rhs > *this) throw std::domain_error("Natural subtraction would go negative");
  value_ -= rhs.value_;
  return *this;
}

bool Natural::divisible_by(const Natural& divisor) const {
  if (divisor.is_zero()) return is_zero();
  return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

Natural Natural::divide_exact(const Natural& divisor) const {
  if (divisor.is_zero() || !divisible_by(divisor)) {
    throw std::domain_error("inexact division: " + to_string() + " / " + divisor.to_string());
  }
  Natural out;
  mpz_divexact(out.value_.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural::from_mpz(std::move(g));
}

}  // namespace multicount

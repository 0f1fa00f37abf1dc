#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "multicount/natural.hpp"

namespace multicount {

/// A prime power p^r with p prime and r >= 1. The value 1 is never a
/// PrimePower.
struct PrimePower {
  std::uint64_t p = 0;
  int r = 0;

  Natural value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct PrimeFactor {
  std::uint64_t prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for 1.
using Factorization = std::vector<PrimeFactor>;

/// Smallest-prime-factor table over [0, bound]. Read-only after
/// construction.
class Sieve {
 public:
  static constexpr std::uint32_t kDefaultBound = 1u << 20;

  explicit Sieve(std::uint32_t bound = kDefaultBound);

  std::uint32_t bound() const { return bound_; }
  /// Smallest prime factor of m for 2 <= m <= bound.
  std::uint32_t spf(std::uint32_t m) const { return spf_[m]; }
  bool is_prime(std::uint64_t m) const;
  /// Primes in ascending order, all <= bound.
  std::span<const std::uint32_t> primes() const { return primes_; }
  /// Primes p <= limit (limit is clamped to the bound).
  std::span<const std::uint32_t> primes_up_to(std::uint64_t limit) const;

  /// Complete factorization. Uses the table for m <= bound and trial
  /// division by the table's primes above it. Throws std::invalid_argument
  /// if m < 1.
  Factorization factorize(std::uint64_t m) const;

 private:
  std::uint32_t bound_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Process-wide sieve. The bound is kDefaultBound unless the environment
/// variable MULTICOUNT_SIEVE_BOUND holds a positive integer (read once).
const Sieve& default_sieve();

Factorization factorize(std::int64_t m);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Natural binomial(std::int64_t n, std::int64_t k);

/// (sum parts)! / prod(parts_i!), built as a product of binomials over
/// prefix sums.
Natural multinomial(std::span<const std::int64_t> parts);

/// Exponent of p in n!. Throws std::invalid_argument if p < 2 or n < 0.
std::int64_t legendre_order(std::int64_t p, std::int64_t n);

/// Exponent of p in C(n, k) as a difference of factorial orders.
std::int64_t binomial_p_order(std::int64_t p, std::int64_t n, std::int64_t k);

/// Number of carries when k and n - k are added in base p. Equal to
/// binomial_p_order for prime p.
std::int64_t kummer_carries(std::int64_t p, std::int64_t n, std::int64_t k);

/// True iff p divides C(n, k). Stops at the first carry.
bool prime_divides_binomial(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// (base, r) with base prime and base^r == m, or empty. 0 and 1 are not
/// prime powers. The base may exceed 64 bits.
std::optional<std::pair<Natural, int>> prime_power_root(const Natural& m);

/// As prime_power_root, narrowed to a PrimePower. Throws std::out_of_range
/// when m is a power of a prime that does not fit in 64 bits.
std::optional<PrimePower> is_prime_power(const Natural& m);

/// Prime-power decomposition of C(n, k) without evaluating it: every prime
/// factor of C(n, k) is at most n, so the primes up to n are scanned with
/// carry counting until a second distinct divisor appears.
std::optional<PrimePower> binomial_is_prime_power(std::int64_t n, std::int64_t k);

}  // namespace multicount

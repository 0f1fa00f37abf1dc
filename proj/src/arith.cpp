#include "multicount/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace multicount {

namespace {

void require_prime_base(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("prime base must be >= 2, got " + std::to_string(p));
}

void require_binomial_range(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
}

bool probably_prime(const mpz_class& m) {
  // BPSW inside GMP; no known pseudoprimes and none below 2^64.
  return mpz_probab_prime_p(m.get_mpz_t(), 30) > 0;
}

std::uint32_t sieve_bound_from_env() {
  const char* raw = std::getenv("MULTICOUNT_SIEVE_BOUND");
  if (raw == nullptr || *raw == '\0') return Sieve::kDefaultBound;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (*end != '\0' || parsed < 2 || parsed > 0xffffffffull) return Sieve::kDefaultBound;
  return static_cast<std::uint32_t>(parsed);
}

}  // namespace

Natural PrimePower::value() const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(r));
  return Natural::from_mpz(std::move(out));
}

Sieve::Sieve(std::uint32_t bound) : bound_(std::max<std::uint32_t>(bound, 2)), spf_(bound_ + 1, 0) {
  for (std::uint64_t i = 2; i <= bound_; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound_; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

bool Sieve::is_prime(std::uint64_t m) const {
  if (m < 2) return false;
  if (m <= bound_) return spf_[m] == m;
  return probably_prime(Natural(m).mpz());
}

std::span<const std::uint32_t> Sieve::primes_up_to(std::uint64_t limit) const {
  auto end = std::upper_bound(primes_.begin(), primes_.end(), limit);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

Factorization Sieve::factorize(std::uint64_t m) const {
  if (m < 1) throw std::invalid_argument("factorize needs m >= 1");
  Factorization out;
  auto push = [&out](std::uint64_t p) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  };

  // Trial division until the cofactor fits in the table.
  std::uint64_t divisor = 2;
  for (std::size_t i = 0; m > bound_; ++i) {
    divisor = i < primes_.size() ? primes_[i] : (divisor == 2 ? 3 : divisor + 2);
    if (divisor > m / divisor) {
      push(m);
      return out;
    }
    while (m % divisor == 0) {
      push(divisor);
      m /= divisor;
    }
  }
  while (m > 1) {
    const std::uint32_t p = spf_[m];
    push(p);
    m /= p;
  }
  return out;
}

const Sieve& default_sieve() {
  static const Sieve sieve(sieve_bound_from_env());
  return sieve;
}

Factorization factorize(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("factorize needs m >= 1, got " + std::to_string(m));
  return default_sieve().factorize(static_cast<std::uint64_t>(m));
}

Natural binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial needs n >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return Natural(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Natural::from_mpz(std::move(out));
}

Natural multinomial(std::span<const std::int64_t> parts) {
  Natural out(1);
  std::int64_t prefix = 0;
  for (const std::int64_t c : parts) {
    if (c < 0) throw std::invalid_argument("multinomial parts must be >= 0");
    prefix += c;
    out *= binomial(prefix, c);
  }
  return out;
}

std::int64_t legendre_order(std::int64_t p, std::int64_t n) {
  require_prime_base(p);
  if (n < 0) throw std::invalid_argument("legendre_order needs n >= 0");
  std::int64_t order = 0;
  for (std::int64_t q = p; q <= n; q *= p) {
    order += n / q;
    if (q > n / p) break;
  }
  return order;
}

std::int64_t binomial_p_order(std::int64_t p, std::int64_t n, std::int64_t k) {
  require_prime_base(p);
  require_binomial_range(n, k);
  return legendre_order(p, n) - legendre_order(p, k) - legendre_order(p, n - k);
}

std::int64_t kummer_carries(std::int64_t p, std::int64_t n, std::int64_t k) {
  require_prime_base(p);
  require_binomial_range(n, k);
  std::int64_t a = k;
  std::int64_t b = n - k;
  std::int64_t carry = 0;
  std::int64_t carries = 0;
  while (a > 0 || b > 0 || carry > 0) {
    carry = (a % p + b % p + carry) >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

bool prime_divides_binomial(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  std::uint64_t a = k;
  std::uint64_t b = n - k;
  while (a > 0 || b > 0) {
    if (a % p + b % p >= p) return true;
    a /= p;
    b /= p;
  }
  return false;
}

std::optional<std::pair<Natural, int>> prime_power_root(const Natural& m) {
  if (m < Natural(2)) return std::nullopt;
  const Sieve& sieve = default_sieve();

  if (auto small = m.to_u64(); small && *small <= sieve.bound()) {
    const Factorization f = sieve.factorize(*small);
    if (f.size() != 1) return std::nullopt;
    return std::pair{Natural(f.front().prime), f.front().exponent};
  }

  // A small prime factor decides the question by itself.
  mpz_class rest = m.mpz();
  for (const std::uint32_t p : sieve.primes_up_to(1000)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    const mpz_class prime(p);
    const auto r = static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
    if (rest != 1) return std::nullopt;
    return std::pair{Natural(p), r};
  }

  // Reduce to a base that is not a perfect power, then test it.
  int exponent = 1;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    const std::size_t bits = mpz_sizeinbase(rest.get_mpz_t(), 2);
    for (const std::uint32_t q : sieve.primes_up_to(bits)) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), q) != 0) {
        rest = root;
        exponent *= static_cast<int>(q);
        reduced = true;
        break;
      }
    }
  }
  if (!probably_prime(rest)) return std::nullopt;
  return std::pair{Natural::from_mpz(rest), exponent};
}

std::optional<PrimePower> is_prime_power(const Natural& m) {
  auto root = prime_power_root(m);
  if (!root) return std::nullopt;
  const auto base = root->first.to_u64();
  if (!base) throw std::out_of_range("prime base of " + m.to_string() + " exceeds 64 bits");
  return PrimePower{*base, root->second};
}

std::optional<PrimePower> binomial_is_prime_power(std::int64_t n, std::int64_t k) {
  require_binomial_range(n, k);
  if (k == 0 || k == n) return std::nullopt;
  const Sieve& sieve = default_sieve();
  if (static_cast<std::uint64_t>(n) > sieve.bound()) return is_prime_power(binomial(n, k));

  std::optional<PrimePower> found;
  for (const std::uint32_t p : sieve.primes_up_to(static_cast<std::uint64_t>(n))) {
    const std::int64_t order = kummer_carries(p, n, k);
    if (order == 0) continue;
    if (found) return std::nullopt;
    found = PrimePower{p, static_cast<int>(order)};
  }
  return found;
}

}  // namespace multicount

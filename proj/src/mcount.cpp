#include "multicount/mcount.hpp"

#include <stdexcept>
#include <string>

namespace multicount {

namespace {

void require_positive(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) {
    throw std::invalid_argument("need n >= 1 and k >= 1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

std::int64_t divides(std::int64_t d, std::int64_t n) { return n % d == 0 ? 1 : 0; }

// C(a, c), or empty once it exceeds limit. The running value walks through
// C(a, 1), ..., C(a, min(c, a - c)), which is increasing.
std::optional<std::uint64_t> bounded_binomial(std::int64_t a, std::int64_t c, std::uint64_t limit) {
  c = std::min(c, a - c);
  unsigned __int128 r = 1;
  for (std::int64_t i = 0; i < c; ++i) {
    r = r * static_cast<unsigned __int128>(a - i) / static_cast<unsigned __int128>(i + 1);
    if (r > limit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(r);
}

// Multinomial of the run lengths of a sorted parts list, or empty once the
// partial product exceeds limit.
std::optional<std::uint64_t> bounded_multinomial_of_runs(std::span<const std::int64_t> parts, std::uint64_t limit) {
  unsigned __int128 product = 1;
  std::int64_t prefix = 0;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i + 1;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    prefix += run;
    const auto factor = bounded_binomial(prefix, run, limit);
    if (!factor) return std::nullopt;
    product *= *factor;
    if (product > limit) return std::nullopt;
    i = j;
  }
  return static_cast<std::uint64_t>(product);
}

Natural multinomial_of_runs(std::span<const std::int64_t> parts) {
  std::vector<std::int64_t> runs;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i + 1;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    runs.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  return multinomial(runs);
}

}  // namespace

MQuery::MQuery(Natural m_, std::int64_t n_, std::int64_t k_) : m(std::move(m_)), n(n_), k(k_) {
  if (m.is_zero()) throw std::invalid_argument("m must be >= 1");
  require_positive(n, k);
}

MResult m_count_bruteforce(const MQuery& q, bool collect) {
  MResult result{Natural(0), std::nullopt};
  if (collect) result.witnesses.emplace();
  const std::optional<std::uint64_t> small_m = q.m.to_u64();

  std::uint64_t hits = 0;
  for (PartitionStream stream(q.n, q.k); !stream.done(); stream.advance()) {
    bool match = false;
    if (small_m) {
      const auto value = bounded_multinomial_of_runs(stream.parts(), *small_m);
      match = value && *value == *small_m;
    } else {
      match = multinomial_of_runs(stream.parts()) == q.m;
    }
    if (!match) continue;
    ++hits;
    if (collect) result.witnesses->push_back(stream.current());
  }
  result.count = Natural(hits);
  return result;
}

std::map<Natural, Natural> multinomial_distribution(std::int64_t n, std::int64_t k) {
  std::map<Natural, Natural> out;
  for (PartitionStream stream(n, k); !stream.done(); stream.advance()) {
    out[multinomial_of_runs(stream.parts())] += Natural(1);
  }
  return out;
}

Natural m_closed_one(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  return Natural(static_cast<std::uint64_t>(divides(k, n)));
}

Natural m_closed_two(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  if (k != 2) return Natural(0);
  return Natural(static_cast<std::uint64_t>((n - 1) / 2));
}

Natural m_closed_prime_power(const PrimePower& pp, std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  if (pp.r < 1 || !default_sieve().is_prime(pp.p)) {
    throw std::invalid_argument(std::to_string(pp.p) + "^" + std::to_string(pp.r) + " is not a prime power");
  }
  const Natural value = pp.value();
  if (value <= Natural(2)) throw std::invalid_argument("closed form needs p^r > 2; use m_closed_two");
  const auto q = value.to_u64();
  if (!q || *q != static_cast<std::uint64_t>(k)) return Natural(0);
  const auto qi = static_cast<std::int64_t>(*q);
  return Natural(static_cast<std::uint64_t>((n - 1) / (qi - 1) - divides(qi, n)));
}

Natural m_closed_ten(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  std::int64_t total = 0;
  if (k == 10) total = (n - 1) / 9 - divides(10, n);
  if (k == 5) total = (n + 1) / 6 - divides(5, n) - divides(6, n);
  if (total < 0) {
    throw std::logic_error("M_10 closed form is negative at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return Natural(static_cast<std::uint64_t>(total));
}

std::optional<Natural> m_closed(const Natural& m, std::int64_t n, std::int64_t k) {
  if (m.is_zero()) throw std::invalid_argument("m must be >= 1");
  if (m == Natural(1)) return m_closed_one(n, k);
  if (m == Natural(2)) return m_closed_two(n, k);
  if (m == Natural(10)) return m_closed_ten(n, k);
  const auto root = prime_power_root(m);
  if (!root) return std::nullopt;
  if (const auto p = root->first.to_u64()) return m_closed_prime_power(PrimePower{*p, root->second}, n, k);
  // The base alone exceeds any machine k, so the delta on k vanishes.
  require_positive(n, k);
  return Natural(0);
}

Natural fine_lhs(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  Natural sum(0);
  for (PartitionStream stream(n, k); !stream.done(); stream.advance()) {
    sum += multinomial_of_runs(stream.parts());
  }
  return sum;
}

bool fine_check(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  if (k > n) throw std::invalid_argument("fine_check needs k <= n");
  return fine_lhs(n, k) == binomial(n - 1, k - 1);
}

Natural count_xy_solutions(std::int64_t a, std::int64_t n) {
  if (a < 1 || n < 1) throw std::invalid_argument("count_xy_solutions needs a >= 1 and n >= 1");
  return Natural(static_cast<std::uint64_t>((n - 1) / a - divides(a + 1, n)));
}

}  // namespace multicount

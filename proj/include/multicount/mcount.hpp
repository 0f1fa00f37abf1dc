#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "multicount/arith.hpp"
#include "multicount/natural.hpp"
#include "multicount/partitions.hpp"

namespace multicount {

/// Query for M_m(n, k): how many partitions of n into k parts have
/// multiplicity vector whose multinomial coefficient equals m.
struct MQuery {
  Natural m;
  std::int64_t n;
  std::int64_t k;

  /// Throws std::invalid_argument unless m, n, k >= 1.
  MQuery(Natural m, std::int64_t n, std::int64_t k);
};

struct MResult {
  Natural count;
  std::optional<std::vector<MultiplicityVector>> witnesses;
};

/// Enumerates every partition of n into k parts and counts the ones whose
/// multinomial equals m. Witnesses are in enumeration order.
MResult m_count_bruteforce(const MQuery& q, bool collect = false);

/// Histogram value -> number of partitions of n into k parts whose
/// multiplicity vector has that multinomial coefficient.
std::map<Natural, Natural> multinomial_distribution(std::int64_t n, std::int64_t k);

// Closed forms. Each expects n >= 1 and k >= 1 and throws
// std::invalid_argument otherwise.

/// [k | n]
Natural m_closed_one(std::int64_t n, std::int64_t k);
/// [k = 2] * floor((n - 1) / 2)
Natural m_closed_two(std::int64_t n, std::int64_t k);
/// [k = q] * (floor((n - 1) / (q - 1)) - [q | n]) for q = p^r > 2.
/// Throws std::invalid_argument when p^r <= 2.
Natural m_closed_prime_power(const PrimePower& pp, std::int64_t n, std::int64_t k);
/// [k = 10] * (floor((n - 1) / 9) - [10 | n])
///   + [k = 5] * (floor((n + 1) / 6) - [5 | n] - [6 | n])
/// Throws std::logic_error if a term comes out negative.
Natural m_closed_ten(std::int64_t n, std::int64_t k);

/// Routes m to the matching closed form: 1, 2, prime powers above 2, and
/// 10. Empty when no closed form is known for m.
std::optional<Natural> m_closed(const Natural& m, std::int64_t n, std::int64_t k);

/// Sum of multinomial coefficients over all partitions of n into k parts.
Natural fine_lhs(std::int64_t n, std::int64_t k);
/// fine_lhs(n, k) == C(n - 1, k - 1). Requires 1 <= k <= n.
bool fine_check(std::int64_t n, std::int64_t k);

/// Ordered pairs (x, y) of positive integers with a*x + y = n and x != y.
Natural count_xy_solutions(std::int64_t a, std::int64_t n);

}  // namespace multicount

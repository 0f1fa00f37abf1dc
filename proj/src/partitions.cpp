#include "multicount/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace multicount {

std::int64_t PartsList::sum() const { return std::accumulate(parts.begin(), parts.end(), std::int64_t{0}); }

std::vector<std::int64_t> MultiplicityVector::multiplicities() const {
  std::vector<std::int64_t> out;
  out.reserve(counts.size());
  for (const auto& [size, mult] : counts) out.push_back(mult);
  return out;
}

std::vector<std::int64_t> MultiplicityVector::dense() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), 0);
  for (const auto& [size, mult] : counts) out[static_cast<std::size_t>(size - 1)] = mult;
  return out;
}

bool MultiplicityVector::valid() const {
  std::int64_t parts = 0;
  std::int64_t weight = 0;
  for (const auto& [size, mult] : counts) {
    if (size < 1 || size > n || mult < 1) return false;
    parts += mult;
    weight += size * mult;
  }
  return parts == k && weight == n;
}

PartsList to_parts(const MultiplicityVector& v) {
  PartsList out;
  out.parts.reserve(static_cast<std::size_t>(v.k));
  for (auto it = v.counts.rbegin(); it != v.counts.rend(); ++it) {
    out.parts.insert(out.parts.end(), static_cast<std::size_t>(it->second), it->first);
  }
  return out;
}

MultiplicityVector from_parts(const PartsList& parts, std::int64_t n) {
  if (parts.sum() != n) {
    throw std::invalid_argument("parts sum to " + std::to_string(parts.sum()) + ", expected " + std::to_string(n));
  }
  if (!std::is_sorted(parts.parts.begin(), parts.parts.end(), std::greater<>{})) {
    throw std::invalid_argument("parts list must be non-increasing");
  }
  if (!parts.parts.empty() && parts.parts.back() < 1) throw std::invalid_argument("parts must be positive");
  MultiplicityVector out{n, static_cast<std::int64_t>(parts.parts.size()), {}};
  for (const std::int64_t p : parts.parts) ++out.counts[p];
  return out;
}

PartitionStream::PartitionStream(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n || (k == 0) != (n == 0)) {
    done_ = true;
    return;
  }
  // Lexicographically largest: one big part and k - 1 ones.
  parts_.assign(static_cast<std::size_t>(k), 1);
  if (k > 0) parts_.front() = n - k + 1;
}

MultiplicityVector PartitionStream::current() const {
  MultiplicityVector out{n_, k_, {}};
  for (const std::int64_t p : parts_) ++out.counts[p];
  assert(out.valid());
  return out;
}

void PartitionStream::advance() {
  if (done_) return;
  // Find the rightmost part that can shrink by one while the tail absorbs
  // the difference without exceeding it.
  std::int64_t tail = 0;
  for (std::int64_t i = k_ - 2; i >= 0; --i) {
    const auto ui = static_cast<std::size_t>(i);
    tail += parts_[ui + 1];
    const std::int64_t cap = parts_[ui] - 1;
    const std::int64_t slots = k_ - 1 - i;
    std::int64_t remaining = tail + 1;
    if (cap < 1 || slots * cap < remaining) continue;

    parts_[ui] = cap;
    std::int64_t prev = cap;
    for (std::int64_t j = i + 1; j < k_; ++j) {
      const std::int64_t after = k_ - 1 - j;
      const std::int64_t value = std::min(prev, remaining - after);
      parts_[static_cast<std::size_t>(j)] = value;
      remaining -= value;
      prev = value;
    }
    return;
  }
  done_ = true;
}

Natural count_partitions(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Natural(0);
  const auto rows = static_cast<std::size_t>(n + 1);
  const auto cols = static_cast<std::size_t>(k + 1);
  std::vector<Natural> table(rows * cols);
  auto at = [cols, &table](std::int64_t i, std::int64_t j) -> Natural& {
    return table[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j)];
  };
  at(0, 0) = Natural(1);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= std::min(i, k); ++j) {
      at(i, j) = at(i - 1, j - 1) + at(i - j, j);
    }
  }
  return at(n, k);
}

}  // namespace multicount

#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <span>
#include <vector>

#include "multicount/natural.hpp"

namespace multicount {

/// Parts of a partition in non-increasing order.
struct PartsList {
  std::vector<std::int64_t> parts;

  std::int64_t sum() const;
  friend bool operator==(const PartsList&, const PartsList&) = default;
};

/// A partition of n into k parts stored as part size -> multiplicity.
/// Only sizes with multiplicity >= 1 are present.
struct MultiplicityVector {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::map<std::int64_t, std::int64_t> counts;

  /// Multiplicities in ascending part-size order.
  std::vector<std::int64_t> multiplicities() const;
  /// Dense (k_1, ..., k_n); for display.
  std::vector<std::int64_t> dense() const;
  /// Checks both sum constraints and the range of every entry.
  bool valid() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
  friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;
};

PartsList to_parts(const MultiplicityVector& v);
/// Throws std::invalid_argument unless parts is non-increasing, positive
/// and sums to n.
MultiplicityVector from_parts(const PartsList& parts, std::int64_t n);

/// Partitions of n into exactly k positive parts, in lexicographically
/// decreasing order of their parts lists. Single pass.
///
///   for (const MultiplicityVector& v : partitions_into_parts(10, 3)) ...
///
/// Hot loops can skip the map construction with advance()/parts().
class PartitionStream {
 public:
  PartitionStream(std::int64_t n, std::int64_t k);

  bool done() const { return done_; }
  /// Current parts, non-increasing. Valid until the next advance().
  std::span<const std::int64_t> parts() const { return parts_; }
  MultiplicityVector current() const;
  void advance();

  class iterator {
   public:
    using value_type = MultiplicityVector;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PartitionStream* s) : stream_(s) {}
    MultiplicityVector operator*() const { return stream_->current(); }
    iterator& operator++() {
      stream_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.stream_ == nullptr || it.stream_->done();
    }

   private:
    PartitionStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::int64_t n_;
  std::int64_t k_;
  std::vector<std::int64_t> parts_;
  bool done_ = false;
};

inline PartitionStream partitions_into_parts(std::int64_t n, std::int64_t k) { return {n, k}; }

/// Number of partitions of n into exactly k parts, by the recurrence
/// p(n, k) = p(n-1, k-1) + p(n-k, k) with p(0, 0) = 1.
Natural count_partitions(std::int64_t n, std::int64_t k);

}  // namespace multicount

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace multicount {

enum class SearchMode { gcd_conjecture, lemma1 };

std::string_view to_string(SearchMode mode);
/// Accepts "gcd_conjecture" / "lemma1"; the CLI spelling "gcd-conjecture"
/// is accepted as well.
std::optional<SearchMode> parse_search_mode(std::string_view text);

using NK = std::pair<std::int64_t, std::int64_t>;

/// gcd(C(n, k), C(n-1, 2)) > 1, with both binomials evaluated exactly.
/// Throws std::invalid_argument unless 2 <= k <= n/2.
bool gcd_conjecture_holds_direct(std::int64_t n, std::int64_t k);

/// Same verdict without evaluating C(n, k): a prime factor of
/// (n-1)(n-2)/2 divides C(n, k) iff adding k and n-k in that base carries.
bool gcd_conjecture_holds_fast(std::int64_t n, std::int64_t k);

/// C(n, k) is not a prime power. Throws std::invalid_argument unless
/// 2 <= k <= n/2.
bool lemma1_holds(std::int64_t n, std::int64_t k);

/// Number of k with 2 <= k <= n/2, summed over n in [n_lo, n_hi].
std::int64_t pair_count(std::int64_t n_lo, std::int64_t n_hi);

struct Checkpoint {
  static constexpr int kVersion = 1;

  int version = kVersion;
  SearchMode mode = SearchMode::gcd_conjecture;
  std::int64_t n_verified = 0;
  std::vector<NK> counterexamples;
  std::string created_at;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

class CheckpointError : public std::runtime_error {
 public:
  enum class Kind { corrupt, io };
  CheckpointError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Writes to a sibling temporary and renames over path.
/// Throws CheckpointError(io) on failure.
void checkpoint_save(const Checkpoint& cp, const std::filesystem::path& path);
/// Throws CheckpointError(io) if the file cannot be read and
/// CheckpointError(corrupt) if it does not parse or violates an invariant.
Checkpoint checkpoint_load(const std::filesystem::path& path);

std::string checkpoint_to_json(const Checkpoint& cp);
Checkpoint checkpoint_from_json(std::string_view text);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

struct SearchConfig {
  std::int64_t n_min = 4;
  std::int64_t n_max = 4;
  int workers = 1;
  std::optional<std::filesystem::path> checkpoint_path;
  std::int64_t checkpoint_interval = 500;
  SearchMode mode = SearchMode::gcd_conjecture;

  /// Throws std::invalid_argument on a bad combination.
  void validate() const;
};

struct SearchReport {
  SearchMode mode = SearchMode::gcd_conjecture;
  std::int64_t n_min = 4;
  std::int64_t verified_up_to = 0;
  std::vector<NK> counterexamples;
  std::int64_t pairs_checked = 0;
  /// gcd mode: pairs settled by the carry test alone. Always 0 in lemma1
  /// mode.
  std::int64_t fast_path_hits = 0;
  double elapsed_seconds = 0.0;
  /// Set when some checkpoint write failed; the sweep itself continues.
  std::optional<std::string> checkpoint_error;

  bool holds() const { return counterexamples.empty(); }
};

/// JSON rendering; elapsed is omitted when include_elapsed is false so two
/// reports can be compared byte for byte.
std::string report_to_json(const SearchReport& report, bool include_elapsed = true);

/// Checks every (n, k) with n_min <= n <= n_max and 2 <= k <= n/2.
///
/// Work proceeds in batches of checkpoint_interval consecutive n; a batch is
/// split into contiguous blocks across the workers and the checkpoint (if
/// configured) is written after each batch. A stop request is honoured
/// between batches, leaving verified_up_to at the last finished batch.
SearchReport search(const SearchConfig& config, std::stop_token stop = {});

/// Continues a sweep from a checkpoint. The checkpoint must come from a run
/// with the same mode and n_min. Throws std::invalid_argument otherwise.
SearchReport resume(const SearchConfig& config, const Checkpoint& from, std::stop_token stop = {});

}  // namespace multicount

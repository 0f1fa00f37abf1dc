#include "multicount/conjecture.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <string>

#include <json.hpp>

#include "multicount/arith.hpp"

namespace multicount {

namespace {

void require_lower_half(std::int64_t n, std::int64_t k) {
  if (k < 2 || 2 * k > n) {
    throw std::invalid_argument("need 2 <= k <= n/2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

// Distinct primes of (n-1)(n-2)/2, ascending.
std::vector<std::uint64_t> triangular_primes(std::int64_t n) {
  std::vector<std::uint64_t> primes;
  int twos = 0;
  for (const std::int64_t factor : {n - 1, n - 2}) {
    for (const PrimeFactor& pf : factorize(factor)) {
      if (pf.prime == 2) {
        twos += pf.exponent;
      } else {
        primes.push_back(pf.prime);
      }
    }
  }
  // n-1 and n-2 are coprime, so odd primes never repeat.
  if (twos >= 2) primes.push_back(2);
  std::sort(primes.begin(), primes.end());
  return primes;
}

struct BlockResult {
  std::vector<NK> counterexamples;
  std::int64_t fast_hits = 0;
};

BlockResult check_block(SearchMode mode, std::int64_t n_lo, std::int64_t n_hi) {
  BlockResult out;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    if (mode == SearchMode::lemma1) {
      for (std::int64_t k = 2; 2 * k <= n; ++k) {
        if (!lemma1_holds(n, k)) out.counterexamples.emplace_back(n, k);
      }
      continue;
    }
    const std::vector<std::uint64_t> primes = triangular_primes(n);
    const auto un = static_cast<std::uint64_t>(n);
    for (std::int64_t k = 2; 2 * k <= n; ++k) {
      const bool fast = std::any_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
        return prime_divides_binomial(p, un, static_cast<std::uint64_t>(k));
      });
      if (fast) {
        ++out.fast_hits;
        continue;
      }
      if (gcd_conjecture_holds_direct(n, k)) {
        throw std::logic_error("carry test and exact gcd disagree at n=" + std::to_string(n) +
                               " k=" + std::to_string(k));
      }
      out.counterexamples.emplace_back(n, k);
    }
  }
  return out;
}

SearchReport run(const SearchConfig& config, SearchReport report, std::stop_token stop) {
  const auto started = std::chrono::steady_clock::now();
  std::int64_t next = report.verified_up_to + 1;

  while (next <= config.n_max && !stop.stop_requested()) {
    const std::int64_t batch_end = std::min(config.n_max, next + config.checkpoint_interval - 1);
    const std::int64_t span = batch_end - next + 1;
    const std::int64_t blocks = std::min<std::int64_t>(config.workers, span);

    std::vector<BlockResult> results;
    if (blocks == 1) {
      results.push_back(check_block(config.mode, next, batch_end));
    } else {
      std::vector<std::future<BlockResult>> pending;
      for (std::int64_t b = 0; b < blocks; ++b) {
        const std::int64_t lo = next + span * b / blocks;
        const std::int64_t hi = next + span * (b + 1) / blocks - 1;
        pending.push_back(std::async(std::launch::async, check_block, config.mode, lo, hi));
      }
      for (auto& f : pending) results.push_back(f.get());
    }

    for (BlockResult& r : results) {
      report.counterexamples.insert(report.counterexamples.end(), r.counterexamples.begin(), r.counterexamples.end());
      report.fast_path_hits += r.fast_hits;
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.pairs_checked += pair_count(next, batch_end);
    report.verified_up_to = batch_end;
    next = batch_end + 1;

    if (config.checkpoint_path) {
      const Checkpoint cp{Checkpoint::kVersion, config.mode, report.verified_up_to, report.counterexamples,
                          utc_timestamp()};
      try {
        checkpoint_save(cp, *config.checkpoint_path);
      } catch (const CheckpointError& e) {
        report.checkpoint_error = e.what();
      }
    }
  }

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::lemma1 ? "lemma1" : "gcd_conjecture";
}

std::optional<SearchMode> parse_search_mode(std::string_view text) {
  if (text == "gcd_conjecture" || text == "gcd-conjecture") return SearchMode::gcd_conjecture;
  if (text == "lemma1") return SearchMode::lemma1;
  return std::nullopt;
}

bool gcd_conjecture_holds_direct(std::int64_t n, std::int64_t k) {
  require_lower_half(n, k);
  return gcd(binomial(n, k), binomial(n - 1, 2)) > Natural(1);
}

bool gcd_conjecture_holds_fast(std::int64_t n, std::int64_t k) {
  require_lower_half(n, k);
  for (const std::uint64_t p : triangular_primes(n)) {
    if (kummer_carries(static_cast<std::int64_t>(p), n, k) >= 1) return true;
  }
  return false;
}

bool lemma1_holds(std::int64_t n, std::int64_t k) {
  require_lower_half(n, k);
  return !binomial_is_prime_power(n, k).has_value();
}

std::int64_t pair_count(std::int64_t n_lo, std::int64_t n_hi) {
  std::int64_t total = 0;
  for (std::int64_t n = std::max<std::int64_t>(n_lo, 4); n <= n_hi; ++n) total += n / 2 - 1;
  return total;
}

void SearchConfig::validate() const {
  if (n_min < 4) throw std::invalid_argument("n_min must be >= 4");
  if (n_max < n_min) throw std::invalid_argument("n_max must be >= n_min");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (checkpoint_interval < 1) throw std::invalid_argument("checkpoint_interval must be >= 1");
}

std::string report_to_json(const SearchReport& report, bool include_elapsed) {
  nlohmann::ordered_json doc;
  doc["mode"] = to_string(report.mode);
  doc["n_min"] = report.n_min;
  doc["verified_up_to"] = report.verified_up_to;
  doc["pairs_checked"] = report.pairs_checked;
  doc["fast_path_hits"] = report.fast_path_hits;
  doc["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& [n, k] : report.counterexamples) doc["counterexamples"].push_back({n, k});
  doc["holds"] = report.holds();
  if (report.checkpoint_error) doc["checkpoint_error"] = *report.checkpoint_error;
  if (include_elapsed) doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc.dump();
}

SearchReport search(const SearchConfig& config, std::stop_token stop) {
  config.validate();
  SearchReport report;
  report.mode = config.mode;
  report.n_min = config.n_min;
  report.verified_up_to = config.n_min - 1;
  return run(config, std::move(report), std::move(stop));
}

SearchReport resume(const SearchConfig& config, const Checkpoint& from, std::stop_token stop) {
  config.validate();
  if (from.mode != config.mode) {
    throw std::invalid_argument("checkpoint is for mode " + std::string(to_string(from.mode)) + ", run is " +
                                std::string(to_string(config.mode)));
  }
  if (from.n_verified < config.n_min - 1) {
    throw std::invalid_argument("checkpoint stops before n_min");
  }
  for (const auto& [n, k] : from.counterexamples) {
    if (n < config.n_min) throw std::invalid_argument("checkpoint holds counterexamples below n_min");
  }

  SearchReport report;
  report.mode = config.mode;
  report.n_min = config.n_min;
  report.verified_up_to = from.n_verified;
  report.counterexamples = from.counterexamples;
  report.pairs_checked = pair_count(config.n_min, from.n_verified);
  if (config.mode == SearchMode::gcd_conjecture) {
    report.fast_path_hits = report.pairs_checked - static_cast<std::int64_t>(from.counterexamples.size());
  }
  return run(config, std::move(report), std::move(stop));
}

}  // namespace multicount

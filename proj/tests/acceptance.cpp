// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails or overruns its time limit.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "multicount/arith.hpp"
#include "multicount/cli.hpp"
#include "multicount/conjecture.hpp"
#include "multicount/mcount.hpp"
#include "multicount/partitions.hpp"

using namespace multicount;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> body;
};

std::string nk(std::int64_t n, std::int64_t k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

Outcome paper_example() {
  Outcome o;
  const MResult r = m_count_bruteforce(MQuery(Natural(6), 10, 3), true);
  if (r.count != Natural(4)) o.fail("count " + r.count.to_string());
  std::set<std::vector<std::int64_t>> got;
  for (const auto& w : *r.witnesses) {
    auto parts = to_parts(w).parts;
    std::reverse(parts.begin(), parts.end());
    got.insert(parts);
  }
  const std::set<std::vector<std::int64_t>> expected = {{1, 2, 7}, {1, 3, 6}, {1, 4, 5}, {2, 3, 5}};
  if (got != expected || r.witnesses->size() != 4) o.fail("witness set differs");
  return o;
}

Outcome theorem_one() {
  Outcome o;
  const std::vector<PrimePower> powers = {{3, 1}, {2, 2}, {5, 1}, {7, 1},  {2, 3}, {3, 2},
                                          {11, 1}, {13, 1}, {2, 4}, {5, 2}, {3, 3}, {2, 5}};
  std::int64_t cells = 0;
  for (const PrimePower& pp : powers) {
    const Natural q = pp.value();
    for (std::int64_t n = 1; n <= 50; ++n) {
      for (std::int64_t k = 1; k <= n; ++k, ++cells) {
        const Natural closed = m_closed_prime_power(pp, n, k);
        const Natural brute = m_count_bruteforce(MQuery(q, n, k)).count;
        if (closed != brute) o.fail("m=" + q.to_string() + " at " + nk(n, k));
      }
    }
  }
  o.detail = o.ok ? std::to_string(cells) + " cells" : o.detail;
  return o;
}

Outcome small_closed_forms() {
  Outcome o;
  for (std::int64_t n = 1; n <= 50; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      if (m_closed_one(n, k) != m_count_bruteforce(MQuery(Natural(1), n, k)).count) o.fail("M_1 at " + nk(n, k));
      if (m_closed_two(n, k) != m_count_bruteforce(MQuery(Natural(2), n, k)).count) o.fail("M_2 at " + nk(n, k));
    }
  }
  for (std::int64_t n = 1; n <= 80; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      if (m_closed_ten(n, k) != m_count_bruteforce(MQuery(Natural(10), n, k)).count) o.fail("M_10 at " + nk(n, k));
    }
  }
  return o;
}

Outcome fine_identity() {
  Outcome o;
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      if (!fine_check(n, k)) o.fail("Fine at " + nk(n, k));
      Natural mass(0);
      Natural total(0);
      for (const auto& [value, count] : multinomial_distribution(n, k)) {
        mass += value * count;
        total += count;
      }
      if (mass != binomial(n - 1, k - 1)) o.fail("mass at " + nk(n, k));
      if (total != count_partitions(n, k)) o.fail("cardinality at " + nk(n, k));
    }
  }
  return o;
}

Outcome lemma_one() {
  Outcome o;
  std::int64_t pairs = 0;
  for (std::int64_t n = 4; n <= 2000; ++n) {
    for (std::int64_t k = 2; 2 * k <= n; ++k, ++pairs) {
      if (!lemma1_holds(n, k)) o.fail("prime power at " + nk(n, k));
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, 0 counterexamples";
  return o;
}

Outcome gcd_conjecture() {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli({"verify", "gcd-conjecture", "5000", "--workers", "1", "--json"}, out, err);
  if (code != kExitOk) o.fail("verify exited " + std::to_string(code));
  const auto doc = nlohmann::json::parse(out.str());
  const auto& result = doc["result"];
  if (result["verified_up_to"] != 5000) o.fail("verified_up_to " + result["verified_up_to"].dump());
  if (!result["counterexamples"].empty()) o.fail("counterexamples " + result["counterexamples"].dump());
  if (result["pairs_checked"] != pair_count(4, 5000)) o.fail("pairs_checked " + result["pairs_checked"].dump());

  for (std::int64_t n = 4; n <= 300; ++n) {
    for (std::int64_t k = 2; 2 * k <= n; ++k) {
      if (gcd_conjecture_holds_fast(n, k) != gcd_conjecture_holds_direct(n, k)) o.fail("fast/direct at " + nk(n, k));
    }
  }
  if (o.ok) o.detail = result["pairs_checked"].dump() + " pairs, 0 counterexamples";
  return o;
}

Outcome negative_examples() {
  Outcome o;
  if (gcd(binomial(7, 3), Natural(6)) != Natural(1)) o.fail("gcd(C(7,3),6)");
  if (gcd(binomial(14, 4), Natural(12)) != Natural(1)) o.fail("gcd(C(14,4),12)");
  return o;
}

Outcome property_suite() {
  Outcome o;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::int64_t n = 0; n <= 200; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) {
        if (binomial_p_order(p, n, k) != kummer_carries(p, n, k)) o.fail("order/carries at p=" + std::to_string(p));
      }
    }
  }

  const Sieve& sieve = default_sieve();
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      Natural product(1);
      for (std::uint32_t p : sieve.primes_up_to(n)) {
        for (std::int64_t e = binomial_p_order(p, n, k); e > 0; --e) product *= Natural(p);
      }
      if (product != binomial(n, k)) o.fail("factorization at " + nk(n, k));
    }
  }

  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      std::uint64_t seen = 0;
      for (PartitionStream s(n, k); !s.done(); s.advance()) ++seen;
      if (Natural(seen) != count_partitions(n, k)) o.fail("stream cardinality at " + nk(n, k));
    }
  }

  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() / ("multicount-acceptance-" + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  SearchConfig cfg;
  cfg.n_max = 2500;
  cfg.checkpoint_path = dir / "cp.json";
  search(cfg);
  cfg.n_max = 5000;
  const SearchReport resumed = resume(cfg, checkpoint_load(*cfg.checkpoint_path));
  cfg.checkpoint_path.reset();
  if (report_to_json(resumed, false) != report_to_json(search(cfg), false)) o.fail("resume differs");
  std::filesystem::remove_all(dir);

  for (SearchMode mode : {SearchMode::gcd_conjecture, SearchMode::lemma1}) {
    SearchConfig det;
    det.mode = mode;
    det.n_max = 1000;
    std::set<std::string> reports;
    for (int workers : {1, 4, 8}) {
      det.workers = workers;
      reports.insert(report_to_json(search(det), false));
    }
    if (reports.size() != 1) o.fail("reports depend on worker count in " + std::string(to_string(mode)));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "M_6(10,3) = 4 with witnesses 1+2+7, 1+3+6, 1+4+5, 2+3+5", 1.0, paper_example},
      {2, "prime-power closed form equals brute force, 12 prime powers, k <= n <= 50", 60.0, theorem_one},
      {3, "M_1, M_2 closed forms (n <= 50) and M_10 formula (n <= 80) equal brute force", 120.0, small_closed_forms},
      {4, "Fine's identity and mass decomposition, k <= n <= 40", 60.0, fine_identity},
      {5, "no prime-power C(n,k) for 4 <= n <= 2000, 2 <= k <= n/2", 60.0, lemma_one},
      {6, "verify gcd-conjecture 5000 (1 worker) clean; fast == direct for n <= 300", 120.0, gcd_conjecture},
      {7, "gcd(C(7,3),6) = 1 and gcd(C(14,4),12) = 1", 0.0, negative_examples},
      {8, "property suite: valuations, factorization, stream size, resume, determinism", 0.0, property_suite},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && took >= c.limit_seconds) {
      o.fail("took " + std::to_string(took) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << "  (" << std::fixed
              << std::setprecision(2) << took << " s";
    if (c.limit_seconds > 0) std::cout << " / limit " << std::setprecision(0) << c.limit_seconds << " s";
    std::cout << ")";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}

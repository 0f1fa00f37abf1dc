#include "multicount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multicount/conjecture.hpp"
#include "multicount/mcount.hpp"

namespace multicount {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kClosedForm = "closed-form";
constexpr const char* kBruteForce = "brute-force";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Natural parse_m(const std::string& text) {
  Natural m;
  try {
    m = Natural::from_string(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (m.is_zero()) throw UsageError("m must be >= 1");
  return m;
}

std::string render_witness(const MultiplicityVector& v) {
  std::vector<std::int64_t> parts = to_parts(v).parts;
  std::reverse(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

struct Counted {
  Natural count;
  const char* method;
};

// auto prefers a closed form; closed without one is a usage error.
Counted count_cell(const Natural& m, std::int64_t n, std::int64_t k, const std::string& method) {
  if (method != "brute") {
    if (auto closed = m_closed(m, n, k)) return {*closed, kClosedForm};
    if (method == "closed") throw UsageError("no closed form is known for m=" + m.to_string());
  }
  return {m_count_bruteforce(MQuery(m, n, k)).count, kBruteForce};
}

struct McountArgs {
  std::string m;
  std::int64_t n = 0;
  std::int64_t k = 0;
  bool witnesses = false;
  std::string method = "auto";
  bool json = false;
};

int cmd_mcount(const McountArgs& a, std::ostream& out) {
  Stopwatch clock;
  const Natural m = parse_m(a.m);
  if (a.witnesses && a.method == "closed") throw UsageError("--witnesses needs the brute-force method");

  Natural count;
  const char* method = kBruteForce;
  std::optional<std::vector<MultiplicityVector>> witnesses;
  if (a.witnesses) {
    MResult r = m_count_bruteforce(MQuery(m, a.n, a.k), true);
    count = r.count;
    witnesses = std::move(r.witnesses);
  } else {
    Counted c = count_cell(m, a.n, a.k, a.method);
    count = c.count;
    method = c.method;
  }

  if (a.json) {
    json doc;
    doc["command"] = "mcount";
    doc["inputs"] = {{"m", m.to_string()}, {"n", a.n}, {"k", a.k}};
    json result;
    result["count"] = count.to_string();
    if (witnesses) {
      result["witnesses"] = json::array();
      for (const auto& w : *witnesses) result["witnesses"].push_back(render_witness(w));
    }
    doc["result"] = result;
    doc["method"] = method;
    doc["elapsed_seconds"] = clock.seconds();
    out << doc.dump() << '\n';
  } else {
    out << "M_" << m << "(" << a.n << "," << a.k << ") = " << count << "  [" << method << "]\n";
    if (witnesses) {
      for (const auto& w : *witnesses) out << "  " << a.n << " = " << render_witness(w) << '\n';
    }
  }
  return kExitOk;
}

int cmd_fine(std::int64_t n_max, bool as_json, std::ostream& out) {
  if (n_max < 1) throw UsageError("n_max must be >= 1");
  Stopwatch clock;
  std::int64_t cases = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> failure;
  for (std::int64_t n = 1; n <= n_max && !failure; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      ++cases;
      if (!fine_check(n, k)) {
        failure = {n, k};
        break;
      }
    }
  }

  if (as_json) {
    json doc;
    doc["command"] = "fine";
    doc["inputs"] = {{"n_max", n_max}};
    json result;
    result["holds"] = !failure;
    result["cases"] = cases;
    if (failure) {
      result["first_failure"] = {{"n", failure->first},
                                 {"k", failure->second},
                                 {"lhs", fine_lhs(failure->first, failure->second).to_string()},
                                 {"rhs", binomial(failure->first - 1, failure->second - 1).to_string()}};
    } else {
      result["first_failure"] = nullptr;
    }
    doc["result"] = result;
    doc["elapsed_seconds"] = clock.seconds();
    out << doc.dump() << '\n';
  } else if (failure) {
    const auto [n, k] = *failure;
    out << "Fine's identity FAILS at n=" << n << " k=" << k << ": sum = " << fine_lhs(n, k)
        << ", C(n-1,k-1) = " << binomial(n - 1, k - 1) << '\n';
  } else {
    out << "Fine's identity holds for all 1 <= k <= n <= " << n_max << " (" << cases << " cases)\n";
  }
  return failure ? kExitCounterexample : kExitOk;
}

struct VerifyArgs {
  std::string mode;
  std::int64_t n_max = 0;
  std::int64_t n_min = 4;
  int workers = 1;
  std::string checkpoint;
  std::int64_t interval = 500;
  bool resume = false;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  Stopwatch clock;
  SearchConfig config;
  const auto mode = parse_search_mode(a.mode);
  if (!mode) throw UsageError("mode must be lemma1 or gcd-conjecture");
  config.mode = *mode;
  config.n_min = a.n_min;
  config.n_max = a.n_max;
  config.workers = a.workers;
  config.checkpoint_interval = a.interval;
  if (!a.checkpoint.empty()) config.checkpoint_path = a.checkpoint;
  if (a.resume && !config.checkpoint_path) throw UsageError("--resume needs --checkpoint");
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  SearchReport report;
  if (a.resume && std::filesystem::exists(*config.checkpoint_path)) {
    Checkpoint cp;
    try {
      cp = checkpoint_load(*config.checkpoint_path);
      report = resume(config, cp);
    } catch (const CheckpointError& e) {
      err << "error: " << e.what() << '\n';
      return kExitCorruptCheckpoint;
    } catch (const std::invalid_argument& e) {
      err << "error: checkpoint does not match this run: " << e.what() << '\n';
      return kExitCorruptCheckpoint;
    }
  } else {
    report = search(config);
  }
  if (report.checkpoint_error) err << "warning: " << *report.checkpoint_error << '\n';

  if (a.json) {
    json doc;
    doc["command"] = "verify";
    doc["inputs"] = {{"mode", to_string(config.mode)},
                     {"n_min", config.n_min},
                     {"n_max", config.n_max},
                     {"workers", config.workers}};
    doc["result"] = json::parse(report_to_json(report, true));
    doc["elapsed_seconds"] = clock.seconds();
    out << doc.dump() << '\n';
  } else {
    out << "mode: " << to_string(report.mode) << '\n'
        << "verified n in [" << report.n_min << ", " << report.verified_up_to << "]: " << report.pairs_checked
        << " pairs";
    if (report.mode == SearchMode::gcd_conjecture) out << " (" << report.fast_path_hits << " by carry test)";
    out << '\n';
    if (report.counterexamples.empty()) {
      out << "counterexamples: none\n";
    } else {
      out << "counterexamples (" << report.counterexamples.size() << "):";
      for (const auto& [n, k] : report.counterexamples) out << " (" << n << "," << k << ")";
      out << '\n';
    }
    out << "elapsed: " << report.elapsed_seconds << " s\n";
  }
  return report.holds() ? kExitOk : kExitCounterexample;
}

struct TableArgs {
  std::string m;
  std::int64_t n_max = 0;
  std::string format = "csv";
  std::string method = "auto";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  Stopwatch clock;
  const Natural m = parse_m(a.m);
  if (a.n_max < 1) throw UsageError("n_max must be >= 1");

  json rows = json::array();
  std::ostringstream csv;
  csv << "n,k,count,method\n";
  for (std::int64_t n = 1; n <= a.n_max; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const Counted c = count_cell(m, n, k, a.method);
      if (c.count.is_zero()) continue;
      csv << n << ',' << k << ',' << c.count << ',' << c.method << '\n';
      rows.push_back({{"n", n}, {"k", k}, {"count", c.count.to_string()}, {"method", c.method}});
    }
  }

  if (a.format == "json") {
    json doc;
    doc["command"] = "table";
    doc["inputs"] = {{"m", m.to_string()}, {"n_max", a.n_max}};
    doc["result"] = {{"rows", rows}};
    doc["elapsed_seconds"] = clock.seconds();
    out << doc.dump() << '\n';
  } else {
    out << csv.str();
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count multinomial coefficients of a given value over partitions, and verify related identities"};
  app.name("multicount");
  app.require_subcommand(1);

  McountArgs mc;
  auto* mcount = app.add_subcommand("mcount", "Compute M_m(n,k)");
  mcount->add_option("m", mc.m, "Target multinomial value (decimal, any size)")->required();
  mcount->add_option("n", mc.n, "Weight")->required()->check(CLI::PositiveNumber);
  mcount->add_option("k", mc.k, "Number of parts")->required()->check(CLI::PositiveNumber);
  mcount->add_flag("--witnesses", mc.witnesses, "List the partitions that attain m");
  mcount->add_option("--method", mc.method, "auto, closed or brute")->check(CLI::IsMember({"auto", "closed", "brute"}));
  mcount->add_flag("--json", mc.json, "Emit a JSON record");

  std::int64_t fine_n_max = 0;
  bool fine_json = false;
  auto* fine = app.add_subcommand("fine", "Check Fine's identity for all 1 <= k <= n <= n_max");
  fine->add_option("n_max", fine_n_max, "Largest n")->required();
  fine->add_flag("--json", fine_json, "Emit a JSON record");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Sweep lemma1 or gcd-conjecture over 2 <= k <= n/2");
  verify->add_option("mode", va.mode, "lemma1 or gcd-conjecture")
      ->required()
      ->check(CLI::IsMember({"lemma1", "gcd-conjecture", "gcd_conjecture"}));
  verify->add_option("n_max", va.n_max, "Largest n")->required();
  verify->add_option("--n-min", va.n_min, "Smallest n (default 4)");
  verify->add_option("--workers", va.workers, "Worker threads");
  verify->add_option("--checkpoint", va.checkpoint, "Checkpoint file");
  verify->add_option("--checkpoint-interval", va.interval, "n-steps between checkpoint writes");
  verify->add_flag("--resume", va.resume, "Continue from --checkpoint if it exists");
  verify->add_flag("--json", va.json, "Emit a JSON record");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Tabulate nonzero M_m(n,k) for 1 <= k <= n <= n_max");
  table->add_option("m", ta.m, "Target multinomial value")->required();
  table->add_option("n_max", ta.n_max, "Largest n")->required();
  table->add_option("--format", ta.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--method", ta.method, "auto, closed or brute")->check(CLI::IsMember({"auto", "closed", "brute"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mcount->parsed()) return cmd_mcount(mc, out);
    if (fine->parsed()) return cmd_fine(fine_n_max, fine_json, out);
    if (verify->parsed()) return cmd_verify(va, out, err);
    if (table->parsed()) return cmd_table(ta, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace multicount

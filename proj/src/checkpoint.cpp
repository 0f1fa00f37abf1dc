#include <ctime>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "multicount/conjecture.hpp"

namespace multicount {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void corrupt(const std::string& why) {
  throw CheckpointError(CheckpointError::Kind::corrupt, "corrupt checkpoint: " + why);
}

std::int64_t require_int(const json& value, const char* field) {
  if (!value.is_number_integer()) corrupt(std::string(field) + " must be an integer");
  return value.get<std::int64_t>();
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

std::string checkpoint_to_json(const Checkpoint& cp) {
  json doc;
  doc["version"] = cp.version;
  doc["mode"] = to_string(cp.mode);
  doc["n_verified"] = cp.n_verified;
  doc["counterexamples"] = json::array();
  for (const auto& [n, k] : cp.counterexamples) doc["counterexamples"].push_back({n, k});
  doc["created_at"] = cp.created_at;
  return doc.dump();
}

Checkpoint checkpoint_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    corrupt(e.what());
  }
  if (!doc.is_object()) corrupt("top level must be an object");

  static const std::set<std::string> kFields = {"version", "mode", "n_verified", "counterexamples", "created_at"};
  for (const auto& [key, value] : doc.items()) {
    if (!kFields.contains(key)) corrupt("unknown field '" + key + "'");
  }
  for (const auto& key : kFields) {
    if (!doc.contains(key)) corrupt("missing field '" + key + "'");
  }

  Checkpoint cp;
  cp.version = static_cast<int>(require_int(doc["version"], "version"));
  if (cp.version != Checkpoint::kVersion) corrupt("unsupported version " + std::to_string(cp.version));

  const json& mode = doc["mode"];
  if (!mode.is_string()) corrupt("mode must be a string");
  const auto mode_text = mode.get<std::string>();
  if (mode_text != "gcd_conjecture" && mode_text != "lemma1") corrupt("unknown mode '" + mode_text + "'");
  cp.mode = *parse_search_mode(mode_text);

  cp.n_verified = require_int(doc["n_verified"], "n_verified");
  if (cp.n_verified < 0) corrupt("n_verified must be >= 0");

  const json& list = doc["counterexamples"];
  if (!list.is_array()) corrupt("counterexamples must be an array");
  for (const json& entry : list) {
    if (!entry.is_array() || entry.size() != 2) corrupt("counterexample must be [n, k]");
    const std::int64_t n = require_int(entry[0], "counterexample n");
    const std::int64_t k = require_int(entry[1], "counterexample k");
    if (k < 2 || 2 * k > n || n > cp.n_verified) corrupt("counterexample out of range");
    if (!cp.counterexamples.empty() && !(cp.counterexamples.back() < NK{n, k})) {
      corrupt("counterexamples must be strictly increasing");
    }
    cp.counterexamples.emplace_back(n, k);
  }

  const json& created = doc["created_at"];
  static const std::regex kIso(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)");
  if (!created.is_string() || !std::regex_match(created.get<std::string>(), kIso)) {
    corrupt("created_at must be an ISO-8601 UTC timestamp");
  }
  cp.created_at = created.get<std::string>();
  return cp;
}

void checkpoint_save(const Checkpoint& cp, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << checkpoint_to_json(cp) << '\n';
    out.close();
    if (!out) {
      throw CheckpointError(CheckpointError::Kind::io, "cannot write checkpoint " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CheckpointError(CheckpointError::Kind::io, "cannot move checkpoint into place at " + path.string());
  }
}

Checkpoint checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError(CheckpointError::Kind::io, "cannot read checkpoint " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return checkpoint_from_json(text.str());
}

}  // namespace multicount

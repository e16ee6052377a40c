#pragma once

// Check records and the JSON report shared by every command. Reports are
// deterministic: keys keep insertion order and timing is only written when
// asked for.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powdom/laws.hpp"

namespace powdom {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string group;
  std::string name;
  bool verdict = true;
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::optional<Witness> witness;
  Json details = Json::object();
  double seconds = 0;
};

CheckRecord recordOf(std::string name, const LawOutcome& outcome);
/// A record comparing a computed value against the expected one.
CheckRecord expectEqual(std::string name, const std::string& expected, const std::string& actual);
/// A failing record for an error raised while running a check.
CheckRecord errorRecord(std::string name, const std::string& message);

Json witnessJson(const Witness& w);
Json outcomeJson(const LawOutcome& o);

struct Report {
  std::string command;
  LawConfig config;
  /// Command-specific payload.
  Json result = Json::object();
  std::vector<CheckRecord> checks;

  bool overall() const;
  Json json(bool timing = false) const;
  /// One line per check, witnesses for failures, and the overall verdict.
  std::string summary() const;
};

}  // namespace powdom

#pragma once

// The verification suite: every module invariant, run over the built-in
// catalog. Checks are grouped; the acceptance groups are also exposed one by
// one so that they can be timed separately.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "powdom/laws.hpp"
#include "powdom/report.hpp"

namespace powdom {

struct VerifyOptions {
  LawConfig law;
  /// Only catalog posets with at most this many elements.
  std::size_t catalogMax = std::numeric_limits<std::size_t>::max();
  /// Replaces a catalog algebra by a broken copy; see faultNames().
  std::string fault;
};

/// "angelic2": the join of 2_ang computes meet.
/// "rplus_max": rplus_max tagged add:GE, max:LE.
const std::vector<std::string>& faultNames();

using GroupRunner = std::vector<CheckRecord> (*)(const VerifyOptions&);

struct CheckGroup {
  std::string name;
  std::string title;
  /// Wall-clock budget in seconds; 0 for groups without one.
  double budget = 0;
  GroupRunner run = nullptr;
};

/// The acceptance groups in order, followed by the remaining module
/// invariants.
const std::vector<CheckGroup>& checkGroups();
const std::vector<CheckGroup>& acceptanceGroups();

/// Runs one group, stamping group names and per-check timings. Library
/// errors become failing records.
std::vector<CheckRecord> runGroup(const CheckGroup& group, const VerifyOptions& opts);

Report verifySuite(const VerifyOptions& opts);

}  // namespace powdom

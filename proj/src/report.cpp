#include "powdom/report.hpp"

#include <sstream>

namespace powdom {

CheckRecord recordOf(std::string name, const LawOutcome& outcome) {
  CheckRecord r;
  r.name = std::move(name);
  r.verdict = outcome.holds;
  r.exhaustive = outcome.exhaustive;
  r.cases = outcome.cases;
  r.witness = outcome.witness;
  return r;
}

CheckRecord expectEqual(std::string name, const std::string& expected, const std::string& actual) {
  CheckRecord r;
  r.name = std::move(name);
  r.cases = 1;
  r.verdict = expected == actual;
  r.details["expected"] = expected;
  r.details["actual"] = actual;
  if (!r.verdict) r.witness = Witness{{}, {}, actual, expected};
  return r;
}

CheckRecord errorRecord(std::string name, const std::string& message) {
  CheckRecord r;
  r.name = std::move(name);
  r.verdict = false;
  r.details["error"] = message;
  return r;
}

Json witnessJson(const Witness& w) {
  Json j;
  j["args"] = w.args;
  j["params"] = w.params;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

Json outcomeJson(const LawOutcome& o) {
  Json j;
  j["holds"] = o.holds;
  j["exhaustive"] = o.exhaustive;
  j["cases"] = o.cases;
  j["witness"] = o.witness ? witnessJson(*o.witness) : Json(nullptr);
  return j;
}

bool Report::overall() const {
  for (const auto& c : checks) {
    if (!c.verdict) return false;
  }
  return true;
}

Json Report::json(bool timing) const {
  Json j;
  j["command"] = command;
  j["config"] = {{"seed", config.seed}, {"trials", config.trials}, {"sizeGuard", config.sizeGuard}};
  j["result"] = result;
  Json checksJson = Json::array();
  for (const auto& c : checks) {
    Json r;
    if (!c.group.empty()) r["group"] = c.group;
    r["name"] = c.name;
    r["verdict"] = c.verdict ? "pass" : "fail";
    r["exhaustive"] = c.exhaustive;
    r["cases"] = c.cases;
    r["witness"] = c.witness ? witnessJson(*c.witness) : Json(nullptr);
    if (!c.details.empty()) r["details"] = c.details;
    if (timing) r["seconds"] = c.seconds;
    checksJson.push_back(std::move(r));
  }
  j["checks"] = std::move(checksJson);
  j["overall"] = overall() ? "pass" : "fail";
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.verdict ? "  ok    " : "  FAIL  ");
    if (!c.group.empty()) os << c.group << ": ";
    os << c.name << "  (" << c.cases << (c.exhaustive ? " cases, exhaustive)" : " cases, sampled)");
    os << '\n';
    if (!c.verdict) {
      ++failed;
      if (c.witness) {
        const auto& w = *c.witness;
        os << "        witness:";
        for (const auto& a : w.args) os << ' ' << a;
        if (!w.params.empty()) {
          os << "  params:";
          for (const auto& p : w.params) os << ' ' << p;
        }
        os << "  lhs " << w.lhs << "  rhs " << w.rhs << '\n';
      }
      if (c.details.contains("error")) os << "        error: " << c.details["error"].get<std::string>() << '\n';
    }
  }
  os << (failed == 0 ? "PASS" : "FAIL") << ": " << checks.size() - failed << " of " << checks.size()
     << " checks passed\n";
  return os.str();
}

}  // namespace powdom

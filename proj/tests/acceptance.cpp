// Acceptance run: each criterion group at its wall-clock budget, then the
// determinism check through the command-line tool. One line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "powdom/verify.hpp"

#ifndef POWDOM_CLI
#error "POWDOM_CLI must name the command-line tool"
#endif

using namespace powdom;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void line(int id, bool ok, const std::string& title, const std::string& note) {
  std::printf("[%s] criterion %2d  %s  (%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  VerifyOptions opts;
  int failures = 0;
  int id = 0;
  for (const auto& g : acceptanceGroups()) {
    ++id;
    const auto start = Clock::now();
    const auto records = runGroup(g, opts);
    const double secs = since(start);
    std::size_t passed = 0;
    std::string firstFailure;
    for (const auto& r : records) {
      if (r.verdict) {
        ++passed;
      } else if (firstFailure.empty()) {
        firstFailure = r.name;
      }
    }
    const bool inTime = secs < g.budget;
    const bool ok = passed == records.size() && !records.empty() && inTime;
    std::ostringstream note;
    note.precision(2);
    note << std::fixed << passed << "/" << records.size() << " checks, " << secs << " s of " << g.budget << " s";
    if (!firstFailure.empty()) note << ", first failure: " << firstFailure;
    if (!inTime) note << ", over budget";
    line(id, ok, g.title, note.str());
    failures += ok ? 0 : 1;
  }

  // Determinism: two runs of the suite at seed 42 give byte-identical JSON.
  ++id;
  const std::string base = "acceptance_determinism";
  const std::string a = base + "_1.json", b = base + "_2.json";
  const auto start = Clock::now();
  int status = 0;
  for (const auto& out : {a, b}) {
    // POWDOM_SEED is cleared so that the flag decides.
    const std::string cmd = "env -u POWDOM_SEED \"" + std::string(POWDOM_CLI) +
                            "\" verify-suite --seed 42 --json " + out + " > /dev/null";
    status |= std::system(cmd.c_str());
  }
  const double perRun = since(start) / 2;
  const std::string ja = slurp(a), jb = slurp(b);
  const bool identical = !ja.empty() && ja == jb;
  const bool ok = status == 0 && identical && perRun < 300;
  std::ostringstream note;
  note.precision(2);
  note << std::fixed << (identical ? "byte-identical" : "reports differ") << ", " << ja.size() << " bytes, "
       << (status == 0 ? "suite passed" : "suite failed") << ", " << perRun << " s per run of 300 s";
  line(id, ok, "verify-suite --seed 42 twice is byte-identical", note.str());
  failures += ok ? 0 : 1;
  std::remove(a.c_str());
  std::remove(b.c_str());

  std::printf("%s: %d of %d criteria passed\n", failures == 0 ? "PASS" : "FAIL", id - failures, id);
  return failures == 0 ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Randomized and example-based checks of the computable statements, grouped
// into suites. Each check is reproducible from the seed alone.
namespace sheaf1d::verify {

struct CheckResult {
  std::string id;      // "A1" .. "A10"
  std::string title;
  std::string anchor;  // the statement being checked
  bool passed = false;
  std::string detail;  // counts on success, the first counterexample on failure
  int samples = 0;     // random samples drawn by the main loop
  double seconds = 0;
  double time_limit_seconds = 0;  // 0 means no limit
  bool within_time_limit = true;
};

struct Options {
  std::uint64_t seed = 1;
  // Overrides the pinned number of random samples of every loop.
  std::optional<int> samples;
};

// "gabriel", "hom", "energy", "projector", "geodesic", "square", "circle",
// "orbit", "microsupport", and "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite. Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const Options& options = {});

// Fixed-width table for humans, one line per check.
std::string format_table(const std::vector<CheckResult>& results);

}  // namespace sheaf1d::verify

// Runs every acceptance check with the pinned sample counts, seeds and time
// limits, printing one PASS/FAIL line per criterion. Exit status 1 when any
// criterion fails.
#include <iostream>

#include "sheaf1d/verify.hpp"

int main() {
  using namespace sheaf1d::verify;
  const Options pinned{/*seed=*/1, /*samples=*/std::nullopt};
  bool all = true;
  for (const auto& r : run_suite("all", pinned)) {
    all = all && r.passed;
    std::cout << r.id << " " << (r.passed ? "PASS" : "FAIL") << " " << r.title << " [" << r.anchor << "] " << r.detail
              << " (" << r.seconds << " s";
    if (r.time_limit_seconds > 0) std::cout << ", limit " << r.time_limit_seconds << " s";
    std::cout << ")" << std::endl;
  }
  return all ? 0 : 1;
}

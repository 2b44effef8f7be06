#pragma once

// Batch of tangent-space checks at canonical and seeded random points, used
// by `predeg verify tangents`.

#include <cstdint>
#include <string>
#include <vector>

namespace predeg::verification {

struct CheckResult {
  std::string name;
  bool passed = false;
  int points = 0;  // how many sample points the check covered
  std::string detail;
};

struct Report {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  int failures() const;
};

Report verify_tangents(std::uint64_t seed, int samples);

}  // namespace predeg::verification

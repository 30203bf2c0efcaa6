#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace forest_trees::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct Criterion {
  int id;
  std::string_view title;
  /// Wall-clock limit; a check that is correct but slower than this fails.
  std::chrono::seconds budget;
};

struct Outcome {
  int id = 0;
  bool correct = false;
  bool within_budget = false;
  double seconds = 0;
  std::string detail;
  bool pass() const { return correct && within_budget; }
};

std::span<const Criterion> criteria();

/// Runs one criterion. Throws InvalidArgument for an unknown id.
Outcome run(int id, std::uint64_t seed = kDefaultSeed);

/// Runs every criterion in order; criteria 2 and 8 share one pass over the
/// random forests.
std::vector<Outcome> run_all(std::uint64_t seed = kDefaultSeed);

/// "PASS  3  <title>  (0.41 s of 30 s)  <detail>"
std::string format(const Outcome& outcome);

}  // namespace forest_trees::acceptance

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "forest_trees/exact.hpp"
#include "forest_trees/forest.hpp"

namespace forest_trees {

/// Part sizes (n1, n2, n3) of K_{n1,n2,n3} and, per forest component, the
/// triple (n_{1,i}, n_{2,i}, n_{3,i}).
struct TripartiteProfile {
  std::array<Count, 3> parts{};
  std::vector<std::array<Count, 3>> components;

  Count n() const { return parts[0] + parts[1] + parts[2]; }
  std::size_t k() const { return components.size(); }

  /// Throws InvalidProfile unless `profile` has three-entry components whose
  /// sums are `parts`.
  static TripartiteProfile from(const PartSizes& parts, const ComponentProfile& profile);
};

/// Conjectured lower bound for the number of spanning trees of
/// K_{n1,n2,n3} containing the forest:
///
///   1/(n1 n2 + n1 n3 + n2 n3) * prod_i D_i * (1 - sum_i N_i / D_i)
///
/// with D_i = (n-n1) n_{1,i} + (n-n2) n_{2,i} + (n-n3) n_{3,i} and
/// N_i = n_{1,i} n_{2,i} + n_{1,i} n_{3,i} + n_{2,i} n_{3,i}.
/// Throws DegenerateDenominator when some D_i or the leading sum is zero.
ExactRational conjecture_rhs(const TripartiteProfile& p);

inline constexpr std::size_t kMaxTripartiteComponents = 64;

/// Exact count by Matrix-Tree on the contracted multigraph. Throws
/// InvalidHost unless the host has three parts, TooLarge above
/// kMaxTripartiteComponents components.
ExactInt tau_forest_tripartite(const ForestInstance& instance);

struct ConjectureReport {
  ForestInstance instance;
  TripartiteProfile profile;
  ExactInt lhs;
  ExactRational rhs;
  bool holds = false;     // lhs >= rhs
  bool equality = false;  // lhs == rhs

  std::size_t k() const { return profile.k(); }
};

/// Evaluates both sides; never asserts the inequality.
ConjectureReport check_conjecture(const ForestInstance& instance);

inline constexpr Count kMaxScanVertices = 12;

/// Every shape n1 <= n2 <= n3 with n1 + n2 + n3 <= max_n, `trials_per_shape`
/// random forests each (component target and forest drawn from seeds derived
/// from (seed, shape, trial)). Reports come back in shape order, then trial
/// order. Throws InvalidArgument when max_n > kMaxScanVertices.
std::vector<ConjectureReport> scan_conjecture(Count max_n, std::size_t trials_per_shape,
                                              std::uint64_t seed);

/// One JSON-lines record; rationals as {"num","den"}, integers as strings.
nlohmann::json to_json(const ConjectureReport& report);

}  // namespace forest_trees

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "forest_trees/exact.hpp"

namespace forest_trees {

/// The algebraic identities checked at random exact points.
///
///   L21       (1 - sum a_i b_i / W_i)^2 = (sum a_i^2 / W_i)(sum b_i^2 / W_i),
///             W_i = a_i B + b_i A, A = sum a_i, B = sum b_i
///   L22       sum over non-empty I of prod_I a * prod_{S\I} b
///             = prod (a_i + b_i) - prod b_i
///   L23       the same sum weighted by sum_I c_i
///             = prod (a_i + b_i) * sum c_i a_i / (a_i + b_i)
///   L23X      weighted by (c + sum_I c_i), with a free scalar c
///   L24       weighted by sum_{S\I} d_i
///   L25       weighted by (sum_I c_i)(sum_{S\I} d_q), I a proper subset
///   L25X      weighted by (c + sum_I c_i)(sum_{S\I} d_q)
///   T31       phi(x, y) = signed sum over I of prod_{j in I} (x_1 y_j + x_j y_1)
///             * phi(x_1 + x_I, y_1 + y_I, remaining pairs)
///   R63       phi(x, y) = unsigned sum over I of prod_{j in I} (x_1 y_j + x_j y_1)
///             * phi(x_I, y_I, remaining pairs)
///   XYCANCEL  the monomials of the phi numerator not divisible by XY sum to 0
///
/// In T31 and R63, I ranges over non-empty subsets of {2..k}.
enum class IdentityId { L21, L22, L23, L23X, L24, L25, L25X, T31, R63, XYCANCEL };

std::string_view to_string(IdentityId id);

/// Throws InvalidArgument for unknown names.
IdentityId parse_identity_id(std::string_view name);

std::span<const IdentityId> all_identities();

/// Smallest |S| (or k) the identity is stated for.
std::size_t min_size(IdentityId id);

/// Subset sums are exponential in the size.
inline constexpr std::size_t kMaxIdentitySize = 10;

/// A point at which both sides of an identity are evaluated. The phi
/// identities (T31, R63, XYCANCEL) read `a` as x and `b` as y. `c`, `d` and
/// `scalar` are only meaningful for the identities that use them.
struct IdentityPoint {
  IdentityId id = IdentityId::L22;
  std::vector<ExactRational> a, b, c, d;
  ExactRational scalar;

  std::size_t size() const { return a.size(); }
};

struct IdentityValues {
  ExactRational lhs;
  ExactRational rhs;

  bool equal() const { return lhs == rhs; }
};

/// Describes the first violated guard, or nullopt when the point is
/// admissible. Also rejects vectors of the wrong length.
std::optional<std::string> guard_violation(const IdentityPoint& p);

/// Evaluates both sides literally, summing over subsets where the identity
/// does. Throws GuardViolated when a denominator would vanish and
/// InvalidArgument for malformed points. Equality is left to the caller.
IdentityValues evaluate_identity(const IdentityPoint& p);

/// Rejection-samples a guarded point: numerators in [-20, 20], denominators
/// in [1, 10]. Deterministic in (id, size, seed). Throws SamplingExhausted
/// after 10^4 rejections.
IdentityPoint sample_point(IdentityId id, std::size_t size, std::uint64_t seed);

struct Counterexample {
  std::size_t trial = 0;
  IdentityPoint point;
  IdentityValues values;
};

struct SuiteReport {
  IdentityId id = IdentityId::L22;
  std::size_t pass = 0;
  std::size_t fail = 0;
  /// Requested sizes below min_size(id); nothing is run for them.
  std::vector<std::size_t> skipped_sizes;
  std::vector<Counterexample> counterexamples;
};

/// For each size and trial, samples a point from a seed derived from
/// (seed, id, size, trial) and records whether lhs == rhs exactly.
/// Throws InvalidArgument for sizes of 0 or above kMaxIdentitySize.
SuiteReport run_suite(IdentityId id, std::span<const std::size_t> sizes, std::size_t trials,
                      std::uint64_t seed);

nlohmann::json to_json(const IdentityPoint& p);
nlohmann::json to_json(const SuiteReport& report);

}  // namespace forest_trees

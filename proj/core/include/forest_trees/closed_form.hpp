#pragma once

#include <span>
#include <utility>
#include <vector>

#include "forest_trees/exact.hpp"
#include "forest_trees/forest.hpp"

namespace forest_trees {

/// Points (x_1, y_1, ..., x_k, y_k) at which phi is evaluated. The sums
/// X = sum x_i and Y = sum y_i are recomputed on demand.
class PairVector {
 public:
  using Pair = std::pair<ExactRational, ExactRational>;

  /// Throws InvalidArgument when `pairs` is empty.
  explicit PairVector(std::vector<Pair> pairs);

  /// Reads each component (m_i, n_i) of a bipartite profile as a pair.
  static PairVector from_profile(const ComponentProfile& profile);

  std::size_t k() const { return pairs_.size(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

  ExactRational x_sum() const;
  ExactRational y_sum() const;

 private:
  std::vector<Pair> pairs_;
};

/// The integer path of the bipartite count: numerator = prod W_i -
/// sum m_i n_i prod_{j != i} W_j with W_i = m_i n + n_i m, divisor = m n,
/// tau = numerator / divisor.
struct ForestCountTrace {
  ExactInt numerator;
  ExactInt divisor;
  ExactInt tau;
};

/// Number of spanning trees of K_{m,n} that contain a spanning forest with
/// the given component profile.
///
/// Everything is kept in big integers and divided once at the end; a
/// non-zero remainder would mean a bug and raises DivisibilityViolation.
/// Throws InvalidArgument for m or n zero, InvalidProfile for components
/// that are not (m_i, n_i) pairs or are empty, and ProfileSumMismatch when
/// the components do not add up to (m, n).
ExactInt tau_forest(Count m, Count n, const ComponentProfile& profile);
ForestCountTrace tau_forest_trace(Count m, Count n, const ComponentProfile& profile);

/// phi(x, y) = (1/XY) prod(x_i Y + y_i X) (1 - sum x_i y_i / (x_i Y + y_i X)),
/// evaluated directly. Throws SingularPoint when X, Y or some x_i Y + y_i X
/// is zero.
ExactRational phi_eval(const PairVector& v);

/// Moon's count n^(c-2) prod n_i for K_n and a forest with components of the
/// given orders.
ExactInt tau_moon(Count n, std::span<const Count> orders);

/// Spanning trees of K_{m,n} through a fixed matching of size k.
ExactInt tau_matching(Count m, Count n, Count k);

/// Spanning trees of K_{m,n} through a fixed tree meeting X in s vertices and
/// Y in t vertices.
ExactInt tau_tree(Count m, Count n, Count s, Count t);

/// k components (1,1), then (m-k) copies of (1,0) and (n-k) of (0,1).
ComponentProfile matching_profile(Count m, Count n, Count k);

/// One component (s,t), then (m-s) copies of (1,0) and (n-t) of (0,1).
ComponentProfile tree_profile(Count m, Count n, Count s, Count t);

}  // namespace forest_trees

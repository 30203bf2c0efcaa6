#pragma once

#include <cstddef>
#include <vector>

#include "forest_trees/exact.hpp"
#include "forest_trees/forest.hpp"

namespace forest_trees {

/// Complete graph K_k with a symmetric, non-negative rational weight on each
/// edge and zero diagonal. With integer weights, w(i, j) is the number of
/// parallel edges between vertices i and j of a multigraph.
class WeightedCompleteGraph {
 public:
  /// k >= 1 vertices, every weight zero.
  explicit WeightedCompleteGraph(std::size_t k);

  /// Throws InvalidWeights unless `rows` is square, symmetric, non-negative
  /// and zero on the diagonal.
  static WeightedCompleteGraph from_rows(const std::vector<std::vector<ExactRational>>& rows);

  std::size_t k() const { return k_; }

  const ExactRational& weight(std::size_t i, std::size_t j) const { return w_[i * k_ + j]; }

  /// Sets w(i, j) = w(j, i) = value; i != j and value >= 0.
  void set_weight(std::size_t i, std::size_t j, const ExactRational& value);

  bool integral() const;

  friend bool operator==(const WeightedCompleteGraph&, const WeightedCompleteGraph&) = default;

 private:
  std::size_t k_;
  std::vector<ExactRational> w_;
};

/// Weights of the form w(i, j) = x_i y_j + x_j y_i.
struct FactoredWeights {
  std::vector<ExactRational> x;
  std::vector<ExactRational> y;

  std::size_t k() const { return x.size(); }
};

/// The graph whose weights `fw` induces. Throws InvalidArgument on mismatched
/// or empty vectors and InvalidWeights if an induced weight is negative.
WeightedCompleteGraph induced_graph(const FactoredWeights& fw);

/// Contracts every forest component to a single vertex; w(i, j) counts host
/// edges between components i and j. Vertices follow the canonical profile
/// order. For K_{m,n} this is m_i n_j + m_j n_i.
WeightedCompleteGraph contract_forest(const ForestInstance& instance);

/// Same weights computed from the profile alone: the number of vertex pairs
/// (u in component i, v in component j) that lie in different parts.
WeightedCompleteGraph contract_profile(const ComponentProfile& profile);

/// Weighted spanning-tree sum for factored weights via phi. Throws
/// SingularPoint under the same guards as phi_eval.
ExactRational tau_factored(const FactoredWeights& fw);

/// Largest graph accepted by the subset recursions below.
inline constexpr std::size_t kMaxRecursionVertices = 12;

/// Weighted spanning-tree sum by signed inclusion-exclusion over the set I of
/// vertices adjacent to vertex 0, merging {0} and I into one vertex at each
/// level. Exponential; throws TooLarge above kMaxRecursionVertices.
ExactRational tau_inclusion_exclusion(const WeightedCompleteGraph& g);

/// Same sum partitioned by the exact neighbourhood I of vertex 0: no signs,
/// and the merged vertex keeps only the edges leaving I.
ExactRational tau_alt_recursion(const WeightedCompleteGraph& g);

}  // namespace forest_trees

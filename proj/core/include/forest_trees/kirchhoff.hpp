#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "forest_trees/exact.hpp"
#include "forest_trees/forest.hpp"
#include "forest_trees/weighted_tau.hpp"

namespace forest_trees {

/// Dense square matrix of big integers, row-major.
class IntegerMatrix {
 public:
  explicit IntegerMatrix(std::size_t dim = 0) : dim_(dim), a_(dim * dim) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t dim() const { return dim_; }
  ExactInt& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const ExactInt& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  void swap_rows(std::size_t r, std::size_t s);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<ExactInt> a_;
};

/// Weighted Laplacian D - W of `g` with row and column `drop` removed.
/// Throws NonIntegerWeights or IndexOutOfRange.
IntegerMatrix laplacian_minor(const WeightedCompleteGraph& g, std::size_t drop);

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact, so intermediates stay integral. The empty matrix has determinant 1.
ExactInt det_bareiss(IntegerMatrix a);

/// Matrix-Tree: weighted spanning-tree sum as the minor determinant with
/// vertex 0 dropped.
ExactInt tau_kirchhoff(const WeightedCompleteGraph& g);

inline constexpr std::size_t kMaxEnumerateVertices = 9;

/// Sum over all spanning trees of the product of edge weights, by
/// backtracking over edges in lexicographic order. Integer weights only;
/// throws TooLarge above kMaxEnumerateVertices.
ExactInt enumerate_tau(const WeightedCompleteGraph& g);

/// Literal count of host spanning trees that contain every forest edge.
/// Validates the instance first; throws TooLarge above kMaxEnumerateVertices
/// host vertices.
ExactInt count_forced_trees(const ForestInstance& instance);

}  // namespace forest_trees

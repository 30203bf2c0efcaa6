#include "forest_trees/weighted_tau.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>

#include "forest_trees/closed_form.hpp"
#include "forest_trees/error.hpp"
#include "forest_trees/parallel.hpp"

namespace forest_trees {

WeightedCompleteGraph::WeightedCompleteGraph(std::size_t k) : k_(k), w_(k * k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "complete graph needs k >= 1");
}

WeightedCompleteGraph WeightedCompleteGraph::from_rows(
    const std::vector<std::vector<ExactRational>>& rows) {
  WeightedCompleteGraph g(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw Error(ErrorKind::InvalidWeights, "row " + std::to_string(i) + " has the wrong length");
    if (rows[i][i] != 0)
      throw Error(ErrorKind::InvalidWeights, "non-zero diagonal at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i])
        throw Error(ErrorKind::InvalidWeights,
                    "asymmetric weight at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      g.set_weight(i, j, rows[i][j]);
    }
  return g;
}

void WeightedCompleteGraph::set_weight(std::size_t i, std::size_t j, const ExactRational& value) {
  if (i >= k_ || j >= k_)
    throw Error(ErrorKind::IndexOutOfRange,
                "(" + std::to_string(i) + "," + std::to_string(j) + ") in K_" + std::to_string(k_));
  if (i == j) throw Error(ErrorKind::InvalidWeights, "loops are not allowed");
  if (value < 0)
    throw Error(ErrorKind::InvalidWeights, "negative weight " + to_string(value) + " at (" +
                                               std::to_string(i) + "," + std::to_string(j) + ")");
  w_[i * k_ + j] = value;
  w_[j * k_ + i] = value;
}

bool WeightedCompleteGraph::integral() const {
  for (const ExactRational& w : w_)
    if (!is_integral(w)) return false;
  return true;
}

WeightedCompleteGraph induced_graph(const FactoredWeights& fw) {
  if (fw.x.size() != fw.y.size() || fw.x.empty())
    throw Error(ErrorKind::InvalidArgument, "x and y must be non-empty and of equal length");
  WeightedCompleteGraph g(fw.k());
  for (std::size_t i = 0; i < fw.k(); ++i)
    for (std::size_t j = i + 1; j < fw.k(); ++j)
      g.set_weight(i, j, ExactRational(fw.x[i] * fw.y[j] + fw.x[j] * fw.y[i]));
  return g;
}

WeightedCompleteGraph contract_forest(const ForestInstance& instance) {
  const Decomposition d = decompose(instance);
  const HostGraph host(instance.parts);
  std::vector<ExactInt> counts(d.profile.k() * d.profile.k());
  for (const auto& [u, v] : host.edges()) {
    const std::size_t a = d.component_of[u], b = d.component_of[v];
    if (a != b) ++counts[std::min(a, b) * d.profile.k() + std::max(a, b)];
  }
  WeightedCompleteGraph g(d.profile.k());
  for (std::size_t i = 0; i < g.k(); ++i)
    for (std::size_t j = i + 1; j < g.k(); ++j)
      g.set_weight(i, j, ExactRational(counts[i * g.k() + j]));
  return g;
}

WeightedCompleteGraph contract_profile(const ComponentProfile& profile) {
  if (profile.k() == 0) throw Error(ErrorKind::InvalidProfile, "profile has no components");
  WeightedCompleteGraph g(profile.k());
  for (std::size_t i = 0; i < profile.k(); ++i)
    for (std::size_t j = i + 1; j < profile.k(); ++j) {
      const CountVector& a = profile.components[i];
      const CountVector& b = profile.components[j];
      if (a.size() != b.size())
        throw Error(ErrorKind::InvalidProfile, "components have different part counts");
      ExactInt total_a = 0, total_b = 0, same_part = 0;
      for (std::size_t s = 0; s < a.size(); ++s) {
        total_a += static_cast<unsigned long>(a[s]);
        total_b += static_cast<unsigned long>(b[s]);
        same_part += ExactInt(static_cast<unsigned long>(a[s])) * static_cast<unsigned long>(b[s]);
      }
      g.set_weight(i, j, ExactRational(ExactInt(total_a * total_b - same_part)));
    }
  return g;
}

ExactRational tau_factored(const FactoredWeights& fw) {
  if (fw.x.size() != fw.y.size())
    throw Error(ErrorKind::InvalidArgument, "x and y must have equal length");
  std::vector<PairVector::Pair> pairs;
  pairs.reserve(fw.k());
  for (std::size_t i = 0; i < fw.k(); ++i) pairs.emplace_back(fw.x[i], fw.y[i]);
  return phi_eval(PairVector(std::move(pairs)));
}

namespace {

enum class Merge { WithVertexZero, WithoutVertexZero };

// Row-major k x k weights. Scalar is ExactInt whenever all weights are
// integral (merging only adds weights), ExactRational otherwise.
template <typename Scalar>
struct Matrix {
  std::size_t k;
  std::vector<Scalar> w;

  const Scalar& at(std::size_t i, std::size_t j) const { return w[i * k + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return w[i * k + j]; }
};

// Builds G_I for the merged set {0} u I (or just I), I given as a bitmask
// over vertices 1..k-1 (bit i-1 <-> vertex i). The merged vertex becomes 0.
template <typename Scalar>
Matrix<Scalar> merged_graph(const Matrix<Scalar>& g, std::uint32_t mask, Merge merge) {
  std::vector<std::size_t> outside;
  std::vector<std::size_t> inside;
  if (merge == Merge::WithVertexZero) inside.push_back(0);
  for (std::size_t v = 1; v < g.k; ++v)
    ((mask >> (v - 1)) & 1u ? inside : outside).push_back(v);

  Matrix<Scalar> sub{outside.size() + 1, {}};
  sub.w.assign(sub.k * sub.k, Scalar(0));
  for (std::size_t t = 0; t < outside.size(); ++t) {
    Scalar merged = 0;
    for (std::size_t r : inside) merged += g.at(r, outside[t]);
    sub.at(0, t + 1) = merged;
    sub.at(t + 1, 0) = merged;
    for (std::size_t s = t + 1; s < outside.size(); ++s) {
      sub.at(s + 1, t + 1) = g.at(outside[s], outside[t]);
      sub.at(t + 1, s + 1) = g.at(outside[s], outside[t]);
    }
  }
  return sub;
}

template <typename Scalar>
Scalar subset_term(const Matrix<Scalar>& g, std::uint32_t mask, Merge merge);

template <typename Scalar>
Scalar subset_recursion(const Matrix<Scalar>& g, Merge merge) {
  if (g.k == 1) return Scalar(1);
  const std::uint32_t subsets = (1u << (g.k - 1)) - 1;
  Scalar total = 0;
  for (std::uint32_t mask = 1; mask <= subsets; ++mask) total += subset_term(g, mask, merge);
  return total;
}

template <typename Scalar>
Scalar subset_term(const Matrix<Scalar>& g, std::uint32_t mask, Merge merge) {
  Scalar product = 1;
  for (std::size_t v = 1; v < g.k; ++v)
    if ((mask >> (v - 1)) & 1u) product *= g.at(0, v);
  if (product == 0) return Scalar(0);
  Scalar value = product * subset_recursion(merged_graph(g, mask, merge), merge);
  // (-1)^{|I|-1} for inclusion-exclusion; the neighbourhood partition is unsigned.
  if (merge == Merge::WithVertexZero && std::popcount(mask) % 2 == 0) value = -value;
  return value;
}

// The top level is split across workers by subset; partial sums are added in
// mask order so the result never depends on scheduling.
template <typename Scalar>
Scalar run_recursion(const WeightedCompleteGraph& g, Merge merge) {
  Matrix<Scalar> m{g.k(), {}};
  m.w.reserve(g.k() * g.k());
  for (std::size_t i = 0; i < g.k(); ++i)
    for (std::size_t j = 0; j < g.k(); ++j) {
      if constexpr (std::is_same_v<Scalar, ExactInt>)
        m.w.push_back(g.weight(i, j).get_num());
      else
        m.w.push_back(g.weight(i, j));
    }
  if (m.k == 1) return Scalar(1);

  const std::size_t subsets = (std::size_t{1} << (m.k - 1)) - 1;
  std::vector<Scalar> terms(subsets);
  parallel_for(subsets, [&](std::size_t i) {
    terms[i] = subset_term(m, static_cast<std::uint32_t>(i + 1), merge);
  });
  Scalar total = 0;
  for (const Scalar& t : terms) total += t;
  return total;
}

ExactRational recursion_entry(const WeightedCompleteGraph& g, Merge merge) {
  if (g.k() > kMaxRecursionVertices)
    throw Error(ErrorKind::TooLarge, "subset recursion on K_" + std::to_string(g.k()) +
                                         " exceeds K_" + std::to_string(kMaxRecursionVertices));
  if (g.integral()) return ExactRational(run_recursion<ExactInt>(g, merge));
  return run_recursion<ExactRational>(g, merge);
}

}  // namespace

ExactRational tau_inclusion_exclusion(const WeightedCompleteGraph& g) {
  return recursion_entry(g, Merge::WithVertexZero);
}

ExactRational tau_alt_recursion(const WeightedCompleteGraph& g) {
  return recursion_entry(g, Merge::WithoutVertexZero);
}

}  // namespace forest_trees

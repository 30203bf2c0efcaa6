#include "forest_trees/kirchhoff.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "forest_trees/error.hpp"
#include "forest_trees/union_find.hpp"

namespace forest_trees {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::InvalidArgument, "matrix rows must be square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

void IntegerMatrix::swap_rows(std::size_t r, std::size_t s) {
  for (std::size_t j = 0; j < dim_; ++j) std::swap((*this)(r, j), (*this)(s, j));
}

IntegerMatrix laplacian_minor(const WeightedCompleteGraph& g, std::size_t drop) {
  if (drop >= g.k())
    throw Error(ErrorKind::IndexOutOfRange,
                "drop " + std::to_string(drop) + " in K_" + std::to_string(g.k()));
  if (!g.integral()) throw Error(ErrorKind::NonIntegerWeights, "Laplacian needs integer weights");

  IntegerMatrix out(g.k() - 1);
  auto index = [drop](std::size_t v) { return v < drop ? v : v - 1; };
  for (std::size_t i = 0; i < g.k(); ++i) {
    if (i == drop) continue;
    ExactInt degree = 0;
    for (std::size_t j = 0; j < g.k(); ++j) {
      degree += g.weight(i, j).get_num();
      if (j != drop && j != i) out(index(i), index(j)) = -g.weight(i, j).get_num();
    }
    out(index(i), index(i)) = degree;
  }
  return out;
}

ExactInt det_bareiss(IntegerMatrix a) {
  const std::size_t d = a.dim();
  if (d == 0) return 1;
  int sign = 1;
  ExactInt previous = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < d && a(pivot, k) == 0) ++pivot;
      if (pivot == d) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        ExactInt& target = a(i, j);
        target = target * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a(k, k);
  }
  return sign * a(d - 1, d - 1);
}

ExactInt tau_kirchhoff(const WeightedCompleteGraph& g) { return det_bareiss(laplacian_minor(g, 0)); }

ExactInt enumerate_tau(const WeightedCompleteGraph& g) {
  if (g.k() > kMaxEnumerateVertices)
    throw Error(ErrorKind::TooLarge, "enumeration on K_" + std::to_string(g.k()) + " exceeds K_" +
                                         std::to_string(kMaxEnumerateVertices));
  if (!g.integral()) throw Error(ErrorKind::NonIntegerWeights, "enumeration needs integer weights");

  struct WeightedEdge {
    std::size_t u, v;
    ExactInt w;
  };
  std::vector<WeightedEdge> edges;
  for (std::size_t u = 0; u < g.k(); ++u)
    for (std::size_t v = u + 1; v < g.k(); ++v)
      if (g.weight(u, v) != 0) edges.push_back({u, v, g.weight(u, v).get_num()});

  const std::size_t needed = g.k() - 1;
  RollbackUnionFind sets(g.k());
  ExactInt total = 0;
  std::function<void(std::size_t, std::size_t, const ExactInt&)> walk =
      [&](std::size_t index, std::size_t chosen, const ExactInt& product) {
        if (chosen == needed) {
          total += product;
          return;
        }
        if (edges.size() - index < needed - chosen) return;
        const WeightedEdge& e = edges[index];
        if (!sets.connected(e.u, e.v)) {
          sets.unite(e.u, e.v);
          walk(index + 1, chosen + 1, ExactInt(product * e.w));
          sets.undo();
        }
        walk(index + 1, chosen, product);
      };
  walk(0, 0, ExactInt(1));
  return total;
}

ExactInt count_forced_trees(const ForestInstance& instance) {
  validate(instance);
  const HostGraph host(instance.parts);
  if (host.vertex_count() > kMaxEnumerateVertices)
    throw Error(ErrorKind::TooLarge, std::to_string(host.vertex_count()) +
                                         " host vertices exceeds " +
                                         std::to_string(kMaxEnumerateVertices));

  std::set<std::pair<std::size_t, std::size_t>> forced;
  for (const Edge& raw : instance.edges) {
    const Edge e = raw.normalized();
    forced.emplace(host.id(e.a), host.id(e.b));
  }

  const auto& edges = host.edges();
  const std::size_t needed = host.vertex_count() - 1;
  RollbackUnionFind sets(host.vertex_count());
  std::uint64_t count = 0;
  // Walks every spanning tree of the host; a branch that drops a forest
  // edge can never contain the forest, so it is cut immediately.
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t index, std::size_t chosen) {
    if (chosen == needed) {
      for (std::size_t rest = index; rest < edges.size(); ++rest)
        if (forced.contains(edges[rest])) return;
      ++count;
      return;
    }
    if (edges.size() - index < needed - chosen) return;
    const auto [u, v] = edges[index];
    if (!sets.connected(u, v)) {
      sets.unite(u, v);
      walk(index + 1, chosen + 1);
      sets.undo();
    }
    if (!forced.contains(edges[index])) walk(index + 1, chosen);
  };
  walk(0, 0);
  return ExactInt(static_cast<unsigned long>(count));
}

}  // namespace forest_trees

#include "forest_trees/forest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "forest_trees/error.hpp"
#include "forest_trees/rng.hpp"
#include "forest_trees/union_find.hpp"

namespace forest_trees {

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.part) + "," + std::to_string(v.offset) + ")";
}

std::string to_string(const Edge& e) { return "[" + to_string(e.a) + "," + to_string(e.b) + "]"; }

Count ForestInstance::vertex_count() const {
  return std::accumulate(parts.begin(), parts.end(), Count{0});
}

PartSizes ComponentProfile::part_totals(std::size_t parts) const {
  PartSizes totals(parts, 0);
  for (const CountVector& c : components)
    for (std::size_t p = 0; p < parts && p < c.size(); ++p) totals[p] += c[p];
  return totals;
}

void ComponentProfile::canonicalize() {
  std::sort(components.begin(), components.end(), std::greater<>{});
}

HostGraph::HostGraph(PartSizes parts) : parts_(std::move(parts)) {
  first_.reserve(parts_.size());
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    first_.push_back(part_of_.size());
    part_of_.insert(part_of_.end(), parts_[p], p);
  }
  for (std::size_t u = 0; u < part_of_.size(); ++u)
    for (std::size_t v = u + 1; v < part_of_.size(); ++v)
      if (part_of_[u] != part_of_[v]) edges_.emplace_back(u, v);
}

Count HostGraph::min_components() const {
  const auto nonempty = std::count_if(parts_.begin(), parts_.end(), [](Count c) { return c > 0; });
  return nonempty >= 2 ? 1 : vertex_count();
}

namespace {

void check_host(const PartSizes& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidHost, "host has no parts");
  for (std::size_t p = 0; p < parts.size(); ++p)
    if (parts[p] == 0)
      throw Error(ErrorKind::InvalidHost, "part " + std::to_string(p) + " is empty");
}

}  // namespace

Decomposition decompose(const ForestInstance& instance) {
  check_host(instance.parts);
  const HostGraph host(instance.parts);
  auto in_range = [&](const Vertex& v) {
    return v.part < instance.parts.size() && v.offset < instance.parts[v.part];
  };

  UnionFind sets(host.vertex_count());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& raw : instance.edges) {
    if (!in_range(raw.a) || !in_range(raw.b))
      throw Error(ErrorKind::EdgeOutOfRange, "edge " + to_string(raw));
    if (raw.a.part == raw.b.part)
      throw Error(ErrorKind::SamePartEdge, "edge " + to_string(raw));
    const Edge e = raw.normalized();
    if (!seen.emplace(host.id(e.a), host.id(e.b)).second)
      throw Error(ErrorKind::DuplicateEdge, "edge " + to_string(raw));
    if (!sets.unite(host.id(e.a), host.id(e.b)))
      throw Error(ErrorKind::CycleDetected, "edge " + to_string(raw));
  }

  // Components are first numbered by smallest member, then stably sorted by
  // count vector so that ties keep a deterministic order.
  const std::size_t n = host.vertex_count();
  std::vector<std::size_t> raw_index(n, n);
  std::vector<CountVector> counts;
  std::vector<std::size_t> root_component(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = sets.find(v);
    if (root_component[r] == n) {
      root_component[r] = counts.size();
      counts.emplace_back(instance.parts.size(), 0);
    }
    raw_index[v] = root_component[r];
    ++counts[raw_index[v]][host.part_of(v)];
  }

  std::vector<std::size_t> order(counts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  Decomposition out;
  out.profile.components.reserve(order.size());
  for (std::size_t c : order) out.profile.components.push_back(counts[c]);
  out.component_of.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.component_of[v] = rank[raw_index[v]];
  return out;
}

ComponentProfile validate(const ForestInstance& instance) { return decompose(instance).profile; }

std::size_t for_each_forest(const PartSizes& parts, std::size_t cap,
                            const std::function<bool(const ForestInstance&)>& visit) {
  check_host(parts);
  const HostGraph host(parts);
  if (host.vertex_count() > kMaxEnumerationVertices)
    throw Error(ErrorKind::HostTooLarge, std::to_string(host.vertex_count()) + " vertices exceeds " +
                                             std::to_string(kMaxEnumerationVertices));

  const auto& edges = host.edges();
  RollbackUnionFind sets(host.vertex_count());
  ForestInstance current{parts, {}};
  std::size_t visited = 0;
  bool stop = cap == 0;

  // Each edge is first skipped, then taken if it keeps the set acyclic.
  std::function<void(std::size_t)> walk = [&](std::size_t index) {
    if (stop) return;
    if (index == edges.size()) {
      ++visited;
      if (!visit(current) || visited >= cap) stop = true;
      return;
    }
    walk(index + 1);
    const auto [u, v] = edges[index];
    if (stop || sets.connected(u, v)) return;
    sets.unite(u, v);
    current.edges.push_back({host.vertex(u), host.vertex(v)});
    walk(index + 1);
    current.edges.pop_back();
    sets.undo();
  };
  walk(0);
  return visited;
}

std::vector<ForestInstance> enumerate_forests(const PartSizes& parts, std::size_t cap) {
  std::vector<ForestInstance> out;
  for_each_forest(parts, cap, [&](const ForestInstance& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

ForestInstance random_forest(const PartSizes& parts, Count target_components, std::uint64_t seed) {
  check_host(parts);
  const HostGraph host(parts);
  if (target_components < host.min_components() || target_components > host.vertex_count())
    throw Error(ErrorKind::InfeasibleTarget,
                "target " + std::to_string(target_components) + " outside [" +
                    std::to_string(host.min_components()) + ", " +
                    std::to_string(host.vertex_count()) + "]");

  auto edges = host.edges();
  Rng rng(seed);
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.below(i)]);

  UnionFind sets(host.vertex_count());
  ForestInstance out{parts, {}};
  for (const auto& [u, v] : edges) {
    if (sets.sets() == target_components) break;
    if (sets.unite(u, v)) out.edges.push_back({host.vertex(u), host.vertex(v)});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace forest_trees

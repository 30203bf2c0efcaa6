#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace forest_trees {

/// Vertex count, part size, or per-part intersection count.
using Count = std::size_t;

/// Sizes of the parts of a complete multipartite host. Two entries describe
/// K_{m,n} (part 0 is X, part 1 is Y); three describe K_{n1,n2,n3}; n parts
/// of size one describe the complete graph K_n.
using PartSizes = std::vector<Count>;

/// A host vertex addressed by its part and its offset within the part.
struct Vertex {
  std::size_t part = 0;
  std::size_t offset = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  Vertex a;
  Vertex b;

  /// Endpoints ordered so that a < b.
  Edge normalized() const { return b < a ? Edge{b, a} : *this; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Vertex& v);
std::string to_string(const Edge& e);

/// A complete multipartite host graph together with the edges of a forest
/// that every counted spanning tree has to contain.
struct ForestInstance {
  PartSizes parts;
  std::vector<Edge> edges;

  Count vertex_count() const;

  friend bool operator==(const ForestInstance&, const ForestInstance&) = default;
};

/// Number of vertices a component has in each part, e.g. (m_i, n_i) for a
/// bipartite host.
using CountVector = std::vector<Count>;

/// Per-component part-intersection counts of a forest. validate() returns
/// the components sorted by count vector, descending.
struct ComponentProfile {
  std::vector<CountVector> components;

  std::size_t k() const { return components.size(); }

  /// Per-part sums over all components; `parts` entries wide.
  PartSizes part_totals(std::size_t parts) const;

  /// Sorts components into the canonical (descending) order.
  void canonicalize();

  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

/// Maps (part, offset) addresses to dense vertex ids and lists the host
/// edges in lexicographic order.
class HostGraph {
 public:
  explicit HostGraph(PartSizes parts);

  const PartSizes& parts() const { return parts_; }
  Count vertex_count() const { return part_of_.size(); }

  std::size_t id(const Vertex& v) const { return first_[v.part] + v.offset; }
  Vertex vertex(std::size_t id) const { return {part_of_[id], id - first_[part_of_[id]]}; }
  std::size_t part_of(std::size_t id) const { return part_of_[id]; }

  /// All (u, v) with u < v in distinct parts, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  /// Smallest component count any forest of this host can reach.
  Count min_components() const;

 private:
  PartSizes parts_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> part_of_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Profile plus the canonical component index of every host vertex.
struct Decomposition {
  ComponentProfile profile;
  std::vector<std::size_t> component_of;
};

/// Checks every invariant of `instance` and splits it into components.
/// Throws Error with kind InvalidHost, EdgeOutOfRange, SamePartEdge,
/// DuplicateEdge or CycleDetected; the message names the offending edge.
Decomposition decompose(const ForestInstance& instance);

ComponentProfile validate(const ForestInstance& instance);

/// Largest host accepted by the forest enumerator.
inline constexpr Count kMaxEnumerationVertices = 12;

/// Visits every acyclic edge subset of the host (the empty forest first),
/// in a fixed order, stopping after `cap` forests or when `visit` returns
/// false. Returns the number of forests visited. Throws HostTooLarge above
/// kMaxEnumerationVertices.
std::size_t for_each_forest(const PartSizes& parts, std::size_t cap,
                            const std::function<bool(const ForestInstance&)>& visit);

std::vector<ForestInstance> enumerate_forests(
    const PartSizes& parts, std::size_t cap = std::numeric_limits<std::size_t>::max());

/// Inserts host edges in seeded random order, skipping those that close a
/// cycle, until the forest has `target_components` components.
/// Throws InfeasibleTarget when the target is outside what the host allows.
ForestInstance random_forest(const PartSizes& parts, Count target_components, std::uint64_t seed);

}  // namespace forest_trees

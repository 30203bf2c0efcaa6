#include <gtest/gtest.h>

#include <set>

#include "forest_trees/error.hpp"
#include "forest_trees/forest.hpp"
#include "support/brute_force.hpp"

namespace forest_trees {
namespace {

Edge xy(std::size_t i, std::size_t j) { return {{0, i}, {1, j}}; }

ErrorKind kind_of(const ForestInstance& f) {
  try {
    validate(f);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "instance validated";
  return ErrorKind::InvalidArgument;
}

TEST(Validate, EmptyForestIsAllSingletons) {
  const ComponentProfile p = validate({{2, 2}, {}});
  EXPECT_EQ(p.k(), 4u);
  EXPECT_EQ(p.components, (std::vector<CountVector>{{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
}

TEST(Validate, OneEdgeMergesTwoSingletons) {
  const ComponentProfile p = validate({{2, 2}, {xy(0, 0)}});
  EXPECT_EQ(p.components, (std::vector<CountVector>{{1, 1}, {1, 0}, {0, 1}}));
}

TEST(Validate, FourCycleIsRejected) {
  const ForestInstance f{{2, 2}, {xy(0, 0), xy(0, 1), xy(1, 0), xy(1, 1)}};
  EXPECT_EQ(kind_of(f), ErrorKind::CycleDetected);
  try {
    validate(f);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("[(0,1),(1,1)]"), std::string::npos) << e.what();
  }
}

TEST(Validate, ErrorKinds) {
  EXPECT_EQ(kind_of({{2, 2}, {xy(2, 0)}}), ErrorKind::EdgeOutOfRange);
  EXPECT_EQ(kind_of({{2, 2}, {{{3, 0}, {1, 0}}}}), ErrorKind::EdgeOutOfRange);
  EXPECT_EQ(kind_of({{2, 2}, {{{0, 0}, {0, 1}}}}), ErrorKind::SamePartEdge);
  EXPECT_EQ(kind_of({{2, 2}, {{{1, 1}, {1, 1}}}}), ErrorKind::SamePartEdge);
  EXPECT_EQ(kind_of({{2, 2}, {xy(0, 0), {{1, 0}, {0, 0}}}}), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of({{}, {}}), ErrorKind::InvalidHost);
  EXPECT_EQ(kind_of({{2, 0}, {}}), ErrorKind::InvalidHost);
}

TEST(Validate, ProfileSumsMatchParts) {
  const ForestInstance f{{3, 2, 2}, {{{0, 0}, {1, 0}}, {{1, 0}, {2, 1}}, {{0, 2}, {2, 0}}}};
  const ComponentProfile p = validate(f);
  EXPECT_EQ(p.part_totals(3), f.parts);
  EXPECT_EQ(p.k(), 4u);
}

TEST(Decompose, ComponentIndexMatchesProfile) {
  const ForestInstance f{{2, 3}, {xy(1, 0), xy(1, 2)}};
  const Decomposition d = decompose(f);
  const HostGraph host(f.parts);
  std::vector<CountVector> rebuilt(d.profile.k(), CountVector(2, 0));
  for (std::size_t v = 0; v < host.vertex_count(); ++v) ++rebuilt[d.component_of[v]][host.part_of(v)];
  EXPECT_EQ(rebuilt, d.profile.components);
  EXPECT_EQ(d.profile.components.front(), (CountVector{1, 2}));
}

TEST(EnumerateForests, SmallHosts) {
  EXPECT_EQ(enumerate_forests({1, 1}).size(), 2u);
  EXPECT_EQ(enumerate_forests({2, 1}).size(), 4u);
  EXPECT_EQ(enumerate_forests({2, 2}).size(), 15u);
  EXPECT_EQ(testing::count_forests_by_subsets({2, 2}), 15u);
}

TEST(EnumerateForests, EmptyForestFirstAndAllDistinct) {
  const auto forests = enumerate_forests({2, 3});
  ASSERT_FALSE(forests.empty());
  EXPECT_TRUE(forests.front().edges.empty());
  std::set<std::vector<Edge>> distinct;
  for (const auto& f : forests) {
    EXPECT_NO_THROW(validate(f));
    auto edges = f.edges;
    std::sort(edges.begin(), edges.end());
    distinct.insert(edges);
  }
  EXPECT_EQ(distinct.size(), forests.size());
}

TEST(EnumerateForests, MatchesSubsetFiltering) {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = m; m + n <= 6; ++n)
      EXPECT_EQ(enumerate_forests({m, n}).size(), testing::count_forests_by_subsets({m, n}))
          << "K_{" << m << "," << n << "}";
  EXPECT_EQ(enumerate_forests({1, 1, 1, 1}).size(), testing::count_forests_by_subsets({1, 1, 1, 1}));
  EXPECT_EQ(enumerate_forests({2, 1, 2}).size(), testing::count_forests_by_subsets({2, 1, 2}));
}

TEST(EnumerateForests, CapAndStop) {
  EXPECT_EQ(enumerate_forests({2, 2}, 5).size(), 5u);
  EXPECT_EQ(enumerate_forests({2, 2}, 0).size(), 0u);
  std::size_t seen = 0;
  const std::size_t visited = for_each_forest({3, 3}, 1000, [&](const ForestInstance&) {
    return ++seen < 7;
  });
  EXPECT_EQ(visited, 7u);
}

TEST(EnumerateForests, HostTooLarge) {
  EXPECT_NO_THROW(for_each_forest({6, 6}, 1, [](const ForestInstance&) { return true; }));
  try {
    enumerate_forests({6, 7}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HostTooLarge);
  }
}

TEST(RandomForest, TargetsAndErrors) {
  EXPECT_TRUE(random_forest({3, 3}, 6, 123).edges.empty());
  const ForestInstance tree = random_forest({2, 2}, 1, 7);
  EXPECT_EQ(validate(tree).k(), 1u);
  EXPECT_EQ(tree.edges.size(), 3u);
  const ForestInstance single = random_forest({1, 1}, 1, 99);
  ASSERT_EQ(single.edges.size(), 1u);
  EXPECT_EQ(single.edges[0], xy(0, 0));

  for (Count bad : {Count{0}, Count{7}}) {
    try {
      random_forest({3, 3}, bad, 1);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InfeasibleTarget);
    }
  }
  // One part has no edges at all.
  EXPECT_THROW(random_forest({4}, 2, 1), Error);
  EXPECT_TRUE(random_forest({4}, 4, 1).edges.empty());
}

TEST(RandomForest, ReproducibleAndValid) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PartSizes parts{3 + seed % 4, 2 + seed % 5};
    const Count n = parts[0] + parts[1];
    const Count target = 1 + seed % n;
    const ForestInstance a = random_forest(parts, target, seed);
    EXPECT_EQ(a, random_forest(parts, target, seed));
    const ComponentProfile p = validate(a);
    EXPECT_EQ(p.k(), target);
    EXPECT_EQ(p.part_totals(2), parts);
  }
  EXPECT_NE(random_forest({5, 5}, 3, 1), random_forest({5, 5}, 3, 2));
}

}  // namespace
}  // namespace forest_trees

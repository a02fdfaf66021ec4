// Copyright 2026 The ftcons Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "ftcons/errors.hpp"
#include "ftcons/graph.hpp"
#include "support.hpp"

namespace ftcons {
namespace {

using ::ftcons::testing::Edge;

Tree tree_of(int n, const std::vector<Edge>& edges) {
  return Tree::from_edges(n, edges);
}

TEST(GraphTest, ArcsAreSortedAndDeduplicated) {
  Graph g(3);
  g.add_arc(2, 1);
  g.add_arc(1, 3);
  g.add_arc(2, 1);
  EXPECT_EQ(g.arc_count(), 2u);
  EXPECT_EQ(g.arcs(), (std::vector<Arc>{{1, 3}, {2, 1}}));
  EXPECT_THROW(g.add_arc(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_arc(0, 1), std::out_of_range);
  EXPECT_THROW(g.add_arc(1, 4), std::out_of_range);
}

TEST(GraphTest, DirectedCycleOrientation) {
  const Graph c = directed_cycle(4);
  EXPECT_TRUE(c.has_arc(2, 1));
  EXPECT_TRUE(c.has_arc(1, 4));
  EXPECT_FALSE(c.has_arc(1, 2));
}

TEST(TreeTest, FromEdgesRejectsNonTrees) {
  const std::vector<Edge> cycle{{1, 2}, {2, 3}, {3, 1}};
  EXPECT_THROW(Tree::from_edges(3, cycle), std::invalid_argument);
  const std::vector<Edge> forest{{1, 2}, {3, 4}};
  EXPECT_THROW(Tree::from_edges(4, forest), std::invalid_argument);
}

TEST(BidirectionalSubgraphTest, Examples) {
  const Graph path = testing::bidirectional_graph(3, testing::path_edges(3));
  EXPECT_EQ(bidirectional_subgraph(path), path);

  const Graph fixture = testing::directed_fixture_graph();
  EXPECT_EQ(bidirectional_subgraph(fixture).arcs(),
            (std::vector<Arc>{{1, 3}, {3, 1}}));

  EXPECT_EQ(bidirectional_subgraph(directed_cycle(4)).arc_count(), 0u);
}

TEST(SpanningTreeTest, PathTree) {
  const auto t = find_spanning_tree(
      testing::bidirectional_graph(3, testing::path_edges(3)));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->tree.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(t->root, 1);
  EXPECT_EQ(t->parent[3], 2);
}

TEST(SpanningTreeTest, DirectedFixtureHasNone) {
  EXPECT_FALSE(find_spanning_tree(testing::directed_fixture_graph()));
  const auto comps = bidirectional_components(testing::directed_fixture_graph());
  EXPECT_EQ(comps, (std::vector<std::vector<Node>>{{1, 3}, {2}, {4}}));
}

TEST(SpanningTreeTest, LayeredFixtureIsItsOwnTree) {
  const auto edges = testing::layered_fixture_edges();
  const auto t = find_spanning_tree(testing::bidirectional_graph(9, edges));
  ASSERT_TRUE(t.has_value());
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(t->tree.edges(), sorted);
}

TEST(SpanningTreeTest, BfsFromNodeOneUsesOnlyBidirectionalEdges) {
  Graph g = testing::bidirectional_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  g.add_arc(1, 4);  // one-way shortcut must be ignored
  const auto t = find_spanning_tree(g);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->parent[4], 3);
}

TEST(LayerDecomposeTest, LayeredFixture) {
  const Tree t = tree_of(9, testing::layered_fixture_edges());
  const TreeLayering l = layer_decompose(t, 1);
  using V = std::vector<Node>;
  ASSERT_EQ(l.eccentricity(), 5);
  EXPECT_EQ(l.inner[0], V{1});
  EXPECT_EQ(l.inner[1], V{2});
  EXPECT_EQ(l.inner[2], V{4});
  EXPECT_EQ(l.inner[3], V{5});
  EXPECT_EQ(l.inner[4], (V{6, 8}));
  EXPECT_TRUE(l.inner[5].empty());
  EXPECT_TRUE(l.leaves[1].empty());
  EXPECT_EQ(l.leaves[2], V{3});
  EXPECT_TRUE(l.leaves[3].empty());
  EXPECT_TRUE(l.leaves[4].empty());
  EXPECT_EQ(l.leaves[5], (V{7, 9}));
  EXPECT_EQ(l.designated_child[2], 3);  // smallest of {3, 4}
  EXPECT_EQ(l.designated_child[5], 6);
  EXPECT_EQ(l.parent[9], 8);
}

TEST(LayerDecomposeTest, TwoNodes) {
  const TreeLayering l = layer_decompose(tree_of(2, {{1, 2}}), 1);
  EXPECT_EQ(l.inner[0], std::vector<Node>{1});
  EXPECT_TRUE(l.inner[1].empty());
  EXPECT_EQ(l.leaves[1], std::vector<Node>{2});
}

TEST(LayerDecomposeTest, StarFromALeaf) {
  // Center 3, leaves 1, 2, 4, 5. Hand-computed distances from 1:
  // d(3) = 1, d(2) = d(4) = d(5) = 2.
  const TreeLayering l = layer_decompose(tree_of(5, testing::star_edges(5, 3)), 1);
  EXPECT_EQ(l.inner[1], std::vector<Node>{3});
  EXPECT_EQ(l.leaves[2], (std::vector<Node>{2, 4, 5}));
  EXPECT_EQ(l.eccentricity(), 2);
}

TEST(LayerDecomposeTest, RootMustBeALeaf) {
  EXPECT_THROW(layer_decompose(tree_of(3, testing::path_edges(3)), 2),
               PreconditionError);
  Tree single(3);
  single.add_root(2);
  const TreeLayering l = layer_decompose(single, 2);
  EXPECT_EQ(l.eccentricity(), 0);
}

TEST(LayerDecomposeTest, PartitionPropertyOnRandomTrees) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 20;
    const Tree t = tree_of(n, testing::random_tree_edges(n, rng));
    Node v0 = 1;
    while (!t.is_leaf(v0)) ++v0;
    const TreeLayering l = layer_decompose(t, v0);
    std::size_t count = 0;
    for (int k = 0; k <= l.eccentricity(); ++k) {
      count += l.inner[k].size() + l.leaves[k].size();
    }
    EXPECT_EQ(count, static_cast<std::size_t>(n));
    for (Node v = 1; v <= n; ++v) {
      if (v == v0) continue;
      EXPECT_EQ(l.distance[l.parent[v]], l.distance[v] - 1);
    }
    for (int k = 0; k < l.eccentricity(); ++k) {
      for (Node v : l.inner[k]) {
        ASSERT_NE(l.designated_child[v], 0);
        EXPECT_EQ(l.distance[l.designated_child[v]], k + 1);
      }
    }
  }
}

TEST(TreeDiameterTest, Examples) {
  Tree single(1);
  single.add_root(1);
  EXPECT_EQ(tree_diameter(single), 0);
  EXPECT_EQ(tree_diameter(tree_of(5, testing::path_edges(5))), 4);
  // All-pairs BFS oracle for the 9-node layered tree.
  const auto edges = testing::layered_fixture_edges();
  EXPECT_EQ(testing::brute_force_diameter(9, edges), 5);
  EXPECT_EQ(tree_diameter(tree_of(9, edges)), 5);
}

TEST(TreeDiameterTest, MatchesAllPairsOracle) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 15;
    const auto edges = testing::random_tree_edges(n, rng);
    EXPECT_EQ(tree_diameter(tree_of(n, edges)),
              testing::brute_force_diameter(n, edges));
  }
}

TEST(StrongConnectivityTest, Examples) {
  EXPECT_TRUE(is_strongly_connected(directed_cycle(5)));
  const Arc one[] = {{1, 2}};
  EXPECT_FALSE(is_strongly_connected(Graph(2, one)));
  EXPECT_TRUE(testing::closure_strongly_connected(testing::directed_fixture_graph()));
  EXPECT_TRUE(is_strongly_connected(testing::directed_fixture_graph()));
  EXPECT_TRUE(is_strongly_connected(Graph(1)));
}

TEST(StrongConnectivityTest, ComponentsCoverAllNodes) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_digraph(8, 0.2, rng);
    std::vector<Node> all;
    for (const auto& c : strongly_connected_components(g)) {
      all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all.size(), 8u);
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  }
}

TEST(CycleEnumerationTest, Examples) {
  EXPECT_EQ(enumerate_simple_cycles(directed_cycle(3)),
            (std::vector<Cycle>{{1, 3, 2}}));

  const auto cycles = enumerate_simple_cycles(testing::directed_fixture_graph());
  EXPECT_NE(std::find(cycles.begin(), cycles.end(), Cycle{1, 3}), cycles.end());
  EXPECT_NE(std::find(cycles.begin(), cycles.end(), Cycle{1, 4, 3, 2}),
            cycles.end());
  auto oracle = testing::brute_force_cycles(testing::directed_fixture_graph());
  auto got = cycles;
  std::sort(oracle.begin(), oracle.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, oracle);

  const Arc dag[] = {{1, 2}, {2, 3}, {1, 3}};
  EXPECT_TRUE(enumerate_simple_cycles(Graph(3, dag)).empty());
}

TEST(CycleEnumerationTest, StopPredicateEndsEarly) {
  Graph complete(5);
  for (Node u = 1; u <= 5; ++u) {
    for (Node v = 1; v <= 5; ++v) {
      if (u != v) complete.add_arc(u, v);
    }
  }
  int calls = 0;
  const auto cycles = enumerate_simple_cycles(
      complete, kDefaultCycleNodeLimit,
      [&calls](const Cycle&) { return ++calls == 3; });
  EXPECT_EQ(cycles.size(), 3u);
}

TEST(CycleEnumerationTest, NodeLimitGuard) {
  EXPECT_THROW(enumerate_simple_cycles(directed_cycle(21)), CycleLimitError);
  EXPECT_EQ(enumerate_simple_cycles(directed_cycle(21), 21).size(), 1u);
  EXPECT_THROW(has_even_simple_cycle(directed_cycle(6), 5), CycleLimitError);
}

TEST(CycleEnumerationTest, MatchesBruteForceOnRandomDigraphs) {
  Rng rng(42);
  std::uniform_int_distribution<int> order(1, 7);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_digraph(order(rng), density(rng), rng);
    auto got = enumerate_simple_cycles(g);
    auto want = testing::brute_force_cycles(g);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
}

TEST(EvenCycleTest, Examples) {
  const auto c4 = has_even_simple_cycle(directed_cycle(4));
  ASSERT_TRUE(c4.has_value());
  EXPECT_EQ(*c4, (Cycle{1, 4, 3, 2}));
  EXPECT_FALSE(has_even_simple_cycle(directed_cycle(3)));
  const auto fixture = has_even_simple_cycle(testing::directed_fixture_graph());
  ASSERT_TRUE(fixture.has_value());
  EXPECT_EQ(fixture->size() % 2, 0u);
}

TEST(SimpleCycleGraphTest, Examples) {
  EXPECT_TRUE(is_simple_cycle_graph(directed_cycle(6)));
  EXPECT_FALSE(is_simple_cycle_graph(testing::directed_fixture_graph()));
  const Arc triangles[] = {{2, 1}, {3, 2}, {1, 3}, {5, 4}, {6, 5}, {4, 6}};
  EXPECT_FALSE(is_simple_cycle_graph(Graph(6, triangles)));
  EXPECT_FALSE(is_simple_cycle_graph(Graph(1)));
}

}  // namespace
}  // namespace ftcons

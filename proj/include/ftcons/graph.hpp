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

#ifndef FTCONS_GRAPH_HPP_
#define FTCONS_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ftcons {

// Nodes are labeled 1..n at every public interface. Matrix row/column index
// of node v is v - 1.
using Node = int;

// Arc (from, to): node `to` may place weight on node `from`'s value, i.e. it
// permits the matrix entry A(to, from) > 0.
struct Arc {
  Node from = 0;
  Node to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A directed cycle as the node sequence visited along arcs:
// c[0] -> c[1] -> ... -> c.back() -> c[0].
using Cycle = std::vector<Node>;

inline constexpr int kDefaultCycleNodeLimit = 20;

// Simple digraph: no self-loops, no parallel arcs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Arc> arcs);

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  // Throws std::out_of_range for ids outside 1..n and std::invalid_argument
  // for self-loops. Adding an existing arc is a no-op.
  void add_arc(Node from, Node to);
  bool has_arc(Node from, Node to) const;

  // Sorted ascending.
  std::span<const Node> successors(Node v) const;
  std::span<const Node> predecessors(Node v) const;

  // All arcs, sorted lexicographically.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void check_node(Node v) const;

  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<char> adjacency_;  // row-major [from-1][to-1]
  std::vector<std::vector<Node>> out_;
  std::vector<std::vector<Node>> in_;
};

// Directed cycle C_n with arcs (i, i-1) for i = 2..n and (1, n). Requires
// n >= 2.
Graph directed_cycle(int n);

// Undirected tree on a subset of the nodes 1..ambient_order. Connectivity and
// acyclicity are maintained by construction: the only mutators attach or
// detach leaves.
class Tree {
 public:
  explicit Tree(int ambient_order);

  // Validates that `edges` form a tree spanning exactly the nodes they touch
  // (or the single node `lone` when `edges` is empty). Throws
  // std::invalid_argument otherwise.
  static Tree from_edges(int ambient_order,
                         std::span<const std::pair<Node, Node>> edges,
                         Node lone = 1);

  int ambient_order() const noexcept { return ambient_order_; }
  int size() const noexcept { return size_; }
  bool contains(Node v) const;
  std::span<const Node> neighbors(Node v) const;
  int degree(Node v) const { return static_cast<int>(neighbors(v).size()); }
  bool is_leaf(Node v) const { return contains(v) && degree(v) == 1; }

  std::vector<Node> nodes() const;
  // Each edge once as (min, max), sorted.
  std::vector<std::pair<Node, Node>> edges() const;

  // Only valid on an empty tree.
  void add_root(Node v);
  void add_leaf(Node leaf, Node attach_to);
  void remove_leaf(Node leaf);

 private:
  void check_node(Node v) const;

  int ambient_order_ = 0;
  int size_ = 0;
  std::vector<char> member_;
  std::vector<std::vector<Node>> adjacency_;
};

struct SpanningTree {
  Tree tree;
  Node root = 0;
  std::vector<Node> parent;  // indexed by node; 0 for the root
};

// Distance layering of a tree seen from a chosen leaf v0.
//   inner[k]  (V_k): non-leaf nodes at distance k, with inner[0] == {v0}
//   leaves[k] (L_k): leaves at distance k (leaves[0] is always empty)
// Both lists have eccentricity(v0) + 1 entries. Per-node vectors are indexed
// by node id and sized ambient_order + 1.
struct TreeLayering {
  Node root = 0;
  std::vector<int> distance;  // -1 for nodes outside the tree
  std::vector<std::vector<Node>> inner;
  std::vector<std::vector<Node>> leaves;
  std::vector<Node> parent;            // neighbor one step closer to root
  std::vector<Node> designated_child;  // smallest-id neighbor one step farther

  int eccentricity() const { return static_cast<int>(inner.size()) - 1; }
  std::span<const Node> inner_at(int k) const;
  std::span<const Node> leaves_at(int k) const;
};

// Arc (u, v) is kept iff both (u, v) and (v, u) are present.
Graph bidirectional_subgraph(const Graph& g);

// Connected components of the bidirectional subgraph, each sorted, ordered by
// smallest member.
std::vector<std::vector<Node>> bidirectional_components(const Graph& g);

// BFS tree of the bidirectional subgraph from node 1, visiting neighbors in
// ascending order. Empty when that subgraph does not span all nodes.
std::optional<SpanningTree> find_spanning_tree(const Graph& g);

// Throws PreconditionError when v0 is not a leaf of a multi-node tree.
TreeLayering layer_decompose(const Tree& tree, Node v0);
inline TreeLayering layer_decompose(const SpanningTree& t, Node v0) {
  return layer_decompose(t.tree, v0);
}

int tree_diameter(const Tree& tree);
inline int tree_diameter(const SpanningTree& t) { return tree_diameter(t.tree); }

// Tarjan's algorithm. Components in reverse topological order of the
// condensation; members sorted.
std::vector<std::vector<Node>> strongly_connected_components(const Graph& g);
bool is_strongly_connected(const Graph& g);

// Return true to stop the enumeration after the cycle just reported.
using CycleStop = std::function<bool(const Cycle&)>;

// Johnson's algorithm. Each cycle starts at its smallest node; cycles are
// grouped by that node in ascending order, and successors are explored in
// ascending order. When `stop` fires, the triggering cycle is the last
// element. Throws CycleLimitError when g.order() > node_limit.
std::vector<Cycle> enumerate_simple_cycles(
    const Graph& g, int node_limit = kDefaultCycleNodeLimit,
    const CycleStop& stop = {});

// First even-length simple cycle in enumeration order, if any.
std::optional<Cycle> has_even_simple_cycle(
    const Graph& g, int node_limit = kDefaultCycleNodeLimit);

// True iff the arcs form one directed Hamiltonian cycle.
bool is_simple_cycle_graph(const Graph& g);

}  // namespace ftcons

#endif  // FTCONS_GRAPH_HPP_

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

#include "ftcons/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "ftcons/errors.hpp"

namespace ftcons {

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  out_.resize(n + 1);
  in_.resize(n + 1);
}

Graph::Graph(int n, std::span<const Arc> arcs) : Graph(n) {
  for (const Arc& a : arcs) add_arc(a.from, a.to);
}

void Graph::check_node(Node v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("node " + std::to_string(v) + " outside 1.." +
                            std::to_string(n_));
  }
}

void Graph::add_arc(Node from, Node to) {
  check_node(from);
  check_node(to);
  if (from == to) {
    throw std::invalid_argument("self-loop at node " + std::to_string(from));
  }
  char& cell = adjacency_[static_cast<std::size_t>(from - 1) * n_ + (to - 1)];
  if (cell) return;
  cell = 1;
  ++arc_count_;
  auto& out = out_[from];
  out.insert(std::lower_bound(out.begin(), out.end(), to), to);
  auto& in = in_[to];
  in.insert(std::lower_bound(in.begin(), in.end(), from), from);
}

bool Graph::has_arc(Node from, Node to) const {
  if (from < 1 || from > n_ || to < 1 || to > n_) return false;
  return adjacency_[static_cast<std::size_t>(from - 1) * n_ + (to - 1)] != 0;
}

std::span<const Node> Graph::successors(Node v) const {
  check_node(v);
  return out_[v];
}

std::span<const Node> Graph::predecessors(Node v) const {
  check_node(v);
  return in_[v];
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Node u = 1; u <= n_; ++u) {
    for (Node v : out_[u]) result.push_back({u, v});
  }
  return result;
}

Graph directed_cycle(int n) {
  if (n < 2) throw std::invalid_argument("directed cycle needs n >= 2");
  Graph g(n);
  for (Node i = 2; i <= n; ++i) g.add_arc(i, i - 1);
  g.add_arc(1, n);
  return g;
}

// ---------------------------------------------------------------- Tree

Tree::Tree(int ambient_order)
    : ambient_order_(ambient_order),
      member_(ambient_order + 1, 0),
      adjacency_(ambient_order + 1) {
  if (ambient_order < 1) throw std::invalid_argument("empty ambient node set");
}

Tree Tree::from_edges(int ambient_order,
                      std::span<const std::pair<Node, Node>> edges,
                      Node lone) {
  Tree t(ambient_order);
  if (edges.empty()) {
    t.add_root(lone);
    return t;
  }
  // Attach edges in BFS order from the first endpoint so every insertion is
  // a leaf attachment; anything left over means a cycle or a second
  // component.
  std::vector<std::vector<Node>> adj(ambient_order + 1);
  for (auto [u, v] : edges) {
    t.check_node(u);
    t.check_node(v);
    if (u == v) throw std::invalid_argument("tree edge is a self-loop");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const Node start = edges.front().first;
  t.add_root(start);
  std::deque<Node> queue{start};
  std::size_t used = 0;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    std::sort(adj[u].begin(), adj[u].end());
    for (Node v : adj[u]) {
      if (t.contains(v)) continue;
      t.add_leaf(v, u);
      ++used;
      queue.push_back(v);
    }
  }
  if (used != edges.size()) {
    throw std::invalid_argument("edge list is not a tree (cycle, duplicate "
                                "edge, or disconnected)");
  }
  return t;
}

void Tree::check_node(Node v) const {
  if (v < 1 || v > ambient_order_) {
    throw std::out_of_range("node " + std::to_string(v) + " outside 1.." +
                            std::to_string(ambient_order_));
  }
}

bool Tree::contains(Node v) const {
  return v >= 1 && v <= ambient_order_ && member_[v] != 0;
}

std::span<const Node> Tree::neighbors(Node v) const {
  check_node(v);
  return adjacency_[v];
}

std::vector<Node> Tree::nodes() const {
  std::vector<Node> result;
  result.reserve(size_);
  for (Node v = 1; v <= ambient_order_; ++v) {
    if (member_[v]) result.push_back(v);
  }
  return result;
}

std::vector<std::pair<Node, Node>> Tree::edges() const {
  std::vector<std::pair<Node, Node>> result;
  for (Node u = 1; u <= ambient_order_; ++u) {
    for (Node v : adjacency_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

void Tree::add_root(Node v) {
  check_node(v);
  if (size_ != 0) throw std::logic_error("tree already has a root");
  member_[v] = 1;
  size_ = 1;
}

void Tree::add_leaf(Node leaf, Node attach_to) {
  check_node(leaf);
  if (contains(leaf)) {
    throw std::invalid_argument("node " + std::to_string(leaf) +
                                " already in tree");
  }
  if (!contains(attach_to)) {
    throw std::invalid_argument("attachment node " +
                                std::to_string(attach_to) + " not in tree");
  }
  member_[leaf] = 1;
  ++size_;
  adjacency_[leaf].push_back(attach_to);
  auto& adj = adjacency_[attach_to];
  adj.insert(std::lower_bound(adj.begin(), adj.end(), leaf), leaf);
}

void Tree::remove_leaf(Node leaf) {
  if (!contains(leaf)) {
    throw std::invalid_argument("node " + std::to_string(leaf) +
                                " not in tree");
  }
  if (size_ > 1 && degree(leaf) != 1) {
    throw std::invalid_argument("node " + std::to_string(leaf) +
                                " is not a leaf");
  }
  if (size_ > 1) {
    const Node other = adjacency_[leaf].front();
    auto& adj = adjacency_[other];
    adj.erase(std::find(adj.begin(), adj.end(), leaf));
    adjacency_[leaf].clear();
  }
  member_[leaf] = 0;
  --size_;
}

// ---------------------------------------------------------------- layering

std::span<const Node> TreeLayering::inner_at(int k) const {
  if (k < 0 || k >= static_cast<int>(inner.size())) return {};
  return inner[k];
}

std::span<const Node> TreeLayering::leaves_at(int k) const {
  if (k < 0 || k >= static_cast<int>(leaves.size())) return {};
  return leaves[k];
}

namespace {

// BFS distances on a tree; -1 outside. Also fills `parent` when non-null.
std::vector<int> tree_distances(const Tree& tree, Node source,
                                std::vector<Node>* parent = nullptr) {
  const int n = tree.ambient_order();
  std::vector<int> dist(n + 1, -1);
  if (parent) parent->assign(n + 1, 0);
  std::deque<Node> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    for (Node v : tree.neighbors(u)) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      if (parent) (*parent)[v] = u;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace

TreeLayering layer_decompose(const Tree& tree, Node v0) {
  if (!tree.contains(v0)) {
    throw PreconditionError("layering root " + std::to_string(v0) +
                            " is not in the tree");
  }
  if (tree.size() > 1 && !tree.is_leaf(v0)) {
    throw PreconditionError("layering root " + std::to_string(v0) +
                            " is not a leaf (degree " +
                            std::to_string(tree.degree(v0)) + ")");
  }
  TreeLayering layering;
  layering.root = v0;
  layering.distance = tree_distances(tree, v0, &layering.parent);
  const int ecc =
      *std::max_element(layering.distance.begin(), layering.distance.end());
  layering.inner.assign(ecc + 1, {});
  layering.leaves.assign(ecc + 1, {});
  layering.designated_child.assign(tree.ambient_order() + 1, 0);

  for (Node v = 1; v <= tree.ambient_order(); ++v) {
    const int k = layering.distance[v];
    if (k < 0) continue;
    if (k > 0 && tree.degree(v) == 1) {
      layering.leaves[k].push_back(v);
    } else {
      layering.inner[k].push_back(v);
    }
    for (Node w : tree.neighbors(v)) {  // ascending, so the first hit wins
      if (layering.distance[w] == k + 1) {
        layering.designated_child[v] = w;
        break;
      }
    }
  }
  return layering;
}

int tree_diameter(const Tree& tree) {
  if (tree.size() <= 1) return 0;
  const Node start = tree.nodes().front();
  auto dist = tree_distances(tree, start);
  const Node far = static_cast<Node>(
      std::max_element(dist.begin(), dist.end()) - dist.begin());
  dist = tree_distances(tree, far);
  return *std::max_element(dist.begin(), dist.end());
}

// ---------------------------------------------------------------- spanning

Graph bidirectional_subgraph(const Graph& g) {
  Graph result(g.order());
  for (const Arc& a : g.arcs()) {
    if (g.has_arc(a.to, a.from)) result.add_arc(a.from, a.to);
  }
  return result;
}

std::vector<std::vector<Node>> bidirectional_components(const Graph& g) {
  const Graph b = bidirectional_subgraph(g);
  std::vector<int> seen(g.order() + 1, 0);
  std::vector<std::vector<Node>> components;
  for (Node s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Node> comp;
    std::deque<Node> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const Node u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Node v : b.successors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::optional<SpanningTree> find_spanning_tree(const Graph& g) {
  const Graph b = bidirectional_subgraph(g);
  SpanningTree result{Tree(g.order()), 1, std::vector<Node>(g.order() + 1, 0)};
  result.tree.add_root(1);
  std::deque<Node> queue{1};
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    for (Node v : b.successors(u)) {
      if (result.tree.contains(v)) continue;
      result.tree.add_leaf(v, u);
      result.parent[v] = u;
      queue.push_back(v);
    }
  }
  if (result.tree.size() != g.order()) return std::nullopt;
  return result;
}

// ---------------------------------------------------------------- SCC

namespace {

class Tarjan {
 public:
  explicit Tarjan(const Graph& g)
      : g_(g),
        index_(g.order() + 1, -1),
        low_(g.order() + 1, 0),
        on_stack_(g.order() + 1, 0) {}

  std::vector<std::vector<Node>> run() {
    for (Node v = 1; v <= g_.order(); ++v) {
      if (index_[v] < 0) visit(v);
    }
    return std::move(components_);
  }

 private:
  // Iterative to keep stack depth independent of n.
  void visit(Node root) {
    struct Frame {
      Node v;
      std::size_t next;
    };
    std::vector<Frame> frames{{root, 0}};
    open(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto succ = g_.successors(f.v);
      if (f.next < succ.size()) {
        const Node w = succ[f.next++];
        if (index_[w] < 0) {
          open(w);
          frames.push_back({w, 0});
        } else if (on_stack_[w]) {
          low_[f.v] = std::min(low_[f.v], index_[w]);
        }
        continue;
      }
      const Node v = f.v;
      frames.pop_back();
      if (!frames.empty()) {
        low_[frames.back().v] = std::min(low_[frames.back().v], low_[v]);
      }
      if (low_[v] == index_[v]) {
        std::vector<Node> comp;
        Node w;
        do {
          w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components_.push_back(std::move(comp));
      }
    }
  }

  void open(Node v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = 1;
  }

  const Graph& g_;
  int counter_ = 0;
  std::vector<int> index_;
  std::vector<int> low_;
  std::vector<char> on_stack_;
  std::vector<Node> stack_;
  std::vector<std::vector<Node>> components_;
};

}  // namespace

std::vector<std::vector<Node>> strongly_connected_components(const Graph& g) {
  return Tarjan(g).run();
}

bool is_strongly_connected(const Graph& g) {
  return strongly_connected_components(g).size() == 1;
}

// ---------------------------------------------------------------- cycles

namespace {

class JohnsonCycles {
 public:
  JohnsonCycles(const Graph& g, const CycleStop& stop)
      : g_(g),
        stop_(stop),
        allowed_(g.order() + 1, 0),
        blocked_(g.order() + 1, 0),
        block_map_(g.order() + 1) {}

  std::vector<Cycle> run() {
    const int n = g_.order();
    for (Node s = 1; s <= n && !stopped_; ++s) {
      // Restrict to the strong component of s inside the subgraph induced by
      // nodes >= s.
      Graph sub(n);
      for (const Arc& a : g_.arcs()) {
        if (a.from >= s && a.to >= s) sub.add_arc(a.from, a.to);
      }
      std::fill(allowed_.begin(), allowed_.end(), 0);
      for (const auto& comp : strongly_connected_components(sub)) {
        if (std::find(comp.begin(), comp.end(), s) == comp.end()) continue;
        if (comp.size() < 2) break;
        for (Node v : comp) allowed_[v] = 1;
      }
      if (!allowed_[s]) continue;
      start_ = s;
      for (Node v = 1; v <= n; ++v) {
        blocked_[v] = 0;
        block_map_[v].clear();
      }
      circuit(s);
    }
    return std::move(cycles_);
  }

 private:
  bool circuit(Node v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = 1;
    for (Node w : g_.successors(v)) {
      if (stopped_) break;
      if (!allowed_[w]) continue;
      if (w == start_) {
        cycles_.push_back(path_);
        found = true;
        if (stop_ && stop_(cycles_.back())) stopped_ = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (Node w : g_.successors(v)) {
        if (!allowed_[w]) continue;
        auto& b = block_map_[w];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(Node u) {
    blocked_[u] = 0;
    auto pending = std::move(block_map_[u]);
    block_map_[u].clear();
    for (Node w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  const Graph& g_;
  const CycleStop& stop_;
  Node start_ = 0;
  bool stopped_ = false;
  std::vector<char> allowed_;
  std::vector<char> blocked_;
  std::vector<std::vector<Node>> block_map_;
  std::vector<Node> path_;
  std::vector<Cycle> cycles_;
};

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, int node_limit,
                                           const CycleStop& stop) {
  if (g.order() > node_limit) {
    throw CycleLimitError(
        "simple-cycle enumeration refused: graph has " +
        std::to_string(g.order()) + " nodes, limit is " +
        std::to_string(node_limit) +
        " (cycle counts grow exponentially; raise the limit explicitly)");
  }
  return JohnsonCycles(g, stop).run();
}

std::optional<Cycle> has_even_simple_cycle(const Graph& g, int node_limit) {
  auto cycles = enumerate_simple_cycles(
      g, node_limit, [](const Cycle& c) { return c.size() % 2 == 0; });
  if (cycles.empty() || cycles.back().size() % 2 != 0) return std::nullopt;
  return std::move(cycles.back());
}

bool is_simple_cycle_graph(const Graph& g) {
  if (g.order() < 2) return false;
  for (Node v = 1; v <= g.order(); ++v) {
    if (g.successors(v).size() != 1 || g.predecessors(v).size() != 1) {
      return false;
    }
  }
  return is_strongly_connected(g);
}

}  // namespace ftcons

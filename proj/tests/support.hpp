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

// Test-only generators and brute-force oracles. Nothing here calls the
// algorithm it is used to check.

#ifndef FTCONS_TESTS_SUPPORT_HPP_
#define FTCONS_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <deque>
#include <random>
#include <utility>
#include <vector>

#include "ftcons/analysis.hpp"
#include "ftcons/graph.hpp"
#include "ftcons/rational.hpp"
#include "ftcons/ratlinalg.hpp"

namespace ftcons::testing {

using Edge = std::pair<Node, Node>;

inline std::vector<Edge> path_edges(int n) {
  std::vector<Edge> e;
  for (Node v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return e;
}

inline std::vector<Edge> star_edges(int n, Node center = 1) {
  std::vector<Edge> e;
  for (Node v = 1; v <= n; ++v) {
    if (v != center) e.emplace_back(center, v);
  }
  return e;
}

// Decodes a uniformly random Pruefer sequence.
inline std::vector<Edge> random_tree_edges(int n, Rng& rng) {
  if (n < 2) return {};
  if (n == 2) return {{1, 2}};
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n + 1, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (Node leaf = 1; leaf <= n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  std::vector<Node> rest;
  for (Node v = 1; v <= n; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  edges.emplace_back(rest[0], rest[1]);
  return edges;
}

// Random relabeling so that trees are not biased towards small ids near the
// root.
inline std::vector<Edge> shuffle_labels(std::vector<Edge> edges, int n,
                                        Rng& rng) {
  std::vector<Node> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u - 1];
    v = perm[v - 1];
  }
  return edges;
}

inline Graph bidirectional_graph(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.add_arc(u, v);
    g.add_arc(v, u);
  }
  return g;
}

inline Graph random_digraph(int n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (Node u = 1; u <= n; ++u) {
    for (Node v = 1; v <= n; ++v) {
      if (u != v && coin(rng)) g.add_arc(u, v);
    }
  }
  return g;
}

// Floyd-Warshall style transitive closure.
inline bool closure_strongly_connected(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(n + 1, 0));
  for (Node u = 1; u <= n; ++u) {
    reach[u][u] = 1;
    for (Node v = 1; v <= n; ++v) reach[u][v] |= g.has_arc(u, v);
  }
  for (Node k = 1; k <= n; ++k) {
    for (Node i = 1; i <= n; ++i) {
      for (Node j = 1; j <= n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  for (Node i = 1; i <= n; ++i) {
    for (Node j = 1; j <= n; ++j) {
      if (!reach[i][j]) return false;
    }
  }
  return true;
}

// Every simple cycle, by plain backtracking over paths whose first node is
// the smallest one. Exponential; intended for n <= 8.
inline std::vector<Cycle> brute_force_cycles(const Graph& g) {
  const int n = g.order();
  std::vector<Cycle> cycles;
  std::vector<char> on_path(n + 1, 0);
  Cycle path;
  auto extend = [&](auto&& self, Node start) -> void {
    const Node last = path.back();
    for (Node w = start; w <= n; ++w) {
      if (!g.has_arc(last, w)) continue;
      if (w == start) {
        cycles.push_back(path);
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        self(self, start);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (Node s = 1; s <= n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  return cycles;
}

inline bool brute_force_has_even_cycle(const Graph& g) {
  for (const auto& c : brute_force_cycles(g)) {
    if (c.size() % 2 == 0) return true;
  }
  return false;
}

// All-pairs BFS over tree edges.
inline int brute_force_diameter(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Node>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int best = 0;
  for (Node s = 1; s <= n; ++s) {
    std::vector<int> d(n + 1, -1);
    d[s] = 0;
    std::deque<Node> q{s};
    while (!q.empty()) {
      Node u = q.front();
      q.pop_front();
      for (Node v : adj[u]) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          best = std::max(best, d[v]);
          q.push_back(v);
        }
      }
    }
  }
  return best;
}

// Dense product through Eigen's own kernel, independent of the library's
// sparse-aware fold.
inline RationalMatrix dense_product(const MatrixSequence& seq) {
  RationalMatrix p = RationalMatrix::Identity(seq.order, seq.order);
  for (const auto& a : seq.matrices) {
    RationalMatrix next = a * p;
    p = next;
  }
  return p;
}

inline bool all_entries_equal(const RationalMatrix& m, const Rational& v) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != v) return false;
    }
  }
  return true;
}

inline Rational random_rational(Rng& rng, int magnitude = 6, int max_den = 6) {
  std::uniform_int_distribution<int> num(-magnitude, magnitude);
  std::uniform_int_distribution<int> den(1, max_den);
  return ratio(num(rng), den(rng));
}

inline RationalVector random_vector(int n, Rng& rng) {
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x(i) = random_rational(rng);
  return x;
}

// Strictly positive weights summing to one.
inline RationalVector random_weights(int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(1, 9);
  RationalVector w(n);
  Rational total(0);
  for (int i = 0; i < n; ++i) {
    w(i) = ratio(pick(rng), pick(rng));
    total += w(i);
  }
  for (int i = 0; i < n; ++i) w(i) /= total;
  return w;
}

// 9-node tree used by the layering fixture.
inline std::vector<Edge> layered_fixture_edges() {
  return {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {5, 8}, {6, 7}, {8, 9}};
}

// Directed 4-cycle 1 -> 4 -> 3 -> 2 -> 1 plus the pair 1 <-> 3.
inline Graph directed_fixture_graph() {
  const Arc arcs[] = {{2, 1}, {3, 2}, {4, 3}, {1, 4}, {1, 3}, {3, 1}};
  return Graph(4, arcs);
}

inline RationalMatrix halves(std::initializer_list<std::initializer_list<int>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  RationalMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = ratio(v, 2);
    ++i;
  }
  return m;
}

}  // namespace ftcons::testing

#endif  // FTCONS_TESTS_SUPPORT_HPP_

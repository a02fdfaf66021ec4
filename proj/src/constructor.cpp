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

#include "ftcons/constructor.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ftcons/errors.hpp"

namespace ftcons {
namespace {

Rational inverse_power_of_two(int k) {
  return Rational(Integer(1), Integer(1) << k);
}

std::string format_components(const std::vector<std::vector<Node>>& comps) {
  std::string text;
  for (const auto& comp : comps) {
    text += text.empty() ? "{" : ", {";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) text += ",";
      text += std::to_string(comp[i]);
    }
    text += "}";
  }
  return text;
}

SpanningTree require_spanning_tree(const Graph& g) {
  auto tree = find_spanning_tree(g);
  if (!tree) {
    auto comps = bidirectional_components(g);
    const std::string listing = format_components(comps);
    throw NoSpanningTreeError(
        "graph has no bidirectional spanning tree; components of the "
        "bidirectional subgraph: " + listing,
        std::move(comps));
  }
  return std::move(*tree);
}

Node smallest_leaf(const Tree& tree) {
  for (Node v = 1; v <= tree.ambient_order(); ++v) {
    if (tree.is_leaf(v)) return v;
  }
  throw ContractBreach("tree with more than one node has no leaf");
}

using GammaRule =
    std::function<Rational(Node leaf, const Tree& current_subtree)>;

std::vector<AbsorptionStage> plan(const SpanningTree& spanning,
                                  const GammaRule& gamma_for) {
  struct Removal {
    Node leaf;
    Node attach;
  };
  Tree work = spanning.tree;
  std::vector<Removal> removals;
  while (work.size() > 1) {
    const Node leaf = smallest_leaf(work);
    removals.push_back({leaf, work.neighbors(leaf).front()});
    work.remove_leaf(leaf);
  }

  std::vector<AbsorptionStage> stages;
  stages.reserve(removals.size());
  Tree current = work;
  std::size_t next_step = 0;
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    const Rational gamma = gamma_for(it->leaf, current);
    current.add_leaf(it->leaf, it->attach);
    AbsorptionStage stage{it->leaf, current, layer_decompose(current, it->leaf),
                          gamma, next_step,
                          static_cast<std::size_t>(tree_diameter(current))};
    next_step += stage.step_count;
    stages.push_back(std::move(stage));
  }
  return stages;
}

MatrixSequence emit(const std::vector<AbsorptionStage>& stages, int n) {
  MatrixSequence seq{n, {}};
  for (const auto& stage : stages) {
    auto steps = absorption_steps(stage.tree, stage.layering, stage.gamma);
    for (auto& m : steps.matrices) seq.matrices.push_back(std::move(m));
  }
  return seq;
}

void check_layering_matches(const Tree& stage, const TreeLayering& layering) {
  const int n = stage.ambient_order();
  if (static_cast<int>(layering.distance.size()) != n + 1 ||
      static_cast<int>(layering.parent.size()) != n + 1 ||
      static_cast<int>(layering.designated_child.size()) != n + 1) {
    throw PreconditionError("layering is sized for a different node count");
  }
  if (!stage.contains(layering.root) || layering.distance[layering.root] != 0) {
    throw PreconditionError("layering root " + std::to_string(layering.root) +
                            " is not a tree node at distance 0");
  }
  for (Node v = 1; v <= n; ++v) {
    const bool layered = layering.distance[v] >= 0;
    if (layered != stage.contains(v)) {
      throw PreconditionError("layering and tree disagree on node " +
                              std::to_string(v));
    }
    if (layered && v != layering.root) {
      const Node p = layering.parent[v];
      const auto nb = stage.neighbors(v);
      if (std::find(nb.begin(), nb.end(), p) == nb.end() ||
          layering.distance[p] != layering.distance[v] - 1) {
        throw PreconditionError("layering parent of node " +
                                std::to_string(v) + " is not a tree neighbor "
                                "one step closer to the root");
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- weights

WeightVector::WeightVector(RationalVector weights)
    : weights_(std::move(weights)) {
  if (weights_.size() == 0) throw PreconditionError("empty weight vector");
  Rational sum(0);
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (weights_(i) <= 0) {
      throw PreconditionError("weight of node " + std::to_string(i + 1) +
                              " is " + to_string(weights_(i)) +
                              "; weights must be strictly positive");
    }
    sum += weights_(i);
  }
  if (sum != 1) {
    throw PreconditionError("weights sum to " + to_string(sum) +
                            ", expected exactly 1");
  }
}

WeightVector WeightVector::uniform(Eigen::Index n) {
  return WeightVector(RationalVector::Constant(n, ratio(1, n)));
}

// ---------------------------------------------------------------- schedule

std::optional<Rational> CorrectionSchedule::target(Node v, int step) const {
  if (v < 1 || v >= static_cast<Node>(layering.distance.size())) {
    return std::nullopt;
  }
  const int k = layering.distance[v];
  if (k < 0) return std::nullopt;
  if (v == layering.root) return step == 0 ? Rational(1) : Rational(0);
  if (step < k) return Rational(-gamma);
  const auto leaves = layering.leaves_at(k);
  const bool is_leaf = std::binary_search(leaves.begin(), leaves.end(), v);
  if (step == k && !is_leaf) return inverse_power_of_two(k);
  return Rational(0);
}

MatrixSequence absorption_steps(const Tree& stage, const TreeLayering& layering,
                                const Rational& gamma) {
  if (gamma <= 0) {
    throw PreconditionError("gamma must be positive, got " + to_string(gamma));
  }
  check_layering_matches(stage, layering);

  const int n = stage.ambient_order();
  const int steps = tree_diameter(stage);
  MatrixSequence seq{n, {}};
  seq.matrices.reserve(steps);
  for (int k = 1; k <= steps; ++k) {
    RationalMatrix a = identity_matrix(n);
    // Value held by V_{k-1} before this step.
    const Rational upper = inverse_power_of_two(k - 1);
    const Rational spread = upper + gamma;

    auto set_row = [&a](Node i, Node other, const Rational& self) {
      a(i - 1, i - 1) = self;
      a(i - 1, other - 1) = 1 - self;
    };
    for (Node i : layering.inner_at(k)) {  // -gamma -> 1/2^k
      set_row(i, layering.parent[i], (upper / 2) / spread);
    }
    for (Node i : layering.leaves_at(k)) {  // -gamma -> 0
      set_row(i, layering.parent[i], upper / spread);
    }
    for (Node i : layering.inner_at(k - 1)) {  // 1/2^(k-1) -> 0
      const Node child = layering.designated_child[i];
      if (child == 0) {
        throw ContractBreach("non-leaf node " + std::to_string(i) +
                             " at distance " + std::to_string(k - 1) +
                             " has no neighbor farther from the root");
      }
      set_row(i, child, gamma / spread);
    }
    seq.matrices.push_back(std::move(a));
  }
  return seq;
}

std::vector<AbsorptionStage> absorption_plan(const SpanningTree& tree,
                                             const WeightVector& weights) {
  if (weights.size() != tree.tree.ambient_order()) {
    throw PreconditionError(
        "weight vector has " + std::to_string(weights.size()) +
        " entries for a graph of " +
        std::to_string(tree.tree.ambient_order()) + " nodes");
  }
  return plan(tree, [&weights](Node leaf, const Tree& current) {
    Rational subtree_weight(0);
    for (Node v : current.nodes()) subtree_weight += weights.of(v);
    return Rational(weights.of(leaf) / subtree_weight);
  });
}

MatrixSequence construct_average_sequence(const Graph& g) {
  const SpanningTree tree = require_spanning_tree(g);
  const auto stages = plan(tree, [](Node, const Tree& current) {
    return ratio(1, current.size());
  });
  return emit(stages, g.order());
}

MatrixSequence construct_weighted_sequence(const Graph& g,
                                           const WeightVector& weights) {
  const SpanningTree tree = require_spanning_tree(g);
  return emit(absorption_plan(tree, weights), g.order());
}

ScheduleCheck verify_schedule(const MatrixSequence& suffix,
                              const TreeLayering& layering,
                              const Rational& gamma) {
  const int n = static_cast<int>(layering.distance.size()) - 1;
  if (suffix.order != n) {
    throw DimensionError("suffix of order " + std::to_string(suffix.order) +
                         " checked against a layering of " +
                         std::to_string(n) + " nodes");
  }
  const CorrectionSchedule schedule{layering, gamma};
  RationalVector x = RationalVector::Zero(n);
  for (Node v = 1; v <= n; ++v) {
    if (auto value = schedule.target(v, 0)) x(v - 1) = *value;
  }

  auto compare = [&](int step, int planned_step) -> ScheduleCheck {
    for (Node v = 1; v <= n; ++v) {
      const Rational expected =
          schedule.target(v, planned_step).value_or(Rational(0));
      if (x(v - 1) != expected) {
        return {ScheduleMismatch{v, step, expected, x(v - 1)}};
      }
    }
    return {};
  };

  const int steps = static_cast<int>(suffix.size());
  for (int t = 1; t <= steps; ++t) {
    apply_left(suffix.matrices[t - 1], x);
    if (auto check = compare(t, t); !check) return check;
  }
  // The suffix must also run long enough to clear every layer.
  return compare(steps, std::max(steps, layering.eccentricity()));
}

}  // namespace ftcons

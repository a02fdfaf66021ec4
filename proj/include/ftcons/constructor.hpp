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

#ifndef FTCONS_CONSTRUCTOR_HPP_
#define FTCONS_CONSTRUCTOR_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ftcons/graph.hpp"
#include "ftcons/rational.hpp"
#include "ftcons/ratlinalg.hpp"

namespace ftcons {

// Strictly positive weights summing exactly to one.
class WeightVector {
 public:
  // Throws PreconditionError on a nonpositive entry or a sum other than 1.
  explicit WeightVector(RationalVector weights);
  static WeightVector uniform(Eigen::Index n);

  const RationalVector& values() const noexcept { return weights_; }
  Eigen::Index size() const noexcept { return weights_.size(); }
  const Rational& of(Node v) const { return weights_(v - 1); }

 private:
  RationalVector weights_;
};

// Planned trajectory of the correction vector when leaf v0 is absorbed into
// a subtree whose nodes all hold -gamma:
//   v0 (step 0): 1, then 0
//   node in V_k: -gamma before step k, 1/2^k at step k, 0 afterwards
//   node in L_k: -gamma before step k, 0 from step k on
// Nodes outside the layering keep their value.
struct CorrectionSchedule {
  TreeLayering layering;
  Rational gamma;

  // Planned value of `v` after `step` matrices, or nullopt for nodes outside
  // the layering.
  std::optional<Rational> target(Node v, int step) const;
};

// One leaf re-attachment of the construction.
struct AbsorptionStage {
  Node leaf = 0;
  Tree tree;  // current subtree plus `leaf`
  TreeLayering layering;
  Rational gamma;
  std::size_t first_step = 0;  // index into the emitted sequence
  std::size_t step_count = 0;
};

// Matrices (over all ambient nodes) that drive the canonical correction
// vector (v0 = 1, rest of `stage` = -gamma) to zero. Emits tree_diameter(stage)
// matrices; rows of nodes outside `stage` are identity rows.
MatrixSequence absorption_steps(const Tree& stage, const TreeLayering& layering,
                                const Rational& gamma);

// Leaf-absorption schedule for a spanning tree: the smallest-id leaf is
// peeled repeatedly, then leaves are re-attached in reverse order. gamma for
// a stage is w(leaf) / sum of w over the current subtree.
std::vector<AbsorptionStage> absorption_plan(const SpanningTree& tree,
                                             const WeightVector& weights);

// Sequence whose product is exactly (1/n) 1 1^T. Throws NoSpanningTreeError
// when the bidirectional subgraph of g is disconnected.
MatrixSequence construct_average_sequence(const Graph& g);

// Sequence whose product is exactly 1 w^T.
MatrixSequence construct_weighted_sequence(const Graph& g,
                                           const WeightVector& weights);

struct ScheduleMismatch {
  Node node = 0;
  int step = 0;
  Rational expected;
  Rational actual;
};

struct ScheduleCheck {
  std::optional<ScheduleMismatch> mismatch;
  explicit operator bool() const noexcept { return !mismatch.has_value(); }
};

// Runs the canonical correction vector through `suffix` and compares every
// intermediate state against CorrectionSchedule. Nodes outside the layering
// start at 0 and must stay there.
ScheduleCheck verify_schedule(const MatrixSequence& suffix,
                              const TreeLayering& layering,
                              const Rational& gamma);

}  // namespace ftcons

#endif  // FTCONS_CONSTRUCTOR_HPP_

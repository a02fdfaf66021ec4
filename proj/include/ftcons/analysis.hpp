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

#ifndef FTCONS_ANALYSIS_HPP_
#define FTCONS_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ftcons/graph.hpp"
#include "ftcons/rational.hpp"
#include "ftcons/ratlinalg.hpp"

namespace ftcons {

using Rng = std::mt19937_64;

enum class FeasibilityStatus { kFeasible, kInfeasible, kUnknown };

std::string to_string(FeasibilityStatus status);

struct FeasibilityReasons {
  bool strongly_connected = false;
  std::optional<Cycle> even_simple_cycle;
  bool bidirectional_spanning_tree = false;
  bool is_pure_simple_cycle = false;
};

struct FeasibilityVerdict {
  FeasibilityStatus status = FeasibilityStatus::kUnknown;
  FeasibilityReasons reasons;
};

// Classifies g for finite-time consensus with positive-diagonal stochastic
// matrices:
//   Feasible    a bidirectional spanning tree exists (explicit construction)
//   Infeasible  not strongly connected, no even simple cycle, or g is a
//               single directed cycle on n >= 3 nodes
//   Unknown     none of the above
// The spanning-tree test is applied first: a single node, and the 2-cycle
// formed by one bidirectional edge, are both trivially feasible.
FeasibilityVerdict assess_feasibility(const Graph& g,
                                      int cycle_node_limit =
                                          kDefaultCycleNodeLimit);

enum class Side { kAbove, kBelow };

// Alternating walk through the values x(T-1) around the consensus value.
// visited[k+1] influences visited[k] through the last matrix, so arc
// (visited[k+1], visited[k]) is in the graph. `cycle` lists the repeated part
// of the walk in arc direction (cycle[i] -> cycle[i+1] is an arc).
struct SignWalk {
  Rational xstar;
  std::vector<Node> visited;
  std::vector<Side> sides;  // side of x_{visited[k]}(T-1) relative to xstar
  Cycle cycle;
};

// Follows strictly opposite-side influencers of A_T from a node that reaches
// the consensus value only at the last step. nullopt when x(T-1) is already
// constant. Throws PreconditionError when seq is not a valid consensus run
// from x0 on g.
std::optional<SignWalk> extract_even_cycle_certificate(
    const Graph& g, const MatrixSequence& seq, const RationalVector& x0);

// For A consistent with the even directed cycle C_n and x with a cyclic
// consecutive pair of equal weak sign, reports whether y = A x again has such
// a pair. Throws PreconditionError when the premises fail.
bool check_sign_lemma(const RationalMatrix& a, const RationalVector& x,
                      int n_even);

// True iff some cyclically consecutive pair (i, i+1) is both >= 0 or both
// <= 0.
bool has_same_sign_pair(const RationalVector& x);

struct PartitionTrace {
  std::vector<Node> v1;
  std::vector<Node> v2;
  std::vector<Rational> h;       // h(0..T): min of x over V1
  std::vector<Rational> a_star;  // a_star[t-1] = min diagonal of A_t over V1
  std::vector<Rational> bound;   // bound[t] = prod_{s <= t} a_s*, bound[0] = 1
  bool inequality_holds = true;  // h(t) >= a_t* h(t-1) for every t
  bool v2_stays_zero = true;
  std::optional<int> first_violation;  // step t at which a check failed
};

// Simulates x0 = 1_{V1} through seq and records the min-over-V1 lower bound.
// Throws PreconditionError when some arc enters V1 from outside, V1 is empty
// or everything, x0 is not the indicator of V1, or seq is not consistent
// positive-diagonal stochastic on g.
PartitionTrace partition_bound_trace(const Graph& g,
                                     const std::vector<Node>& v1,
                                     const MatrixSequence& seq,
                                     const RationalVector& x0);

// Random stochastic matrix consistent with g with diagonal >= min_diagonal.
// Each permitted off-diagonal entry is used with probability 1/2.
RationalMatrix random_consistent_matrix(
    const Graph& g, Rng& rng, const Rational& min_diagonal = ratio(1, 10));

struct CycleEvidenceReport {
  int cycle_length = 0;
  int trials = 0;
  int max_length = 0;
  std::uint64_t seed = 0;
  int rank_one_products = 0;
  long lemma_checks = 0;
  int lemma_violations = 0;
  std::optional<int> first_rank_one_trial;
  std::optional<int> first_lemma_violation_trial;
  std::string note;
};

// Random positive-diagonal sequences on C_n: counts rank-one products and
// re-checks the same-sign-pair property along each trajectory from
// (1, 1, 0, ..., 0) shifted by x_1(T). Supporting evidence only.
CycleEvidenceReport cycle_impossibility_evidence(int n_even, int trials,
                                                 int max_length,
                                                 std::uint64_t seed);

// Per-trial engine derived from (seed, trial) so results do not depend on the
// order in which trials run.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

}  // namespace ftcons

#endif  // FTCONS_ANALYSIS_HPP_

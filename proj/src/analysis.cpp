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

#include "ftcons/analysis.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ftcons/errors.hpp"

namespace ftcons {
namespace {

// Stochastic, positive diagonal and consistent with g; throws otherwise.
void require_valid_sequence(const Graph& g, const MatrixSequence& seq) {
  if (seq.order != g.order()) {
    throw PreconditionError("sequence order " + std::to_string(seq.order) +
                            " does not match graph order " +
                            std::to_string(g.order()));
  }
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const auto& a = seq.matrices[t];
    const std::string tag = "matrix " + std::to_string(t + 1);
    if (a.rows() != g.order() || a.cols() != g.order()) {
      throw PreconditionError(tag + " has the wrong dimensions");
    }
    if (!is_stochastic(a)) throw PreconditionError(tag + " is not stochastic");
    if (!has_positive_diagonal(a)) {
      throw PreconditionError(tag + " has a nonpositive diagonal entry");
    }
    if (!is_consistent(a, g)) {
      throw PreconditionError(tag + " is not consistent with the graph");
    }
  }
}

int sign_of(const Rational& v) { return v.sign(); }

}  // namespace

std::string to_string(FeasibilityStatus status) {
  switch (status) {
    case FeasibilityStatus::kFeasible:
      return "Feasible";
    case FeasibilityStatus::kInfeasible:
      return "Infeasible";
    case FeasibilityStatus::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

FeasibilityVerdict assess_feasibility(const Graph& g, int cycle_node_limit) {
  FeasibilityVerdict verdict;
  auto& r = verdict.reasons;
  r.strongly_connected = is_strongly_connected(g);
  r.even_simple_cycle = has_even_simple_cycle(g, cycle_node_limit);
  r.bidirectional_spanning_tree = find_spanning_tree(g).has_value();
  r.is_pure_simple_cycle = is_simple_cycle_graph(g);

  if (r.bidirectional_spanning_tree) {
    verdict.status = FeasibilityStatus::kFeasible;
  } else if (!r.strongly_connected || !r.even_simple_cycle ||
             (r.is_pure_simple_cycle && g.order() >= 3)) {
    verdict.status = FeasibilityStatus::kInfeasible;
  } else {
    verdict.status = FeasibilityStatus::kUnknown;
  }
  return verdict;
}

// ---------------------------------------------------------------- sign walk

std::optional<SignWalk> extract_even_cycle_certificate(
    const Graph& g, const MatrixSequence& seq, const RationalVector& x0) {
  require_valid_sequence(g, seq);
  if (x0.size() != g.order()) {
    throw PreconditionError("initial vector has " + std::to_string(x0.size()) +
                            " entries for a graph of " +
                            std::to_string(g.order()) + " nodes");
  }
  if (seq.empty()) {
    if (is_constant_vector(x0)) return std::nullopt;
    throw PreconditionError("empty sequence does not reach consensus");
  }

  RationalVector before_last = x0;
  for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
    apply_left(seq.matrices[t], before_last);
  }
  const RationalMatrix& last = seq.matrices.back();
  RationalVector final_state = before_last;
  apply_left(last, final_state);
  if (!is_constant_vector(final_state)) {
    throw PreconditionError("sequence does not reach consensus from x0");
  }
  if (is_constant_vector(before_last)) return std::nullopt;

  SignWalk walk;
  walk.xstar = final_state(0);
  auto side_of = [&](Node v) -> int {
    return sign_of(Rational(before_last(v - 1) - walk.xstar));
  };

  const int n = g.order();
  Node current = 1;
  while (side_of(current) == 0) ++current;

  std::unordered_map<Node, std::size_t> first_seen;
  while (true) {
    const int side = side_of(current);
    first_seen.emplace(current, walk.visited.size());
    walk.visited.push_back(current);
    walk.sides.push_back(side > 0 ? Side::kAbove : Side::kBelow);

    Node next = 0;
    for (Node j = 1; j <= n; ++j) {
      if (j != current && last(current - 1, j - 1) > 0 &&
          side_of(j) == -side) {
        next = j;
        break;
      }
    }
    if (next == 0) {
      throw ContractBreach("node " + std::to_string(current) +
                           " reaches the consensus value without an "
                           "opposite-side influencer");
    }
    if (auto it = first_seen.find(next); it != first_seen.end()) {
      const std::size_t a = it->second;
      const std::size_t b = walk.visited.size();
      walk.visited.push_back(next);
      walk.sides.push_back(walk.sides[a]);
      if ((b - a) % 2 != 0) {
        throw ContractBreach("extracted cycle has odd length");
      }
      walk.cycle.push_back(next);
      for (std::size_t k = b - 1; k > a; --k) {
        walk.cycle.push_back(walk.visited[k]);
      }
      return walk;
    }
    current = next;
  }
}

// ---------------------------------------------------------------- Lemma

bool has_same_sign_pair(const RationalVector& x) {
  const Eigen::Index n = x.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const int a = x(i).sign();
    const int b = x((i + 1) % n).sign();
    if ((a >= 0 && b >= 0) || (a <= 0 && b <= 0)) return true;
  }
  return false;
}

bool check_sign_lemma(const RationalMatrix& a, const RationalVector& x,
                      int n_even) {
  if (n_even < 2 || n_even % 2 != 0) {
    throw PreconditionError("cycle length " + std::to_string(n_even) +
                            " is not even");
  }
  if (a.rows() != n_even || a.cols() != n_even || x.size() != n_even) {
    throw PreconditionError("operands do not match cycle length " +
                            std::to_string(n_even));
  }
  if (!is_stochastic(a) || !has_positive_diagonal(a)) {
    throw PreconditionError(
        "matrix is not stochastic with positive diagonal");
  }
  if (!is_consistent(a, directed_cycle(n_even))) {
    throw PreconditionError("matrix is not consistent with the directed cycle");
  }
  if (!has_same_sign_pair(x)) {
    throw PreconditionError("x has no consecutive pair of equal sign");
  }
  RationalVector y = x;
  apply_left(a, y);
  return has_same_sign_pair(y);
}

// ---------------------------------------------------------------- partition

PartitionTrace partition_bound_trace(const Graph& g,
                                     const std::vector<Node>& v1,
                                     const MatrixSequence& seq,
                                     const RationalVector& x0) {
  const int n = g.order();
  std::vector<char> in_v1(n + 1, 0);
  for (Node v : v1) {
    if (v < 1 || v > n) {
      throw PreconditionError("partition node " + std::to_string(v) +
                              " outside 1.." + std::to_string(n));
    }
    in_v1[v] = 1;
  }
  PartitionTrace trace;
  for (Node v = 1; v <= n; ++v) {
    (in_v1[v] ? trace.v1 : trace.v2).push_back(v);
  }
  if (trace.v1.empty() || trace.v2.empty()) {
    throw PreconditionError("partition must split the nodes into two "
                            "nonempty sets");
  }
  for (const Arc& arc : g.arcs()) {
    if (in_v1[arc.from] && !in_v1[arc.to]) {
      throw PreconditionError(
          "arc (" + std::to_string(arc.from) + "," + std::to_string(arc.to) +
          ") lets V1 influence V2; the complement of V1 must be closed");
    }
  }
  require_valid_sequence(g, seq);
  if (x0.size() != n) {
    throw PreconditionError("initial vector has wrong length");
  }
  for (Node v = 1; v <= n; ++v) {
    if (x0(v - 1) != (in_v1[v] ? 1 : 0)) {
      throw PreconditionError("initial vector must be 1 on V1 and 0 "
                              "elsewhere");
    }
  }

  auto min_over_v1 = [&](const RationalVector& x) {
    Rational m = x(trace.v1.front() - 1);
    for (Node v : trace.v1) m = std::min(m, Rational(x(v - 1)));
    return m;
  };

  RationalVector x = x0;
  trace.h.push_back(min_over_v1(x));
  trace.bound.push_back(Rational(1));
  for (std::size_t t = 1; t <= seq.size(); ++t) {
    const auto& a = seq.matrices[t - 1];
    Rational a_star = a(trace.v1.front() - 1, trace.v1.front() - 1);
    for (Node v : trace.v1) a_star = std::min(a_star, Rational(a(v - 1, v - 1)));
    apply_left(a, x);
    const Rational h = min_over_v1(x);
    const Rational bound = trace.bound.back() * a_star;
    const bool ok = h >= a_star * trace.h.back() && h >= bound && bound > 0;
    bool zero = true;
    for (Node v : trace.v2) zero = zero && x(v - 1) == 0;
    if (!ok) trace.inequality_holds = false;
    if (!zero) trace.v2_stays_zero = false;
    if ((!ok || !zero) && !trace.first_violation) {
      trace.first_violation = static_cast<int>(t);
    }
    trace.a_star.push_back(a_star);
    trace.h.push_back(h);
    trace.bound.push_back(bound);
  }
  return trace;
}

// ---------------------------------------------------------------- random

RationalMatrix random_consistent_matrix(const Graph& g, Rng& rng,
                                        const Rational& min_diagonal) {
  if (min_diagonal <= 0 || min_diagonal >= 1) {
    throw PreconditionError("min_diagonal must lie in (0,1), got " +
                            to_string(min_diagonal));
  }
  const int n = g.order();
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> weight(1, 8);
  std::uniform_int_distribution<int> share(0, 15);

  RationalMatrix a = identity_matrix(n);
  for (Node i = 1; i <= n; ++i) {
    std::vector<std::pair<Node, int>> picked;
    int total = 0;
    for (Node j : g.predecessors(i)) {
      if (!coin(rng)) continue;
      picked.emplace_back(j, weight(rng));
      total += picked.back().second;
    }
    if (picked.empty()) continue;
    const Rational diag =
        min_diagonal + (1 - min_diagonal) * ratio(share(rng), 16);
    a(i - 1, i - 1) = diag;
    for (auto [j, w] : picked) {
      a(i - 1, j - 1) = (1 - diag) * ratio(w, total);
    }
  }
  return a;
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

// ---------------------------------------------------------------- evidence

CycleEvidenceReport cycle_impossibility_evidence(int n_even, int trials,
                                                 int max_length,
                                                 std::uint64_t seed) {
  if (n_even < 4 || n_even % 2 != 0) {
    throw PreconditionError("cycle length must be even and at least 4, got " +
                            std::to_string(n_even));
  }
  if (trials < 0 || max_length < 1) {
    throw PreconditionError("trials must be >= 0 and max_length >= 1");
  }
  CycleEvidenceReport report;
  report.cycle_length = n_even;
  report.trials = trials;
  report.max_length = max_length;
  report.seed = seed;
  report.note =
      "randomized evidence, not a proof: sampled sequences can only fail to "
      "find a counterexample to the impossibility of finite-time consensus "
      "on a directed cycle";

  const Graph cycle = directed_cycle(n_even);
  RationalVector x0 = RationalVector::Zero(n_even);
  x0(0) = 1;
  x0(1) = 1;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = trial_rng(seed, static_cast<std::uint64_t>(trial));
    const int length = std::uniform_int_distribution<int>(1, max_length)(rng);
    MatrixSequence seq{n_even, {}};
    std::vector<RationalVector> states{x0};
    for (int t = 0; t < length; ++t) {
      seq.matrices.push_back(random_consistent_matrix(cycle, rng));
      states.push_back(states.back());
      apply_left(seq.matrices.back(), states.back());
    }
    if (is_rank_one_stochastic(sequence_product(seq))) {
      ++report.rank_one_products;
      if (!report.first_rank_one_trial) report.first_rank_one_trial = trial;
    }
    // Would-be consensus value: where node 1 ends up.
    const Rational shift = states.back()(0);
    for (const auto& x : states) {
      ++report.lemma_checks;
      RationalVector shifted = x.array() - shift;
      if (!has_same_sign_pair(shifted)) {
        ++report.lemma_violations;
        if (!report.first_lemma_violation_trial) {
          report.first_lemma_violation_trial = trial;
        }
      }
    }
  }
  return report;
}

}  // namespace ftcons

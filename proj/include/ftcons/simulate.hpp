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

#ifndef FTCONS_SIMULATE_HPP_
#define FTCONS_SIMULATE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ftcons/analysis.hpp"
#include "ftcons/graph.hpp"
#include "ftcons/rational.hpp"
#include "ftcons/ratlinalg.hpp"

namespace ftcons {

// States x(0), ..., x(T) of x(t) = A_t x(t-1).
template <typename Scalar>
struct Trajectory {
  std::vector<Vector<Scalar>> states;
  std::optional<std::size_t> consensus_at;  // earliest t with constant state
};

// Exact rational iteration; consensus means literal equality of all entries.
Trajectory<Rational> simulate_exact(const MatrixSequence& seq,
                                    const RationalVector& x0);

// Double-precision iteration for inspection only. Consensus is flagged when
// max - min < tolerance.
Trajectory<double> simulate_approx(const MatrixSequence& seq,
                                   const RationalVector& x0,
                                   double tolerance = 1e-9);

enum class Goal { kConsensus, kAverage };

std::string to_string(Goal goal);

struct CheckFailure {
  std::string check;                   // dimensions, stochastic, ...
  std::optional<std::size_t> matrix;   // 1-based position in the sequence
  std::optional<Eigen::Index> row;     // 1-based
  std::optional<Eigen::Index> column;  // 1-based
  std::string detail;
};

struct VerificationReport {
  Goal goal = Goal::kAverage;
  std::size_t length = 0;
  std::vector<CheckFailure> failures;
  std::optional<RationalMatrix> product;  // absent when dimensions disagree

  bool passed() const noexcept { return failures.empty(); }
};

// Checks every matrix (stochastic, positive diagonal, consistent with g) and
// then the product: rank-one stochastic for kConsensus, (1/n) 1 1^T for
// kAverage. Failures are collected, never thrown.
VerificationReport verify_sequence(const Graph& g, const MatrixSequence& seq,
                                   Goal goal);

// Directed 4-cycle plus one bidirectional edge {1,3}, with a four-matrix
// sequence (entries in halves) whose product is (1/4) 1 1^T.
struct ExampleFixture {
  Graph graph;
  MatrixSequence sequence;
};

ExampleFixture example_fixture();

struct DemoReport {
  VerificationReport verification;
  FeasibilityVerdict verdict;
  Trajectory<Rational> trajectory;
  std::optional<SignWalk> certificate;
  bool passed = false;
};

// Verifies the fixture, classifies its graph, simulates from (1, 0, 0, 0) and
// extracts the even-cycle certificate.
DemoReport demo_example();

}  // namespace ftcons

#endif  // FTCONS_SIMULATE_HPP_

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

#include "ftcons/simulate.hpp"

#include <algorithm>
#include <array>

#include "ftcons/errors.hpp"

namespace ftcons {
namespace {

void check_dimensions(const MatrixSequence& seq, Eigen::Index n) {
  if (seq.order != n) {
    throw DimensionError("initial vector has " + std::to_string(n) +
                         " entries for a sequence of order " +
                         std::to_string(seq.order));
  }
}

}  // namespace

Trajectory<Rational> simulate_exact(const MatrixSequence& seq,
                                    const RationalVector& x0) {
  check_dimensions(seq, x0.size());
  Trajectory<Rational> result;
  result.states.push_back(x0);
  if (is_constant_vector(x0)) result.consensus_at = 0;
  for (const auto& a : seq.matrices) {
    RationalVector next = result.states.back();
    apply_left(a, next);
    result.states.push_back(std::move(next));
    if (!result.consensus_at && is_constant_vector(result.states.back())) {
      result.consensus_at = result.states.size() - 1;
    }
  }
  return result;
}

Trajectory<double> simulate_approx(const MatrixSequence& seq,
                                   const RationalVector& x0,
                                   double tolerance) {
  check_dimensions(seq, x0.size());
  auto converged = [tolerance](const Vector<double>& x) {
    return x.size() == 0 || x.maxCoeff() - x.minCoeff() < tolerance;
  };
  Trajectory<double> result;
  result.states.push_back(x0.unaryExpr(&to_double));
  if (converged(result.states.back())) result.consensus_at = 0;
  for (const auto& a : seq.matrices) {
    const Matrix<double> ad = a.unaryExpr(&to_double);
    result.states.push_back(ad * result.states.back());
    if (!result.consensus_at && converged(result.states.back())) {
      result.consensus_at = result.states.size() - 1;
    }
  }
  return result;
}

std::string to_string(Goal goal) {
  return goal == Goal::kAverage ? "average" : "consensus";
}

VerificationReport verify_sequence(const Graph& g, const MatrixSequence& seq,
                                   Goal goal) {
  VerificationReport report;
  report.goal = goal;
  report.length = seq.size();
  const Eigen::Index n = g.order();

  if (seq.order != n) {
    report.failures.push_back({"dimensions", std::nullopt, std::nullopt,
                               std::nullopt,
                               "sequence order " + std::to_string(seq.order) +
                                   " differs from graph order " +
                                   std::to_string(n)});
    return report;
  }
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const auto& a = seq.matrices[t];
    if (a.rows() != n || a.cols() != n) {
      report.failures.push_back(
          {"dimensions", t + 1, std::nullopt, std::nullopt,
           "matrix is " + std::to_string(a.rows()) + "x" +
               std::to_string(a.cols())});
      continue;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      Rational sum(0);
      for (Eigen::Index j = 0; j < n; ++j) {
        const Rational& v = a(i, j);
        sum += v;
        if (v < 0) {
          report.failures.push_back({"stochastic", t + 1, i + 1, j + 1,
                                     "negative entry " + to_string(v)});
        }
        if (i != j && v > 0 &&
            !g.has_arc(static_cast<Node>(j + 1), static_cast<Node>(i + 1))) {
          report.failures.push_back(
              {"consistent", t + 1, i + 1, j + 1,
               "positive entry " + to_string(v) + " needs arc (" +
                   std::to_string(j + 1) + "," + std::to_string(i + 1) + ")"});
        }
      }
      if (sum != 1) {
        report.failures.push_back({"stochastic", t + 1, i + 1, std::nullopt,
                                   "row sums to " + to_string(sum)});
      }
      if (!(a(i, i) > 0)) {
        report.failures.push_back({"positive_diagonal", t + 1, i + 1, i + 1,
                                   "diagonal entry " + to_string(a(i, i))});
      }
    }
  }
  if (std::any_of(report.failures.begin(), report.failures.end(),
                  [](const CheckFailure& f) { return f.check == "dimensions"; })) {
    return report;
  }

  report.product = sequence_product(seq);
  const RationalMatrix& p = *report.product;
  if (goal == Goal::kAverage) {
    const Rational target = ratio(1, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (p(i, j) != target) {
          report.failures.push_back(
              {"product_average", std::nullopt, i + 1, j + 1,
               "product entry is " + to_string(p(i, j)) + ", expected " +
                   to_string(target)});
          return report;
        }
      }
    }
  } else if (!is_rank_one_stochastic(p)) {
    std::optional<Eigen::Index> row;
    for (Eigen::Index i = 1; i < n && !row; ++i) {
      if (p.row(i) != p.row(0)) row = i + 1;
    }
    report.failures.push_back(
        {"product_rank_one", std::nullopt, row, std::nullopt,
         row ? "product row " + std::to_string(*row) + " differs from row 1"
             : "product is not stochastic"});
  }
  return report;
}

ExampleFixture example_fixture() {
  const std::array<Arc, 6> arcs{{{2, 1}, {3, 2}, {4, 3}, {1, 4}, {1, 3}, {3, 1}}};
  ExampleFixture fixture{Graph(4, arcs), MatrixSequence{4, {}}};

  const Rational h = ratio(1, 2);
  const Rational o(0);
  RationalMatrix odd(4, 4);  // A_1 = A_3
  odd << h, h, o, o,
         o, h, h, o,
         o, o, h, h,
         h, o, o, h;
  // A_2 = A_4. Node 1 listens to node 3 across the bidirectional edge; with
  // row 1 = (1/2, 1/2, 0, 0) instead, the product is not even rank-one.
  RationalMatrix even(4, 4);
  even << h, o, h, o,
          o, h, h, o,
          h, o, h, o,
          h, o, o, h;
  fixture.sequence.matrices = {odd, even, odd, even};
  return fixture;
}

DemoReport demo_example() {
  const ExampleFixture fixture = example_fixture();
  DemoReport report;
  report.verification =
      verify_sequence(fixture.graph, fixture.sequence, Goal::kAverage);
  report.verdict = assess_feasibility(fixture.graph);

  RationalVector x0 = RationalVector::Zero(4);
  x0(0) = 1;
  report.trajectory = simulate_exact(fixture.sequence, x0);
  report.certificate =
      extract_even_cycle_certificate(fixture.graph, fixture.sequence, x0);

  const auto& r = report.verdict.reasons;
  const RationalVector& last = report.trajectory.states.back();
  report.passed = report.verification.passed() &&
                  report.verdict.status == FeasibilityStatus::kUnknown &&
                  r.strongly_connected && r.even_simple_cycle.has_value() &&
                  !r.bidirectional_spanning_tree && !r.is_pure_simple_cycle &&
                  last == RationalVector::Constant(4, ratio(1, 4)) &&
                  report.certificate.has_value() &&
                  report.certificate->cycle.size() % 2 == 0;
  return report;
}

}  // namespace ftcons

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

#include "ftcons/errors.hpp"
#include "ftcons/graph.hpp"
#include "ftcons/rational.hpp"
#include "ftcons/ratlinalg.hpp"
#include "support.hpp"

namespace ftcons {
namespace {

using testing::directed_fixture_graph;
using testing::halves;

RationalMatrix fixture_a1() {
  return halves({{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}});
}

RationalMatrix fixture_a2() {
  return halves({{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}});
}

MatrixSequence fixture_sequence() {
  return {4, {fixture_a1(), fixture_a2(), fixture_a1(), fixture_a2()}};
}

TEST(RationalTest, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("2/4"), ratio(1, 2));
  EXPECT_EQ(parse_rational("-1/-2"), ratio(1, 2));
  EXPECT_EQ(parse_rational("3/-6"), ratio(-1, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(to_string(ratio(6, -4)), "-3/2");
  EXPECT_EQ(to_string(ratio(12, 4)), "3");
}

TEST(RationalTest, RejectsMalformed) {
  for (const char* bad : {"", "1/", "/2", "1.5", "a/b", "1/0", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), FormatError) << bad;
  }
}

TEST(RationalTest, ArbitraryPrecision) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x /= 3;
  EXPECT_EQ(to_string(x).size(), 1 + 1 + 96);  // "1/" + 3^200 has 96 digits
  for (int i = 0; i < 200; ++i) x *= 3;
  EXPECT_EQ(x, 1);
}

TEST(MatMulTest, IdentityIsNeutral) {
  Rng rng(3);
  RationalMatrix m(3, 3);
  for (Eigen::Index i = 0; i < 9; ++i) m(i) = testing::random_rational(rng);
  EXPECT_EQ(mat_mul(identity_matrix(3), m), m);
  EXPECT_EQ(mat_mul(m, identity_matrix(3)), m);
}

TEST(MatMulTest, FixtureProductIsStochastic) {
  EXPECT_TRUE(is_stochastic(mat_mul(fixture_a2(), fixture_a1())));
}

TEST(MatMulTest, AveragingMatrixIsIdempotent) {
  const RationalMatrix half = RationalMatrix::Constant(2, 2, ratio(1, 2));
  EXPECT_EQ(mat_mul(half, half), half);
}

TEST(MatMulTest, AgreesWithEigenProduct) {
  Rng rng(11);
  RationalMatrix a(4, 4), b(4, 4);
  for (Eigen::Index i = 0; i < 16; ++i) {
    a(i) = testing::random_rational(rng);
    b(i) = testing::random_rational(rng);
  }
  RationalMatrix expected = a * b;
  EXPECT_EQ(mat_mul(a, b), expected);
}

TEST(MatMulTest, DimensionMismatchNamesBoth) {
  try {
    mat_mul(identity_matrix(2), identity_matrix(3));
    FAIL() << "expected DimensionError";
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("2x2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("3x3"), std::string::npos);
  }
}

TEST(PredicateTest, Stochastic) {
  EXPECT_TRUE(is_stochastic(identity_matrix(3)));
  EXPECT_TRUE(is_stochastic(fixture_a1()));
  RationalMatrix m = identity_matrix(2);
  m(0, 1) = ratio(1, 2);  // row sums to 3/2
  EXPECT_FALSE(is_stochastic(m));
  RationalMatrix neg(2, 2);
  neg << ratio(3, 2), ratio(-1, 2), 0, 1;
  EXPECT_FALSE(is_stochastic(neg));
}

TEST(PredicateTest, PositiveDiagonal) {
  EXPECT_TRUE(has_positive_diagonal(identity_matrix(3)));
  EXPECT_TRUE(has_positive_diagonal(fixture_a2()));
  RationalMatrix perm(3, 3);
  perm << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  EXPECT_FALSE(has_positive_diagonal(perm));
}

TEST(PredicateTest, Consistency) {
  const Graph g = directed_fixture_graph();
  EXPECT_TRUE(is_consistent(identity_matrix(4), Graph(4)));
  EXPECT_TRUE(is_consistent(fixture_a1(), g));
  EXPECT_TRUE(is_consistent(fixture_a2(), g));
  // Entry (1,2) = 1/2 needs arc (2,1).
  const Arc without[] = {{3, 2}, {4, 3}, {1, 4}, {1, 3}, {3, 1}};
  EXPECT_FALSE(is_consistent(fixture_a1(), Graph(4, without)));
  EXPECT_FALSE(is_consistent(identity_matrix(3), g));  // wrong order
}

TEST(PredicateTest, RankOneAndAverage) {
  const RationalMatrix quarter = averaging_matrix(4);
  EXPECT_TRUE(is_rank_one_stochastic(quarter));
  EXPECT_TRUE(is_average_matrix(quarter));
  EXPECT_FALSE(is_rank_one_stochastic(identity_matrix(2)));

  RationalVector v(4);
  v << ratio(1, 2), ratio(1, 2), 0, 0;
  const RationalMatrix r = rank_one_matrix(v);
  EXPECT_TRUE(is_rank_one_stochastic(r));
  EXPECT_FALSE(is_average_matrix(r));

  const RationalMatrix p = sequence_product(fixture_sequence());
  EXPECT_TRUE(is_rank_one_stochastic(p));
  EXPECT_TRUE(is_average_matrix(p));
}

TEST(PredicateTest, PredicatesAcceptDoubleExpressions) {
  const Matrix<double> a = fixture_a1().unaryExpr(&to_double);
  EXPECT_TRUE(is_stochastic(a));
  EXPECT_TRUE(is_stochastic(0.5 * a + 0.5 * a.transpose()));
  EXPECT_TRUE(has_positive_diagonal(a.transpose()));
}

TEST(SequenceProductTest, Basics) {
  EXPECT_EQ(sequence_product(MatrixSequence{3, {}}), identity_matrix(3));
  EXPECT_EQ(sequence_product(fixture_sequence()), averaging_matrix(4));
  EXPECT_EQ(sequence_product(MatrixSequence{4, {fixture_a2()}}), fixture_a2());
}

TEST(SequenceProductTest, LaterMatricesMultiplyOnTheLeft) {
  const MatrixSequence seq{4, {fixture_a1(), fixture_a2()}};
  RationalMatrix expected = fixture_a2() * fixture_a1();
  EXPECT_EQ(sequence_product(seq), expected);
}

TEST(SequenceProductTest, MixedDimensionsRejected) {
  const MatrixSequence seq{3, {identity_matrix(3), identity_matrix(2)}};
  EXPECT_THROW(sequence_product(seq), DimensionError);
}

TEST(SequenceProductTest, PrintedVariantOfSecondMatrixFails) {
  // Row 1 of A_2 listening to node 2 instead of node 3.
  const RationalMatrix variant =
      halves({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}});
  const MatrixSequence seq{4, {fixture_a1(), variant, fixture_a1(), variant}};
  EXPECT_TRUE(is_consistent(variant, directed_fixture_graph()));
  EXPECT_FALSE(is_rank_one_stochastic(sequence_product(seq)));
}

// Random stochastic matrices of small order, as property-test input.
RationalMatrix random_stochastic(int n, Rng& rng) {
  Graph complete(n);
  for (Node u = 1; u <= n; ++u) {
    for (Node v = 1; v <= n; ++v) {
      if (u != v) complete.add_arc(u, v);
    }
  }
  return random_consistent_matrix(complete, rng);
}

TEST(RatlinalgPropertyTest, ClosureAssociativityIdempotence) {
  Rng rng(20260101);
  std::uniform_int_distribution<int> order(1, 6), length(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = order(rng);
    const RationalMatrix a = random_stochastic(n, rng);
    const RationalMatrix b = random_stochastic(n, rng);
    EXPECT_TRUE(is_stochastic(mat_mul(a, b)));

    MatrixSequence seq{n, {}};
    const int len = length(rng);
    for (int t = 0; t < len; ++t) seq.matrices.push_back(random_stochastic(n, rng));
    RationalMatrix left = identity_matrix(n);  // ((A_2 A_1) ...)
    for (const auto& m : seq.matrices) left = mat_mul(m, left);
    RationalMatrix right = identity_matrix(n);  // (A_T (A_{T-1} ...))
    for (auto it = seq.matrices.rbegin(); it != seq.matrices.rend(); ++it) {
      right = mat_mul(right, *it);
    }
    EXPECT_EQ(left, right);
    EXPECT_EQ(sequence_product(seq), left);

    RationalVector v = testing::random_weights(n, rng);
    const RationalMatrix r = rank_one_matrix(v);
    ASSERT_TRUE(is_rank_one_stochastic(r));
    EXPECT_EQ(mat_mul(r, r), r);
    EXPECT_TRUE(is_rank_one_stochastic(averaging_matrix(n)));
  }
}

}  // namespace
}  // namespace ftcons

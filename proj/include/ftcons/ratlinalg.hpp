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

#ifndef FTCONS_RATLINALG_HPP_
#define FTCONS_RATLINALG_HPP_

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "ftcons/graph.hpp"
#include "ftcons/rational.hpp"

namespace ftcons {

// (A_1, ..., A_T), applied in order: x(t) = A_t x(t-1). `order` is kept even
// when the list is empty so that the empty product has a dimension.
struct MatrixSequence {
  Eigen::Index order = 0;
  std::vector<RationalMatrix> matrices;

  std::size_t size() const noexcept { return matrices.size(); }
  bool empty() const noexcept { return matrices.empty(); }

  friend bool operator==(const MatrixSequence& a, const MatrixSequence& b);
};

RationalMatrix identity_matrix(Eigen::Index n);
// (1/n) 1 1^T
RationalMatrix averaging_matrix(Eigen::Index n);
// 1 w^T
RationalMatrix rank_one_matrix(const RationalVector& w);

// Exact product. Throws DimensionError naming both orders.
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);

// A_T * ... * A_1. The identity of order seq.order for an empty sequence.
// Throws DimensionError if any matrix is not seq.order x seq.order.
RationalMatrix sequence_product(const MatrixSequence& seq);

// Replaces `x` by a * x, touching only rows of `a` that differ from the
// identity. Works for vectors (one column) and matrices alike.
void apply_left(const RationalMatrix& a, RationalMatrix& x);
void apply_left(const RationalMatrix& a, RationalVector& x);

namespace detail {
inline int sign_of(const Rational& v) { return v.sign(); }
template <typename T>
int sign_of(const T& v) {
  return (T(0) < v) - (v < T(0));
}
}  // namespace detail

// Nonnegative with every row summing exactly to one.
template <typename Derived>
bool is_stochastic(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Scalar sum(0);
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const int s = detail::sign_of(a(i, j));
      if (s < 0) return false;
      if (s > 0) sum += a(i, j);
    }
    if (sum != 1) return false;
  }
  return true;
}

template <typename Derived>
bool has_positive_diagonal(const Eigen::MatrixBase<Derived>& a) {
  const Eigen::Index n = std::min(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (detail::sign_of(a(i, i)) <= 0) return false;
  }
  return true;
}

// Every strictly positive off-diagonal entry (i, j) needs arc (j, i) in g
// (0-based matrix indices, 1-based graph ids). Zero or negative entries are
// not constrained here.
template <typename Derived>
bool is_consistent(const Eigen::MatrixBase<Derived>& a, const Graph& g) {
  if (a.rows() != g.order() || a.cols() != g.order()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j && detail::sign_of(a(i, j)) > 0 &&
          !g.has_arc(static_cast<Node>(j + 1), static_cast<Node>(i + 1))) {
        return false;
      }
    }
  }
  return true;
}

// Stochastic with all rows identical, i.e. 1 v^T.
template <typename Derived>
bool is_rank_one_stochastic(const Eigen::MatrixBase<Derived>& a) {
  if (!is_stochastic(a)) return false;
  for (Eigen::Index i = 1; i < a.rows(); ++i) {
    if (a.row(i) != a.row(0)) return false;
  }
  return true;
}

// Every entry exactly 1/n.
template <typename Derived>
bool is_average_matrix(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  const Scalar target = Scalar(1) / Scalar(static_cast<long>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != target) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_constant_vector(const Eigen::MatrixBase<Derived>& x) {
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    if (x(i) != x(0)) return false;
  }
  return true;
}

}  // namespace ftcons

#endif  // FTCONS_RATLINALG_HPP_

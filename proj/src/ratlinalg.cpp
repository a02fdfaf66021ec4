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

#include "ftcons/ratlinalg.hpp"

#include <string>
#include <utility>

#include "ftcons/errors.hpp"

namespace ftcons {
namespace {

std::string dims(const RationalMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool is_unit_row(const RationalMatrix& a, Eigen::Index i) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (j != i && !a(i, j).is_zero()) return false;
  }
  return a(i, i) == 1;
}

// Sparse-aware left multiplication shared by the matrix and vector paths.
// New rows are built in reused scratch storage and swapped in, so the
// steady state allocates nothing per call.
template <typename Dense>
void apply_left_impl(const RationalMatrix& a, Dense& x) {
  if (a.rows() != a.cols() || a.cols() != x.rows()) {
    throw DimensionError("cannot apply " + dims(a) + " matrix to operand with " +
                         std::to_string(x.rows()) + " rows");
  }
  using Row = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
  thread_local std::vector<Row> scratch;
  thread_local std::vector<Eigen::Index> touched;
  thread_local std::vector<Eigen::Index> support;
  thread_local Rational term;

  const Eigen::Index cols = x.cols();
  touched.clear();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (is_unit_row(a, i)) continue;
    if (touched.size() == scratch.size()) scratch.emplace_back();
    Row& row = scratch[touched.size()];
    if (row.size() != cols) row.resize(cols);
    support.clear();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) support.push_back(j);
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      Rational& acc = row(c);
      acc = 0;
      for (Eigen::Index j : support) {
        if (x(j, c).is_zero()) continue;
        term = a(i, j) * x(j, c);
        acc += term;
      }
    }
    touched.push_back(i);
  }
  for (std::size_t k = 0; k < touched.size(); ++k) {
    for (Eigen::Index c = 0; c < cols; ++c) x(touched[k], c).swap(scratch[k](c));
  }
}

}  // namespace

bool operator==(const MatrixSequence& a, const MatrixSequence& b) {
  return a.order == b.order && a.matrices == b.matrices;
}

RationalMatrix identity_matrix(Eigen::Index n) {
  RationalMatrix m(n, n);  // entries start at 0
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix averaging_matrix(Eigen::Index n) {
  return RationalMatrix::Constant(n, n, ratio(1, n));
}

RationalMatrix rank_one_matrix(const RationalVector& w) {
  return RationalVector::Ones(w.size()) * w.transpose();
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.cols() != b.rows()) {
    throw DimensionError("matrix product dimension mismatch: " + dims(a) +
                         " times " + dims(b));
  }
  RationalMatrix result = RationalMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0) result.row(i) += a(i, k) * b.row(k);
    }
  }
  return result;
}

RationalMatrix sequence_product(const MatrixSequence& seq) {
  RationalMatrix product = identity_matrix(seq.order);
  for (std::size_t t = 0; t < seq.matrices.size(); ++t) {
    const RationalMatrix& a = seq.matrices[t];
    if (a.rows() != seq.order || a.cols() != seq.order) {
      throw DimensionError("matrix " + std::to_string(t + 1) + " is " +
                           dims(a) + " in a sequence of order " +
                           std::to_string(seq.order));
    }
    apply_left(a, product);
  }
  return product;
}

void apply_left(const RationalMatrix& a, RationalMatrix& x) {
  apply_left_impl(a, x);
}

void apply_left(const RationalMatrix& a, RationalVector& x) {
  apply_left_impl(a, x);
}

}  // namespace ftcons

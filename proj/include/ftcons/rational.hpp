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

#ifndef FTCONS_RATIONAL_HPP_
#define FTCONS_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace ftcons {

// Exact rational backed by GMP. Every arithmetic result is canonical (lowest
// terms, positive denominator), so equality is structural.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

// Parses "p", "-p", or "p/q" (q != 0). The result is canonicalized, so
// "2/4" and "-1/-2" read as 1/2. Throws FormatError on anything else.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// num/den from machine integers. Goes through Integer because the two-int
// mpq_rational constructor mishandles negative denominators.
inline Rational ratio(long long num, long long den) {
  return Rational(Integer(num), Integer(den));
}

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace ftcons

#endif  // FTCONS_RATIONAL_HPP_

// Copyright 2026 the momcert authors
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

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>

#include "momcert/errors.hpp"

namespace momcert {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Number of bits of |z|; 0 for z = 0.
inline int bit_size(const Integer& z) {
  if (z == 0) return 0;
  return static_cast<int>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

// bitlen(|num|) + bitlen(den) of the reduced fraction.
inline int bit_size(const Rational& q) {
  return bit_size(Integer(q.get_num())) + bit_size(Integer(q.get_den()));
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Exact conversion: every finite double is a dyadic rational.
inline Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw NonFinite("exact_rational: non-finite input");
  return Rational(x);
}

// mpq_class(num, den) does not reduce the fraction; comparisons assume
// canonical form, so always construct through this.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw Error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "num/den", "num", optional leading sign. Throws Error on junk.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& q) {
  return q.get_str();  // canonical "num/den" or "num"
}

}  // namespace momcert

namespace Eigen {

// Allows exact linear algebra (LU solves, matrix products) on rationals.
template <>
struct NumTraits<momcert::Rational> : GenericNumTraits<momcert::Rational> {
  typedef momcert::Rational Real;
  typedef momcert::Rational NonInteger;
  typedef momcert::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

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

#include <Eigen/Core>

#include "momcert/moment_vector.hpp"
#include "momcert/semialgebraic.hpp"

namespace momcert {

template <typename Scalar>
using SymMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// M(i,j) = y_{alpha_i + alpha_j} over the basis of degree <= order.
template <typename Scalar>
SymMatrix<Scalar> moment_matrix(const MomentVector<Scalar>& y, int order) {
  if (2 * order > y.degree()) {
    throw DegreeMismatch("moment matrix order " + std::to_string(order) +
                         " needs moments of degree " + std::to_string(2 * order));
  }
  MonomialBasis rows(y.vars(), order);
  SymMatrix<Scalar> m(rows.size(), rows.size());
  for (int i = 0; i < rows.size(); ++i) {
    for (int j = i; j < rows.size(); ++j) {
      const Scalar v = y.at(rows.exponent_of(i) + rows.exponent_of(j));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

// M(i,j) = L_y(g * x^{alpha_i + alpha_j}).
template <typename Scalar>
SymMatrix<Scalar> localizing_matrix(const MomentVector<Scalar>& y,
                                    const Polynomial<Scalar>& g, int order) {
  if (g.vars() != y.vars()) {
    throw DegreeMismatch("localizing matrix: arity mismatch");
  }
  const int gdeg = g.is_zero() ? 0 : g.degree();
  if (2 * order + gdeg > y.degree()) {
    throw DegreeMismatch("localizing matrix needs moments of degree " +
                         std::to_string(2 * order + gdeg));
  }
  MonomialBasis rows(y.vars(), order);
  SymMatrix<Scalar> m(rows.size(), rows.size());
  for (int i = 0; i < rows.size(); ++i) {
    for (int j = i; j < rows.size(); ++j) {
      const Exponent base = rows.exponent_of(i) + rows.exponent_of(j);
      Scalar v(0);
      for (const auto& [e, c] : g.terms()) v += c * y.at(base + e);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

}  // namespace momcert

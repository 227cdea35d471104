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

#include <vector>

#include "momcert/polynomial.hpp"

namespace momcert {

// K = { a : g_1(a) >= 0, ..., g_k(a) >= 0 }. k = 0 describes all of R^n.
template <typename Scalar>
struct SemialgebraicDescription {
  int n = 0;
  std::vector<Polynomial<Scalar>> g;

  SemialgebraicDescription(int n_vars, std::vector<Polynomial<Scalar>> polys)
      : n(n_vars), g(std::move(polys)) {
    for (const auto& gi : g) {
      if (gi.vars() != n) {
        throw ExponentOutOfRange("constraint arity does not match n");
      }
    }
  }

  explicit SemialgebraicDescription(int n_vars)
      : SemialgebraicDescription(n_vars, {}) {}

  int count() const { return static_cast<int>(g.size()); }

  // Max degree over the constraints; 0 for an empty list.
  int max_constraint_degree() const {
    int dg = 0;
    for (const auto& gi : g) {
      if (!gi.is_zero()) dg = std::max(dg, gi.degree());
    }
    return dg;
  }

  // True if some g_i reads R - sum_j a_j x_j^2 with R > 0 and every a_j > 0.
  // Such a constraint makes the description archimedean.
  bool has_ball_constraint() const;
};

template <typename Scalar>
bool SemialgebraicDescription<Scalar>::has_ball_constraint() const {
  for (const auto& gi : g) {
    if (gi.is_zero() || gi.degree() != 2) continue;
    bool shape_ok = gi.coeff(Exponent::zero(n)) > Scalar(0);
    std::vector<bool> has_square(static_cast<size_t>(n), false);
    for (const auto& [e, c] : gi.terms()) {
      if (e.total_degree() == 0) continue;
      int square_var = -1;
      for (int j = 0; j < n && square_var != -2; ++j) {
        if (e[j] == 2 && e.total_degree() == 2) {
          square_var = (square_var == -1) ? j : -2;
        } else if (e[j] != 0) {
          square_var = -2;
        }
      }
      if (square_var < 0 || c >= Scalar(0)) {
        shape_ok = false;
        break;
      }
      has_square[static_cast<size_t>(square_var)] = true;
    }
    if (!shape_ok) continue;
    bool all_vars = true;
    for (bool h : has_square) all_vars = all_vars && h;
    if (all_vars) return true;
  }
  return false;
}

using SemialgD = SemialgebraicDescription<double>;
using SemialgQ = SemialgebraicDescription<Rational>;

inline SemialgD to_double(const SemialgQ& s) {
  std::vector<PolyD> g;
  g.reserve(s.g.size());
  for (const auto& gi : s.g) g.push_back(to_double(gi));
  return SemialgD(s.n, std::move(g));
}

}  // namespace momcert

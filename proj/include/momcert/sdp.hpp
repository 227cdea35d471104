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

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "momcert/errors.hpp"

namespace momcert {

// One linear term c * X_block[row][col] with row <= col; the matrix is
// symmetric, so a term on an off-diagonal entry addresses both mirror
// entries at once (the producer folds the factor 2 into c when needed).
struct BlockTerm {
  int block = 0;
  int row = 0;
  int col = 0;
  double coeff = 0;
};

struct FreeTerm {
  int index = 0;
  double coeff = 0;
};

// sum_terms c*X[r][c] + sum_terms c*f[i] = rhs
struct EqualityRow {
  std::vector<BlockTerm> blocks;
  std::vector<FreeTerm> free_terms;
  double rhs = 0;
};

// Max-margin feasibility problem:
//
//   maximize t  s.t.  all equality rows hold,  X_b - t*I psd for every b.
//
// Free scalars f enter the equalities only. A finite margin_cap adds the
// internal constraint t <= margin_cap; without it the margin is unbounded
// above whenever the feasible set allows scaling the blocks up, which is
// exactly the situation in certificate search.
struct SdpProblem {
  std::vector<int> block_sides;
  int free_dim = 0;
  std::vector<EqualityRow> rows;
  double margin_cap = std::numeric_limits<double>::infinity();
};

enum class SdpStatus {
  StrictlyFeasible,   // t* > margin_threshold
  Infeasible,         // t* < -margin_threshold, with a dual bound stored
  Marginal,           // |t*| <= margin_threshold: boundary, surfaced as-is
  NumericalFailure,
};

std::string to_string(SdpStatus status);

struct SdpResiduals {
  double primal = 0;
  double dual = 0;
  double gap = 0;
};

struct SolveOptions {
  double tol = 1e-9;
  int max_iter = 150;
  double margin_threshold = 1e-7;
};

struct SdpSolution {
  SdpStatus status = SdpStatus::NumericalFailure;
  double margin = 0;  // optimal t
  std::vector<Eigen::MatrixXd> block_values;  // X_b at the optimum
  Eigen::VectorXd free_values;
  // Lagrange multipliers, one per input row. For Infeasible solutions
  // (y, cap_dual) certify margin <= infeasibility_bound < 0: contracting
  // them against the constraints gives sum_b <Z_b, X_b - tI> >= 0 with
  // Z_b = sum_r y_r A_{r,b} psd.
  Eigen::VectorXd dual_values;
  double cap_dual = 0;
  double infeasibility_bound = 0;
  SdpResiduals residuals;
  int iterations = 0;
};

SdpSolution solve_max_margin(const SdpProblem& prob,
                             const SolveOptions& options = {});

struct KktReport {
  double primal_residual = 0;
  double dual_residual = 0;
  double gap = 0;
  bool pass = false;
};

// Independent recomputation of the optimality residuals of a solution.
// Requires status StrictlyFeasible or Marginal.
KktReport check_kkt(const SdpProblem& prob, const SdpSolution& sol,
                    double tol);

// Re-derives the margin upper bound certified by the dual of an Infeasible
// solution. Returns +inf when the stored dual fails its feasibility checks
// at tolerance tol.
double recompute_infeasibility_bound(const SdpProblem& prob,
                                     const SdpSolution& sol, double tol);

}  // namespace momcert

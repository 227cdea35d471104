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

#include <memory>
#include <utility>
#include <vector>

#include "momcert/basis.hpp"
#include "momcert/polynomial.hpp"

namespace momcert {

// y = (y_alpha), |alpha| <= d, stored densely in basis order.
template <typename Scalar>
class MomentVector {
 public:
  MomentVector(int n, int d, std::vector<Scalar> values)
      : basis_(std::make_shared<MonomialBasis>(n, d)),
        values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != basis_->size()) {
      throw DegreeMismatch("moment vector length " +
                           std::to_string(values_.size()) +
                           " does not match basis size " +
                           std::to_string(basis_->size()));
    }
  }

  int vars() const { return basis_->vars(); }
  int degree() const { return basis_->degree(); }
  int size() const { return basis_->size(); }
  const MonomialBasis& basis() const { return *basis_; }

  const Scalar& operator[](int i) const {
    return values_.at(static_cast<size_t>(i));
  }
  const Scalar& at(const Exponent& e) const {
    return values_[static_cast<size_t>(basis_->index_of(e))];
  }
  const std::vector<Scalar>& values() const { return values_; }

  // y_0, the mass of any representing measure.
  const Scalar& mass() const { return values_[0]; }

  // L_y(p) = sum_alpha p_alpha y_alpha.
  Scalar riesz(const Polynomial<Scalar>& p) const {
    if (p.vars() != vars()) {
      throw DegreeMismatch("riesz: polynomial arity mismatch");
    }
    if (p.degree() > degree()) {
      throw DegreeMismatch("riesz: polynomial degree " +
                           std::to_string(p.degree()) +
                           " exceeds truncation " + std::to_string(degree()));
    }
    Scalar total(0);
    for (const auto& [e, c] : p.terms()) total += c * at(e);
    return total;
  }

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<Scalar> values_;
};

template <typename Scalar>
Scalar riesz_apply(const MomentVector<Scalar>& y, const Polynomial<Scalar>& p) {
  return y.riesz(p);
}

// Moments y_alpha = sum_i c_i u_i^alpha of the atomic measure sum c_i
// delta_{u_i}. Weights must be strictly positive.
template <typename Scalar>
MomentVector<Scalar> moments_of_atomic_measure(
    const std::vector<std::pair<Scalar, std::vector<Scalar>>>& atoms, int n,
    int d) {
  MonomialBasis basis(n, d);
  std::vector<Scalar> values(static_cast<size_t>(basis.size()), Scalar(0));
  for (const auto& [weight, point] : atoms) {
    if (!(weight > Scalar(0))) {
      throw NonPositiveWeight("atomic measure weight must be positive");
    }
    if (static_cast<int>(point.size()) != n) {
      throw ExponentOutOfRange("atom arity mismatch");
    }
    for (int i = 0; i < basis.size(); ++i) {
      const Exponent& e = basis.exponent_of(i);
      Scalar mono = weight;
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < e[j]; ++k) mono *= point[static_cast<size_t>(j)];
      }
      values[static_cast<size_t>(i)] += mono;
    }
  }
  return MomentVector<Scalar>(n, d, std::move(values));
}

using MomentsD = MomentVector<double>;
using MomentsQ = MomentVector<Rational>;

inline MomentsD to_double(const MomentsQ& y) {
  std::vector<double> values;
  values.reserve(static_cast<size_t>(y.size()));
  for (const auto& v : y.values()) values.push_back(to_double(v));
  return MomentsD(y.vars(), y.degree(), std::move(values));
}

}  // namespace momcert

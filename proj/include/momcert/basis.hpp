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

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "momcert/errors.hpp"

namespace momcert {

// binomial(n, k) with overflow check; throws Error if it does not fit int64.
std::int64_t binomial(int n, int k);

// A monomial exponent (alpha_1, ..., alpha_n), all entries >= 0.
class Exponent {
 public:
  explicit Exponent(std::vector<int> entries);
  static Exponent zero(int n) { return Exponent(std::vector<int>(n, 0)); }

  int arity() const { return static_cast<int>(entries_.size()); }
  int total_degree() const { return degree_; }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  Exponent operator+(const Exponent& other) const;

  bool operator==(const Exponent& other) const {
    return entries_ == other.entries_;
  }
  bool operator!=(const Exponent& other) const { return !(*this == other); }

  // Basis order: total degree ascending, then lexicographically descending
  // within a degree, so that e.g. for n=2: (0,0), (1,0), (0,1), (2,0),
  // (1,1), (0,2), ...
  struct GradedLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
      if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
      return a.entries_ > b.entries_;
    }
  };

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

// The monomial basis of n-variate polynomials of degree <= d, enumerated in
// the graded order above. index_of/exponent_of are mutually inverse.
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);

  int vars() const { return n_; }
  int degree() const { return d_; }
  int size() const { return static_cast<int>(exponents_.size()); }

  const Exponent& exponent_of(int index) const;
  int index_of(const Exponent& e) const;

  const std::vector<Exponent>& exponents() const { return exponents_; }

 private:
  int n_;
  int d_;
  std::vector<Exponent> exponents_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace momcert

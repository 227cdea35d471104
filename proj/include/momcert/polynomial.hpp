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

#include <limits>
#include <map>
#include <vector>

#include "momcert/basis.hpp"
#include "momcert/rational.hpp"

namespace momcert {

// Degree reported for the zero polynomial. Callers must not do arithmetic
// on it; it only has to compare below every true degree.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over Scalar (double or Rational). Stored
// coefficients are never zero.
template <typename Scalar>
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Scalar, Exponent::GradedLess>;

  explicit Polynomial(int n) : n_(n) {
    if (n < 1) throw Error("Polynomial requires n >= 1");
  }

  static Polynomial constant(int n, const Scalar& c) {
    Polynomial p(n);
    p.add_term(Exponent::zero(n), c);
    return p;
  }

  static Polynomial monomial(const Exponent& e, const Scalar& c) {
    Polynomial p(e.arity());
    p.add_term(e, c);
    return p;
  }

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    if (terms_.empty()) return kZeroPolyDegree;
    return terms_.rbegin()->first.total_degree();
  }

  // Accumulates c onto the coefficient of e; drops the term if it cancels.
  void add_term(const Exponent& e, const Scalar& c) {
    if (e.arity() != n_) throw ExponentOutOfRange("term arity mismatch");
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Scalar coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  const TermMap& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& other) const {
    check_arity(other);
    Polynomial out(*this);
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
  }

  Polynomial operator-(const Polynomial& other) const {
    check_arity(other);
    Polynomial out(*this);
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
  }

  Polynomial operator*(const Polynomial& other) const {
    check_arity(other);
    Polynomial out(n_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : other.terms_) {
        out.add_term(ea + eb, ca * cb);
      }
    }
    return out;
  }

  Polynomial scaled(const Scalar& s) const {
    Polynomial out(n_);
    if (s == Scalar(0)) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  template <typename Point>
  Scalar eval(const Point& point) const {
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
      Scalar term = c;
      for (int j = 0; j < n_; ++j) {
        for (int k = 0; k < e[j]; ++k) term *= point[j];
      }
      total += term;
    }
    return total;
  }

  bool operator==(const Polynomial& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

  // Largest |coefficient|; 0 for the zero polynomial.
  double max_abs_coeff() const {
    double m = 0;
    for (const auto& [e, c] : terms_) {
      const double a = std::abs(to_double_scalar(c));
      if (a > m) m = a;
    }
    return m;
  }

 private:
  static double to_double_scalar(double x) { return x; }
  static double to_double_scalar(const Rational& x) { return to_double(x); }

  void check_arity(const Polynomial& other) const {
    if (n_ != other.n_) throw ExponentOutOfRange("polynomial arity mismatch");
  }

  int n_;
  TermMap terms_;
};

using PolyD = Polynomial<double>;
using PolyQ = Polynomial<Rational>;

inline PolyD to_double(const PolyQ& p) {
  PolyD out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_double(c));
  return out;
}

// Binary-exact lift; every stored double becomes the same dyadic rational.
inline PolyQ exact_rational(const PolyD& p) {
  PolyQ out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, exact_rational(c));
  return out;
}

}  // namespace momcert

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

#include "momcert/basis.hpp"

#include <limits>
#include <string>

namespace momcert {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 0; i < k; ++i) {
    // result * (n-i) stays exact because the running value is always an
    // integer binomial; guard against int64 overflow anyway.
    if (result > std::numeric_limits<std::int64_t>::max() / (n - i)) {
      throw Error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                  ") overflows int64");
    }
    result = result * (n - i) / (i + 1);
  }
  return result;
}

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw ExponentOutOfRange("negative exponent entry");
  }
  degree_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (arity() != other.arity()) {
    throw ExponentOutOfRange("exponent arity mismatch in addition");
  }
  std::vector<int> sum(entries_);
  for (size_t i = 0; i < sum.size(); ++i) sum[i] += other.entries_[i];
  return Exponent(std::move(sum));
}

namespace {

void enumerate_degree(int n, int degree, std::vector<int>& scratch, int pos,
                      int remaining, std::vector<Exponent>& out) {
  if (pos == n - 1) {
    scratch[static_cast<size_t>(pos)] = remaining;
    out.emplace_back(scratch);
    return;
  }
  // Descending first entry yields the lexicographically descending listing.
  for (int e = remaining; e >= 0; --e) {
    scratch[static_cast<size_t>(pos)] = e;
    enumerate_degree(n, degree, scratch, pos + 1, remaining - e, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw Error("MonomialBasis requires n >= 1");
  if (d < 0) throw Error("MonomialBasis requires d >= 0");
  const std::int64_t count = binomial(n + d, d);
  if (count > (std::int64_t{1} << 26)) {
    throw Error("monomial basis too large: " + std::to_string(count));
  }
  exponents_.reserve(static_cast<size_t>(count));
  std::vector<int> scratch(static_cast<size_t>(n), 0);
  for (int t = 0; t <= d; ++t) {
    enumerate_degree(n, t, scratch, 0, t, exponents_);
  }
  for (int i = 0; i < size(); ++i) {
    index_.emplace(exponents_[static_cast<size_t>(i)].entries(), i);
  }
}

const Exponent& MonomialBasis::exponent_of(int index) const {
  if (index < 0 || index >= size()) {
    throw ExponentOutOfRange("basis index " + std::to_string(index) +
                             " out of range [0," + std::to_string(size()) +
                             ")");
  }
  return exponents_[static_cast<size_t>(index)];
}

int MonomialBasis::index_of(const Exponent& e) const {
  if (e.arity() != n_) {
    throw ExponentOutOfRange("exponent arity " + std::to_string(e.arity()) +
                             " does not match basis arity " +
                             std::to_string(n_));
  }
  if (e.total_degree() > d_) {
    throw ExponentOutOfRange("exponent degree " +
                             std::to_string(e.total_degree()) +
                             " exceeds basis degree " + std::to_string(d_));
  }
  return index_.at(e.entries());
}

}  // namespace momcert

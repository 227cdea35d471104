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

#include <algorithm>
#include <vector>

#include "doctest.h"

using namespace momcert;

namespace {

// Independent enumeration: generate all exponents with |alpha| <= d by a
// plain nested recursion, then sort by (degree asc, tuple lex desc).
std::vector<std::vector<int>> brute_force_basis(int n, int d) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  while (true) {
    int total = 0;
    for (int v : cur) total += v;
    if (total <= d) all.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[static_cast<size_t>(pos)] == d) {
      cur[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++cur[static_cast<size_t>(pos)];
  }
  std::sort(all.begin(), all.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int da = 0, db = 0;
              for (int v : a) da += v;
              for (int v : b) db += v;
              if (da != db) return da < db;
              return a > b;
            });
  return all;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(8, 6) == 28);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("constant monomial is first") {
  MonomialBasis b(1, 4);
  CHECK(b.index_of(Exponent({0})) == 0);
  CHECK(b.size() == 5);
}

TEST_CASE("graded-lex indices for n=2,d=2 match brute-force enumeration") {
  MonomialBasis b(2, 2);
  const auto expected = brute_force_basis(2, 2);
  REQUIRE(b.size() == static_cast<int>(expected.size()));
  for (int i = 0; i < b.size(); ++i) {
    CHECK(b.exponent_of(i).entries() == expected[static_cast<size_t>(i)]);
  }
  // Last degree-2 monomial.
  CHECK(b.index_of(Exponent({0, 2})) == 5);
}

TEST_CASE("n=2,d=6 basis has 28 elements") {
  MonomialBasis b(2, 6);
  CHECK(b.size() == 28);
  CHECK(b.index_of(b.exponent_of(27)) == 27);
}

TEST_CASE("index_of and exponent_of are inverse bijections (n<=3, d<=8)") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 8; ++d) {
      MonomialBasis b(n, d);
      CHECK(b.size() == binomial(n + d, d));
      const auto expected = brute_force_basis(n, d);
      REQUIRE(static_cast<int>(expected.size()) == b.size());
      for (int i = 0; i < b.size(); ++i) {
        CHECK(b.exponent_of(i).entries() == expected[static_cast<size_t>(i)]);
        CHECK(b.index_of(b.exponent_of(i)) == i);
      }
    }
  }
}

TEST_CASE("index_of rejects out-of-range exponents") {
  MonomialBasis b(2, 3);
  CHECK_THROWS_AS(b.index_of(Exponent({4, 0})), ExponentOutOfRange);
  CHECK_THROWS_AS(b.index_of(Exponent({1})), ExponentOutOfRange);
  CHECK_THROWS_AS(Exponent({-1, 0}), ExponentOutOfRange);
}

TEST_CASE("monotone in graded order") {
  MonomialBasis b(3, 5);
  Exponent::GradedLess less;
  for (int i = 0; i + 1 < b.size(); ++i) {
    CHECK(less(b.exponent_of(i), b.exponent_of(i + 1)));
  }
}

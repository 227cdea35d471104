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

#include "momcert/input_stats.hpp"

#include <random>

#include "doctest.h"

using namespace momcert;

TEST_CASE("bit sizes of integers and rationals") {
  CHECK(bit_size(Integer(0)) == 0);
  CHECK(bit_size(Integer(1)) == 1);
  CHECK(bit_size(Integer(-8)) == 4);
  CHECK(bit_size(Rational(1, 2)) == 3);   // 1 bit + 2 bits
  CHECK(bit_size(Rational(0)) == 1);      // 0/1
  CHECK(bit_size(Rational(-22, 7)) == 8);  // 5 + 3
}

TEST_CASE("stats of the unconstrained (1,1,0) instance") {
  MomentsQ y(1, 2, {Rational(1), Rational(1), Rational(0)});
  SemialgQ g(1);
  InputStats s = input_stats(y, g, 2);
  CHECK(s.n_basis == 3);
  CHECK(s.d_g == 0);
  CHECK(s.delta == 3);  // max(d+1, d_g)
  CHECK(s.tau_g == 0);
  CHECK(s.tau == (s.n_basis + 1) * s.tau_y);
}

TEST_CASE("stats of the degree-6 ball instance") {
  MonomialBasis basis(2, 6);
  std::vector<Rational> vals(static_cast<size_t>(basis.size()), Rational(0));
  auto set = [&](std::vector<int> e, int v) {
    vals[static_cast<size_t>(basis.index_of(Exponent(std::move(e))))] =
        Rational(v);
  };
  set({0, 0}, 32);
  set({2, 0}, 34);
  set({0, 2}, 34);
  set({4, 0}, 43);
  set({0, 4}, 43);
  set({2, 2}, 30);
  set({6, 0}, 128);
  set({0, 6}, 128);
  set({4, 2}, 28);
  set({2, 4}, 28);
  MomentsQ y(2, 6, vals);

  PolyQ ball(2);
  ball.add_term(Exponent({0, 0}), Rational(1));
  ball.add_term(Exponent({2, 0}), Rational(-1));
  ball.add_term(Exponent({0, 2}), Rational(-1));
  SemialgQ g(2, {ball});

  InputStats s = input_stats(y, g, 6);
  CHECK(s.n_basis == 28);
  CHECK(s.d_g == 2);
  CHECK(s.delta == 7);
  CHECK(s.tau_y == bit_size(Rational(128)));
  // tau = max((N+1) tau_y, binom(n+d_g, n) tau_g)
  CHECK(s.tau == std::max<std::int64_t>(29 * s.tau_y, 6 * s.tau_g));
}

TEST_CASE("doubling an integer moment entry never decreases tau") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> vals;
    for (int i = 0; i < 6; ++i) vals.push_back(Rational(entry(rng)));
    MomentsQ y(2, 2, vals);
    SemialgQ g(2);
    const InputStats before = input_stats(y, g, 2);
    const size_t k = rng() % vals.size();
    std::vector<Rational> doubled = vals;
    doubled[k] *= 2;
    const InputStats after = input_stats(MomentsQ(2, 2, doubled), g, 2);
    CHECK(after.tau >= before.tau);
  }
}

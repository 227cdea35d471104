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

#include "momcert/moment_vector.hpp"
#include "momcert/semialgebraic.hpp"

namespace momcert {

// Bit-size statistics of a problem instance. tau bounds the integer
// coefficients of the constraints after clearing denominators:
//   tau = max((N+1)*tau_y, binomial(n+d_g, n)*tau_g),
// with N = binomial(n+d, d), d_g the max constraint degree, and
// delta = max(d+1, d_g).
struct InputStats {
  std::int64_t n_basis = 0;  // N
  int tau_y = 0;
  int tau_g = 0;
  std::int64_t tau = 0;
  int delta = 0;
  int d_g = 0;
};

InputStats input_stats(const MomentsQ& y, const SemialgQ& g, int d);

}  // namespace momcert

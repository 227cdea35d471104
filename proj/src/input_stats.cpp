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

namespace momcert {

InputStats input_stats(const MomentsQ& y, const SemialgQ& g, int d) {
  InputStats stats;
  stats.n_basis = binomial(y.vars() + d, d);
  stats.d_g = g.max_constraint_degree();
  stats.delta = std::max(d + 1, stats.d_g);

  for (const auto& v : y.values()) {
    stats.tau_y = std::max(stats.tau_y, bit_size(v));
  }
  for (const auto& gi : g.g) {
    for (const auto& [e, c] : gi.terms()) {
      stats.tau_g = std::max(stats.tau_g, bit_size(c));
    }
  }
  const std::int64_t from_y = (stats.n_basis + 1) * stats.tau_y;
  const std::int64_t from_g =
      binomial(y.vars() + stats.d_g, y.vars()) * stats.tau_g;
  stats.tau = std::max(from_y, from_g);
  return stats;
}

}  // namespace momcert

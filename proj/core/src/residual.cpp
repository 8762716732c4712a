// Copyright 2026 The lrc-bounds Authors.
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

#include "lrc/residual.hpp"

#include <stdexcept>

namespace lrc {

long long ceil_div_pow(long long d, int q, int e) {
  if (d <= 0) return 0;
  long long denom = 1;
  for (int i = 0; i < e; ++i) {
    if (denom >= d) return 1;
    denom *= q;
  }
  return ceil_div(d, denom);
}

ResidualCode residual(const LinearCode& code, std::uint64_t max_codewords) {
  if (code.is_zero_dimensional()) throw std::invalid_argument("residual code of a zero-dimensional code");
  MinWeightCodeword mw = min_weight_codeword(code, max_codewords);
  const CoordSet coords = support(mw.codeword).complement(code.length());
  LinearCode res = restriction(code, coords);
  return {coords, std::move(res), std::move(mw.message), std::move(mw.codeword), *mw.weight};
}

ResChain res_chain(const LinearCode& code, std::uint64_t max_codewords) {
  return res_chain_of(code, CoordSet::full(code.length()), max_codewords);
}

ResChain res_chain_of(const LinearCode& code, const CoordSet& coords, std::uint64_t max_codewords) {
  ResChain chain;
  chain.q = code.q();
  LinearCode current = restriction(code, coords);
  chain.k = current.dimension();
  chain.d = min_distance(current, max_codewords);

  // Members of the current level, in the ambient numbering.
  std::vector<int> ambient = coords.members();
  for (;;) {
    ResChainLevel level;
    level.coords = CoordSet(ambient);
    level.entropy = current.dimension();
    level.distance = min_distance(current, max_codewords);
    level.distance_lower_bound =
        chain.d ? static_cast<int>(ceil_div_pow(*chain.d, chain.q, chain.k - level.entropy)) : 0;
    chain.levels.push_back(level);
    if (current.is_zero_dimensional()) break;

    ResidualCode res = residual(current, max_codewords);
    std::vector<int> next;
    next.reserve(res.coords.size());
    for (int local : res.coords) next.push_back(ambient[local]);
    ambient = std::move(next);
    current = std::move(res.code);
  }
  return chain;
}

bool ResChain::satisfies_invariants() const {
  if (static_cast<int>(levels.size()) != k + 1) return false;
  for (int i = 0; i <= k; ++i) {
    const auto& level = levels[i];
    if (level.entropy != k - i) return false;
    if (i > 0 && !level.coords.is_subset_of(levels[i - 1].coords)) return false;
    if (level.entropy > 0 && (!level.distance || *level.distance < level.distance_lower_bound)) return false;
  }
  return true;
}

}  // namespace lrc

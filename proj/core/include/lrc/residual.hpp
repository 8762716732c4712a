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

#pragma once

#include <vector>

#include "lrc/coord_set.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

// The residual code of an [n, k, d] code with respect to a minimum-weight
// codeword c: the restriction to the complement of supp(c). It has
// parameters [n - d, k - 1, d' >= ceil(d / q)].
struct ResidualCode {
  // Complement of supp(c), in the coordinates of the input code.
  CoordSet coords;
  LinearCode code;
  // The minimum-weight codeword used, with its message (lexicographically
  // smallest among those of weight d).
  std::vector<Elem> message;
  std::vector<Elem> codeword;
  int parent_distance = 0;
};

// Throws std::invalid_argument for a zero-dimensional code.
ResidualCode residual(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxCodewords);

struct ResChainLevel {
  // Subset of the coordinates of the code the chain was built from.
  CoordSet coords;
  int entropy = 0;
  // Exact minimum distance of the restriction to `coords`.
  Distance distance;
  // ceil(d / q^(k - entropy)).
  int distance_lower_bound = 0;
};

// S_0 = [n] ⊇ S_1 ⊇ ... ⊇ S_k where C|_{S_{i+1}} is the residual code of
// C|_{S_i}. Entropies are k, k-1, ..., 0.
struct ResChain {
  int q = 0;
  int k = 0;
  Distance d;
  std::vector<ResChainLevel> levels;

  // Entropy drops by exactly one per level and every level meets its
  // distance lower bound.
  bool satisfies_invariants() const;
};

ResChain res_chain(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxCodewords);

// Residual chain of C|_coords, reported in the coordinates of `code`.
ResChain res_chain_of(const LinearCode& code, const CoordSet& coords,
                      std::uint64_t max_codewords = kDefaultMaxCodewords);

// ceil(a / b) for a >= 0, b > 0.
constexpr long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// ceil(d / q^e) for d >= 0, e >= 0, without overflow.
long long ceil_div_pow(long long d, int q, int e);

}  // namespace lrc

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

#include <optional>
#include <string>
#include <vector>

#include "lrc/coord_set.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

struct RepairSetCheck {
  int entropy = 0;
  int size = 0;
  Distance distance;
  bool valid = false;
  // Why the set is invalid; empty when valid.
  std::string reason;
};

// Checks that C|_R has minimum distance at least delta.
RepairSetCheck verify_repair_set(const LinearCode& code, const CoordSet& repair_set, int delta,
                                 std::uint64_t max_codewords = kDefaultMaxCodewords);

// Locality (r, delta) and dimension-locality (kappa, delta) of a code,
// with one witness repair set per coordinate and objective.
struct LocalityProfile {
  int delta = 0;
  int size_cap = 0;
  bool feasible = false;
  // First coordinate (0-based) without a repair set under the cap.
  std::optional<int> infeasible_coordinate;
  // r = max_i min |R_i| - delta + 1 and kappa = max_i min H(R_i).
  int r = 0;
  int kappa = 0;
  // Per coordinate: a smallest repair set, and a repair set of least
  // entropy (smallest, then lexicographically first, among those).
  std::vector<CoordSet> size_witnesses;
  std::vector<CoordSet> entropy_witnesses;
  // Sets larger than size_cap were not searched, so a larger cap might
  // lower kappa.
  bool cap_limited = false;

  // Distinct entropy witnesses, in order of first appearance.
  std::vector<CoordSet> repair_sets() const;
};

// min(n, delta + k).
int default_size_cap(const LinearCode& code, int delta);

// Exhaustive per-coordinate search over subsets R containing the coordinate
// with delta <= |R| <= size_cap. Throws std::invalid_argument for delta < 2
// or a cap outside [1, n].
LocalityProfile compute_locality(const LinearCode& code, int delta, std::optional<int> size_cap = std::nullopt,
                                 std::uint64_t max_codewords = kDefaultMaxCodewords);

// Profile induced by a given family of repair sets. Invalid sets are
// ignored; the profile is infeasible if some coordinate is left uncovered.
LocalityProfile profile_from_repair_sets(const LinearCode& code, const std::vector<CoordSet>& repair_sets,
                                         int delta, std::uint64_t max_codewords = kDefaultMaxCodewords);

struct SimplexLocality {
  int r = 0;
  int delta_local = 0;
};

// S(m, q) has dimension-locality (kappa, q^(kappa-1)) for 2 <= kappa <= m, with
// r = (q^(kappa-1) + q - 2) / (q - 1). Throws std::invalid_argument otherwise.
SimplexLocality simplex_locality(int m, int q, int kappa);

}  // namespace lrc

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

#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/coord_set.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/locality.hpp"

namespace lrc {

// A violated hypothesis of the set construction. The message names the
// failed inequality.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BuildStep {
  enum class Kind { start, repair_set, correction };
  Kind kind = Kind::start;
  // The repair set added, or the res-chain element used by a correction.
  CoordSet added;
  int alpha = 0;
  int entropy_before = 0;
  int entropy_after = 0;
  int size_before = 0;
  int size_after = 0;
};

std::string to_string(BuildStep::Kind kind);

struct Correction {
  CoordSet result;
  // Element S of the res-chain of cl(R) with H(S) - H(S n F) = alpha.
  CoordSet chain_element;
};

// Replaces F (which must be closed) by cl(F u S) for the first S, walking the
// res-chain of cl(R) from the top, with H(S) - H(S n F) = alpha. Throws
// PreconditionError unless 1 <= alpha <= kappa, H(R) <= kappa, d(C|R) >= delta
// and the entropy gap of both R and cl(R) over F is at least alpha.
// Guarantees H(F') <= H(F) + alpha and |F'| >= |F| + G(alpha, ceil(delta / q^(kappa - alpha))),
// and throws std::logic_error if either fails.
Correction correct_with_reschain(const LinearCode& code, const CoordSet& f, const CoordSet& repair_set, int alpha,
                                 int kappa, int delta, std::uint64_t max_codewords = kDefaultMaxCodewords);

struct BuiltSet {
  CoordSet set;
  int entropy = 0;
  int size = 0;
  int lambda = 0;
  int a = 0;
  int b = 0;
  int kappa = 0;
  int delta = 0;
  // (a + 1) G(kappa, delta) - G(kappa - b, delta).
  long long guaranteed_size = 0;
  std::vector<BuildStep> trace;
};

// Builds a closed set I with H(I) <= lambda and |I| >= (a + 1) G(kappa, delta) - G(kappa - b, delta)
// from repair sets covering every coordinate, each with entropy <= kappa and
// local distance >= delta. Repair sets are replaced by their closures.
// Throws PreconditionError for lambda outside [0, k] or invalid repair sets,
// and std::logic_error if the construction stalls or misses its guarantee.
BuiltSet build_low_entropy_set(const LinearCode& code, const std::vector<CoordSet>& repair_sets, int kappa,
                               int delta, int lambda, std::uint64_t max_codewords = kDefaultMaxCodewords);

// Uses the profile's entropy witnesses, kappa and delta.
BuiltSet build_low_entropy_set(const LinearCode& code, const LocalityProfile& profile, int lambda,
                               std::uint64_t max_codewords = kDefaultMaxCodewords);

}  // namespace lrc

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

#include "lrc/locality.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "lrc/galois.hpp"

namespace lrc {
namespace {

// True iff every nonzero codeword of `code` has weight >= bound.
bool distance_at_least(const LinearCode& code, int bound, std::uint64_t max_codewords) {
  const Distance d = min_distance(code, max_codewords);
  return d && *d >= bound;
}

// Calls visit(combination) for every (size)-subset of `pool` in lexicographic
// order until visit returns true.
template <typename Visit>
bool for_each_combination(const std::vector<int>& pool, int size, Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (size < 0 || size > n) return false;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  std::vector<int> chosen(size);
  for (;;) {
    for (int i = 0; i < size; ++i) chosen[i] = pool[idx[i]];
    if (visit(chosen)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

RepairSetCheck verify_repair_set(const LinearCode& code, const CoordSet& repair_set, int delta,
                                 std::uint64_t max_codewords) {
  RepairSetCheck check;
  check.size = repair_set.size();
  if (repair_set.empty()) {
    check.reason = "empty repair set";
    return check;
  }
  const LinearCode local = restriction(code, repair_set);
  check.entropy = local.dimension();
  check.distance = min_distance(local, max_codewords);
  if (!check.distance) {
    check.reason = "restriction is zero-dimensional";
  } else if (*check.distance < delta) {
    check.reason = fmt::format("local distance {} < delta = {}", *check.distance, delta);
  } else {
    check.valid = true;
  }
  return check;
}

std::vector<CoordSet> LocalityProfile::repair_sets() const {
  std::vector<CoordSet> out;
  for (const auto& s : entropy_witnesses) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

int default_size_cap(const LinearCode& code, int delta) {
  return std::min(code.length(), delta + code.dimension());
}

LocalityProfile compute_locality(const LinearCode& code, int delta, std::optional<int> size_cap,
                                 std::uint64_t max_codewords) {
  const int n = code.length();
  if (delta < 2) throw std::invalid_argument(fmt::format("local distance delta = {} must be at least 2", delta));
  const int cap = size_cap.value_or(default_size_cap(code, delta));
  if (cap < 1 || cap > n) throw std::invalid_argument(fmt::format("size cap {} outside [1, {}]", cap, n));

  LocalityProfile profile;
  profile.delta = delta;
  profile.size_cap = cap;
  profile.size_witnesses.resize(n);
  profile.entropy_witnesses.resize(n);

  int worst_size = 0;
  int worst_entropy = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    std::optional<CoordSet> by_size;
    std::optional<CoordSet> by_entropy;
    int best_entropy = code.dimension() + 1;

    // A set smaller than delta can only have local distance >= delta when
    // its restriction is zero-dimensional, which is not a repair set.
    for (int s = delta; s <= cap && best_entropy > 1; ++s) {
      for_each_combination(others, s - 1, [&](const std::vector<int>& rest) {
        std::vector<int> members(rest);
        members.push_back(i);
        CoordSet candidate(std::move(members));
        const LinearCode local = restriction(code, candidate);
        const int h = local.dimension();
        // Only a strictly lower entropy can improve once a smallest set is known.
        if (by_size && h >= best_entropy) return false;
        if (!distance_at_least(local, delta, max_codewords)) return false;
        if (!by_size) by_size = candidate;
        if (h < best_entropy) {
          best_entropy = h;
          by_entropy = candidate;
        }
        return best_entropy == 1;
      });
    }
    if (!by_size) {
      profile.feasible = false;
      profile.infeasible_coordinate = i;
      profile.cap_limited = cap < n;
      return profile;
    }
    worst_size = std::max(worst_size, by_size->size());
    worst_entropy = std::max(worst_entropy, best_entropy);
    profile.size_witnesses[i] = std::move(*by_size);
    profile.entropy_witnesses[i] = std::move(*by_entropy);
  }
  profile.feasible = true;
  profile.r = worst_size - delta + 1;
  profile.kappa = worst_entropy;
  profile.cap_limited = cap < n && worst_entropy > 1;
  return profile;
}

LocalityProfile profile_from_repair_sets(const LinearCode& code, const std::vector<CoordSet>& repair_sets,
                                         int delta, std::uint64_t max_codewords) {
  const int n = code.length();
  LocalityProfile profile;
  profile.delta = delta;
  profile.size_cap = n;
  profile.size_witnesses.resize(n);
  profile.entropy_witnesses.resize(n);

  struct Checked {
    CoordSet set;
    int entropy;
  };
  std::vector<Checked> valid;
  for (const auto& s : repair_sets) {
    const RepairSetCheck check = verify_repair_set(code, s, delta, max_codewords);
    if (check.valid) valid.push_back({s, check.entropy});
  }

  int worst_size = 0;
  int worst_entropy = 0;
  for (int i = 0; i < n; ++i) {
    const Checked* by_size = nullptr;
    const Checked* by_entropy = nullptr;
    for (const auto& c : valid) {
      if (!c.set.contains(i)) continue;
      if (!by_size || shortlex_less(c.set, by_size->set)) by_size = &c;
      if (!by_entropy || c.entropy < by_entropy->entropy ||
          (c.entropy == by_entropy->entropy && shortlex_less(c.set, by_entropy->set))) {
        by_entropy = &c;
      }
    }
    if (!by_size) {
      profile.feasible = false;
      profile.infeasible_coordinate = i;
      return profile;
    }
    worst_size = std::max(worst_size, by_size->set.size());
    worst_entropy = std::max(worst_entropy, by_entropy->entropy);
    profile.size_witnesses[i] = by_size->set;
    profile.entropy_witnesses[i] = by_entropy->set;
  }
  profile.feasible = true;
  profile.r = worst_size - delta + 1;
  profile.kappa = worst_entropy;
  return profile;
}

SimplexLocality simplex_locality(int m, int q, int kappa) {
  if (!is_prime_power(q)) throw std::invalid_argument(fmt::format("q = {} is not a prime power", q));
  if (kappa < 2 || kappa > m) {
    throw std::invalid_argument(fmt::format("kappa = {} outside [2, m = {}]", kappa, m));
  }
  long long qk = 1;
  for (int i = 0; i < kappa - 1; ++i) qk *= q;
  const long long numerator = qk + q - 2;
  if (numerator % (q - 1) != 0) throw std::logic_error("simplex locality is not an integer");
  return {static_cast<int>(numerator / (q - 1)), static_cast<int>(qk)};
}

}  // namespace lrc

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

#include "lrc/set_builder.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "lrc/bounds.hpp"
#include "lrc/residual.hpp"

namespace lrc {
namespace {

int gap(const LinearCode& code, const CoordSet& r, const CoordSet& f) {
  return entropy(code, r) - entropy(code, r.intersected(f));
}

std::string trace_dump(const std::vector<BuildStep>& trace) {
  std::string out;
  for (const auto& s : trace) {
    out += fmt::format("\n  {} {} alpha={} H {}->{} size {}->{}", to_string(s.kind), s.added.to_string(), s.alpha,
                       s.entropy_before, s.entropy_after, s.size_before, s.size_after);
  }
  return out;
}

struct Builder {
  const LinearCode& code;
  std::vector<CoordSet> sets;  // closed repair sets
  int delta;
  std::uint64_t cap;
  std::vector<BuildStep> trace;

  BuildStep step(BuildStep::Kind kind, const CoordSet& added, int alpha, const CoordSet& before,
                 const CoordSet& after) const {
    return {kind, added, alpha, entropy(code, before), entropy(code, after), before.size(), after.size()};
  }

  CoordSet correct(const CoordSet& f, const CoordSet& r, int alpha, int kappa) {
    Correction c = correct_with_reschain(code, f, r, alpha, kappa, delta, cap);
    trace.push_back(step(BuildStep::Kind::correction, c.chain_element, alpha, f, c.result));
    return c.result;
  }

  // Greedy accumulation of repair sets with a final correction: a closed F_c
  // with H(F_c) <= H(F) + kappa and |F_c| >= |F| + G(kappa, delta).
  CoordSet accumulate(CoordSet f, int kappa) {
    int gamma = 0;
    for (;;) {
      int best_gap = -1;
      const CoordSet* best = nullptr;
      const CoordSet* finisher = nullptr;
      for (const auto& r : sets) {
        const int g = gap(code, r, f);
        if (g >= kappa - gamma) {
          finisher = &r;
          break;
        }
        if (r.is_subset_of(f)) continue;
        if (g > best_gap || (g == best_gap && r < *best)) {
          best_gap = g;
          best = &r;
        }
      }
      if (finisher) return correct(f, *finisher, kappa - gamma, kappa);
      if (!best) {
        throw std::logic_error(fmt::format("construction stalled: every repair set lies in F = {} (gamma = {}){}",
                                           f.to_string(), gamma, trace_dump(trace)));
      }
      const CoordSet next = closure(code, f.united(*best));
      trace.push_back(step(BuildStep::Kind::repair_set, *best, 0, f, next));
      gamma += best_gap;
      f = next;
    }
  }
};

}  // namespace

std::string to_string(BuildStep::Kind kind) {
  switch (kind) {
    case BuildStep::Kind::start:
      return "start";
    case BuildStep::Kind::repair_set:
      return "repair-set";
    case BuildStep::Kind::correction:
      return "correction";
  }
  return "?";
}

Correction correct_with_reschain(const LinearCode& code, const CoordSet& f, const CoordSet& repair_set, int alpha,
                                 int kappa, int delta, std::uint64_t max_codewords) {
  if (closure(code, f) != f) throw PreconditionError(fmt::format("F = {} is not closed", f.to_string()));
  if (alpha < 1 || alpha > kappa) {
    throw PreconditionError(fmt::format("1 <= alpha <= kappa fails: alpha = {}, kappa = {}", alpha, kappa));
  }
  const RepairSetCheck check = verify_repair_set(code, repair_set, delta, max_codewords);
  if (!check.valid) {
    throw PreconditionError(
        fmt::format("d(C|R) >= delta fails for R = {}: {}", repair_set.to_string(), check.reason));
  }
  if (check.entropy > kappa) {
    throw PreconditionError(fmt::format("H(R) <= kappa fails: H(R) = {}, kappa = {}", check.entropy, kappa));
  }
  if (const int g = gap(code, repair_set, f); g < alpha) {
    throw PreconditionError(fmt::format("H(R) - H(F n R) >= alpha fails: {} < {}", g, alpha));
  }
  const CoordSet closed = closure(code, repair_set);
  if (const int g = gap(code, closed, f); g < alpha) {
    throw PreconditionError(fmt::format("H(cl R) - H(F n cl R) >= alpha fails: {} < {}", g, alpha));
  }

  const ResChain chain = res_chain_of(code, closed, max_codewords);
  const ResChainLevel* hit = nullptr;
  for (const auto& level : chain.levels) {
    if (level.entropy - entropy(code, level.coords.intersected(f)) == alpha) {
      hit = &level;
      break;
    }
  }
  if (!hit) throw std::logic_error(fmt::format("no res-chain element of {} has gap {}", closed.to_string(), alpha));

  Correction out{closure(code, f.united(hit->coords)), hit->coords};
  const int h_before = entropy(code, f);
  const int h_after = entropy(code, out.result);
  const long long needed =
      f.size() + griesmer_length(alpha, static_cast<int>(ceil_div_pow(delta, code.q(), kappa - alpha)), code.q());
  if (h_after > h_before + alpha || out.result.size() < needed) {
    throw std::logic_error(fmt::format("correction guarantee missed: H {} -> {} (alpha {}), size {} < {}",
                                       h_before, h_after, alpha, out.result.size(), needed));
  }
  return out;
}

BuiltSet build_low_entropy_set(const LinearCode& code, const std::vector<CoordSet>& repair_sets, int kappa,
                               int delta, int lambda, std::uint64_t max_codewords) {
  const int k = code.dimension();
  if (lambda < 0 || lambda > k) {
    throw PreconditionError(fmt::format("0 <= lambda <= k fails: lambda = {}, k = {}", lambda, k));
  }
  if (kappa < 1) throw PreconditionError(fmt::format("kappa = {} must be positive", kappa));

  Builder builder{code, {}, delta, max_codewords, {}};
  std::vector<bool> covered(code.length(), false);
  for (const auto& r : repair_sets) {
    const RepairSetCheck check = verify_repair_set(code, r, delta, max_codewords);
    if (!check.valid) {
      throw PreconditionError(fmt::format("repair set {} invalid: {}", r.to_string(), check.reason));
    }
    if (check.entropy > kappa) {
      throw PreconditionError(fmt::format("repair set {} has entropy {} > kappa = {}", r.to_string(), check.entropy, kappa));
    }
    CoordSet closed = closure(code, r);
    for (int i : closed) covered[i] = true;
    if (std::find(builder.sets.begin(), builder.sets.end(), closed) == builder.sets.end()) {
      builder.sets.push_back(std::move(closed));
    }
  }
  if (const auto it = std::find(covered.begin(), covered.end(), false); it != covered.end()) {
    throw PreconditionError(fmt::format("coordinate {} lies in no repair set", it - covered.begin() + 1));
  }
  std::sort(builder.sets.begin(), builder.sets.end());

  BuiltSet out;
  out.lambda = lambda;
  out.kappa = kappa;
  out.delta = delta;
  out.a = lambda / kappa;
  out.b = lambda % kappa;
  out.guaranteed_size = (out.a + 1) * griesmer_length(kappa, delta, code.q()) -
                        griesmer_length(kappa - out.b, delta, code.q());

  CoordSet f = closure(code, CoordSet{});
  builder.trace.push_back(builder.step(BuildStep::Kind::start, f, 0, f, f));
  if (out.b > 0) {
    const CoordSet* tall = nullptr;
    for (const auto& r : builder.sets) {
      if (entropy(code, r) >= out.b) {
        tall = &r;
        break;
      }
    }
    // Without a repair set of entropy >= b the code has dimension-locality
    // (b, delta), and the greedy step runs with b in place of kappa.
    f = tall ? builder.correct(f, *tall, out.b, kappa) : builder.accumulate(f, out.b);
  }
  for (int i = 0; i < out.a; ++i) f = builder.accumulate(f, kappa);

  out.entropy = entropy(code, f);
  out.size = f.size();
  out.set = std::move(f);
  out.trace = std::move(builder.trace);
  if (out.entropy > lambda || out.size < out.guaranteed_size) {
    throw std::logic_error(fmt::format("set guarantee missed: H(I) = {} (lambda {}), |I| = {} (need {}){}",
                                       out.entropy, lambda, out.size, out.guaranteed_size, trace_dump(out.trace)));
  }
  return out;
}

BuiltSet build_low_entropy_set(const LinearCode& code, const LocalityProfile& profile, int lambda,
                               std::uint64_t max_codewords) {
  if (!profile.feasible) throw PreconditionError("locality profile is infeasible");
  return build_low_entropy_set(code, profile.repair_sets(), profile.kappa, profile.delta, lambda, max_codewords);
}

}  // namespace lrc

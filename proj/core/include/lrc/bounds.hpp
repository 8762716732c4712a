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
#include <string_view>
#include <vector>

namespace lrc {

// Optimizing parameters of a min-form bound. lambda = a * kappa + b.
struct BoundWitness {
  std::optional<int> t;
  std::optional<int> lambda;
  std::optional<int> a;
  std::optional<int> b;
  // Length of the shortened code in the optimizing term.
  std::optional<int> shortened_length;
};

struct BoundReport {
  std::string name;
  // "k" for dimension bounds, "d" for distance bounds.
  char bounds = 'k';
  int value = 0;
  BoundWitness witness;
  // Inner bounds that were active, e.g. the k_opt components of the
  // optimizing term or the log-convex bound behind kappa_A.
  std::vector<std::string> components;
};

// G(k, d) = sum_{i<k} ceil(d / q^i).
long long griesmer_length(int k, int d, int q);

// Largest k' with G(k', d) <= n; 0 when d > n.
int griesmer_dim(int n, int d, int q);

// Dimension bounds for length n and distance d. Each is floored at 0.
int k_singleton(int n, int d);
int k_hamming(int n, int d, int q);
// nullopt when the Plotkin bound does not apply.
std::optional<int> k_plotkin(int n, int d, int q);

struct KOpt {
  int value = 0;
  // Components attaining the minimum ("singleton", "hamming", "plotkin",
  // "griesmer"), or "n<d".
  std::vector<std::string> active;
};

// Composite upper bound on the dimension of a q-ary [n, k, d] code.
KOpt k_opt_detail(int n, int d, int q);
int k_opt(int n, int d, int q);

// Distance bounds. Both throw std::invalid_argument unless 1 <= r <= k.
int bound_gopalan(int n, int k, int r);
int bound_prakash(int n, int k, int r, int delta);

// min over 1 <= t <= n / (r + 1) of t r + k_opt(n - t (r + 1), d).
BoundReport bound_cm(int n, int d, int r, int q);
// min over t >= 0 with positive shortened length of t r + k_opt(n - t (r + delta - 1), d).
BoundReport bound_cm_rdelta(int n, int d, int r, int delta, int q);

enum class LcChoice { singleton, hamming, plotkin, best };

std::string_view to_string(LcChoice choice);
// Throws std::invalid_argument for unknown names.
LcChoice parse_lc_choice(std::string_view name);

// kappa_B: k_opt at (r + delta - 1, delta).
int kappa_b(int r, int delta, int q);
// kappa_A for one log-convex bound; nullopt when Plotkin does not apply.
std::optional<int> kappa_a(int r, int delta, int q, LcChoice choice);

// (ceil((n - d + 1) / (r + delta - 1)) + 1) kappa_A. Throws
// std::invalid_argument when the chosen bound does not apply.
BoundReport bound_abhmt(int n, int d, int r, int delta, int q, LcChoice choice);

// min over lambda = a kappa + b of lambda + k_opt(n - (a + 1) G(kappa, delta) + G(kappa - b, delta), d),
// over lambda with positive shortened length. The smallest optimizing
// lambda is the witness.
BoundReport bound_cmg_kappa(int n, int d, int kappa, int delta, int q);
// The same minimum restricted to lambda = t kappa.
BoundReport bound_cmg_tkappa(int n, int d, int kappa, int delta, int q);
// bound_cmg_kappa at kappa = kappa_b(r, delta, q).
BoundReport bound_cmg_r(int n, int d, int r, int delta, int q);

// n - ceil(k / kappa_B) G(kappa_B, delta) + G(kappa_B - b, delta) with
// b = k - 1 - (ceil(k / kappa_B) - 1) kappa_B. Requires k >= 1, delta >= 2.
int bound_singleton_g(int n, int k, int r, int delta, int q);

}  // namespace lrc

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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: lrc_acceptance [--seed=N]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "lrc/asymptotic.hpp"
#include "lrc/bounds.hpp"
#include "lrc/cli/commands.hpp"
#include "lrc/constructions.hpp"
#include "lrc/locality.hpp"
#include "lrc/residual.hpp"
#include "lrc/set_builder.hpp"
#include "oracles.hpp"

namespace lrc {
namespace {

// Collects the first few mismatches of a criterion.
class Failures {
 public:
  void check(bool ok, const std::string& what) {
    if (ok) return;
    ++count_;
    if (count_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    return count_ == 0 ? std::string() : fmt::format("{} violation(s): {}", count_, notes_);
  }

 private:
  int count_ = 0;
  std::string notes_;
};

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Failures example_1() {
  Failures f;
  const NamedCode ex = paper_example(1);
  const auto words = oracle::codewords(ex.code);
  const int d = oracle::distance(words);
  f.check(ex.code.length() == 10 && ex.code.dimension() == 4 && d == 4, fmt::format("parameters [.,.,{}]", d));
  for (const auto& r : ex.repair_sets) {
    const RepairSetCheck c = verify_repair_set(ex.code, r, 3);
    f.check(c.valid && c.entropy == 3 && c.size == 6 && c.distance == 3, "repair set " + r.to_string());
    f.check(oracle::entropy(words, r, 2) == 3 && oracle::distance_on(words, r) == 3, "oracle on " + r.to_string());
  }
  const LocalityProfile p = compute_locality(ex.code, 3);
  f.check(p.feasible && p.kappa == 3 && p.r == 4, fmt::format("locality kappa={} r={}", p.kappa, p.r));
  f.check(bound_singleton_g(10, 4, 4, 3, 2) == 4 && d == 4, "singleton_g(10,4,4,3,2) != 4");
  return f;
}

Failures example_2() {
  Failures f;
  const NamedCode ex = paper_example(2);
  const int d = oracle::distance(oracle::codewords(ex.code));
  f.check(ex.code.length() == 13 && ex.code.dimension() == 6 && d == 3, fmt::format("parameters d={}", d));
  const BoundReport b = bound_cmg_kappa(13, 3, 3, 3, 2);
  f.check(b.value == 6 && b.value == ex.code.dimension(), fmt::format("cmg_kappa = {}", b.value));
  f.check(b.witness.lambda == 5 && b.witness.shortened_length == 4 && k_opt(4, 3, 2) == 1,
          "witness is not 5 + k_opt(4,3)");
  return f;
}

Failures example_3() {
  Failures f;
  const NamedCode ex = paper_example(3);
  const int d = oracle::distance(oracle::codewords(ex.code));
  f.check(ex.code.length() == 10 && ex.code.dimension() == 3 && d == 3, fmt::format("parameters d={}", d));
  f.check(kappa_b(2, 3, 2) == 1, fmt::format("kappa_B = {}", kappa_b(2, 3, 2)));
  f.check(griesmer_length(1, 3, 2) == 3, "G(1,3) != 3");
  const BoundReport b = bound_cmg_r(10, 3, 2, 3, 2);
  f.check(b.value == 3 && b.value == ex.code.dimension(), fmt::format("cmg_r = {}", b.value));
  f.check(b.witness.lambda == 2 && b.witness.shortened_length == 4 && k_opt(4, 3, 2) == 1,
          "witness is not 2 + k_opt(4,3)");
  return f;
}

Failures simplex_suite() {
  Failures f;
  for (const auto& [m, q] : {std::pair{3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    const std::string tag = fmt::format("S({},{})", m, q);
    const LinearCode s = simplex(m, q);
    const int n = (ipow(q, m) - 1) / (q - 1);
    const int d = oracle::distance(oracle::codewords(s));
    f.check(s.length() == n && s.dimension() == m && d == ipow(q, m - 1), tag + " parameters");
    f.check(griesmer_length(m, d, q) == n, tag + " Griesmer");
    const ResidualCode r = residual(s);
    f.check(r.code.length() == (ipow(q, m - 1) - 1) / (q - 1) && r.code.dimension() == m - 1 &&
                (m - 1 < 1 || is_simplex(r.code)),
            tag + " residual");
    for (int kappa = 2; kappa <= m; ++kappa) {
      const LocalityProfile p = compute_locality(s, ipow(q, kappa - 1), n);
      f.check(p.feasible && p.kappa == kappa, fmt::format("{} kappa {} -> {}", tag, kappa, p.kappa));
    }
  }
  return f;
}

Failures griesmer_properties() {
  Failures f;
  for (int q : {2, 3, 4}) {
    for (int a = 0; a <= 8; ++a) {
      for (int b = 0; b <= 8; ++b) {
        for (int delta = 1; delta <= 32; ++delta) {
          const long long lhs = griesmer_length(a, delta, q) + griesmer_length(b, ceil_div_pow(delta, q, a), q);
          f.check(lhs == griesmer_length(a + b, delta, q), fmt::format("q={} a={} b={} delta={}", q, a, b, delta));
        }
      }
    }
  }
  f.check(griesmer_dim(8, 5, 2) == 2 && griesmer_dim(7, 5, 2) == 1 && griesmer_dim(9, 5, 2) == 2,
          "G_k(7..9, 5) over GF(2)");
  return f;
}

Failures residual_property(std::uint64_t seed) {
  Failures f;
  std::mt19937_64 rng(seed);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int k = 1 + static_cast<int>(rng() % std::min(5, n));
    const LinearCode c = oracle::random_code(rng, 2, n, k);
    const auto words = oracle::codewords(c);
    const int d = oracle::distance(words);
    if (d < 1) continue;
    ++checked;
    const ResidualCode r = residual(c);
    f.check(r.code.length() == n - d && r.code.dimension() == c.dimension() - 1, "residual parameters");
    if (r.code.dimension() > 0) {
      f.check(oracle::distance(oracle::codewords(r.code)) >= (d + 1) / 2, "residual distance");
    }
    const ResChain chain = res_chain(c);
    f.check(static_cast<int>(chain.levels.size()) == c.dimension() + 1, "chain length");
    for (const auto& level : chain.levels) {
      const int h = oracle::entropy(words, level.coords, 2);
      f.check(h == level.entropy, "chain entropy");
      if (h > 0) {
        f.check(oracle::distance_on(words, level.coords) >= ceil_div_pow(d, 2, c.dimension() - h), "chain distance");
      }
    }
  }
  return f;
}

Failures polymatroid_property(std::uint64_t seed) {
  Failures f;
  std::mt19937_64 rng(seed + 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int q = std::array{2, 3, 4}[rng() % 3];
    const int n = 1 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % std::min(n, q == 2 ? 6 : 4));
    const LinearCode c = oracle::random_code(rng, q, n, k);
    const auto words = oracle::codewords(c);
    const CoordSet i = oracle::random_subset(rng, n);
    const CoordSet j = oracle::random_subset(rng, n);
    const int hi = entropy(c, i);
    const int hj = entropy(c, j);
    const int hu = entropy(c, i.united(j));
    const int hn = entropy(c, i.intersected(j));
    f.check(hi == oracle::entropy(words, i, q), "entropy vs oracle");
    f.check(0 <= hi && hi <= i.size(), "bounded");
    f.check(hn <= hi && hi <= hu, "monotone");
    f.check(hu + hn <= hi + hj, "submodular");
    const CoordSet cl = closure(c, i);
    f.check(cl == oracle::closure(words, i, n), "closure vs oracle");
    f.check(closure(c, cl) == cl, "idempotent");
    f.check(closure(c, i.intersected(j)).is_subset_of(cl) && i.is_subset_of(cl), "closure monotone");
    f.check(entropy(c, cl) == hi, "closure keeps entropy");
  }
  return f;
}

Failures dominance(std::uint64_t seed) {
  Failures f;
  std::mt19937_64 rng(seed + 2);
  int count = 0;
  while (count < 1200) {
    const int q = rng() % 2 == 0 ? 2 : 3;
    const int n = 4 + static_cast<int>(rng() % 37);
    const int delta = 2 + static_cast<int>(rng() % 8);
    const int r = 1 + static_cast<int>(rng() % 10);
    const int k = 1 + static_cast<int>(rng() % n);
    const int d = 1 + static_cast<int>(rng() % n);
    if (r > k || d < delta || r + delta - 1 > n) continue;
    ++count;
    const std::string tag = fmt::format("q={} n={} k={} d={} r={} delta={}", q, n, k, d, r, delta);
    f.check(bound_singleton_g(n, k, r, delta, q) <= bound_prakash(n, k, r, delta), "singleton_g > prakash at " + tag);
    f.check(bound_cmg_r(n, d, r, delta, q).value <= bound_cm_rdelta(n, d, r, delta, q).value,
            "cmg_r > cm_rdelta at " + tag);
  }
  return f;
}

Failures set_builder() {
  Failures f;
  std::vector<std::pair<LinearCode, LocalityProfile>> cases;
  for (int which : {1, 2, 3}) {
    const NamedCode ex = paper_example(which);
    cases.emplace_back(ex.code, profile_from_repair_sets(ex.code, ex.repair_sets, ex.delta));
  }
  const LinearCode s = simplex(4, 2);
  cases.emplace_back(s, compute_locality(s, 4, s.length()));
  for (const auto& [code, profile] : cases) {
    const auto words = oracle::codewords(code);
    const int d = oracle::distance(words);
    const int q = code.q();
    for (int lambda = 0; lambda <= code.dimension(); ++lambda) {
      const std::string tag = fmt::format("{} lambda={}", code.describe(), lambda);
      const BuiltSet b = build_low_entropy_set(code, profile, lambda);
      const int a = lambda / profile.kappa;
      const int rem = lambda % profile.kappa;
      const long long need = (a + 1) * griesmer_length(profile.kappa, profile.delta, q) -
                             griesmer_length(profile.kappa - rem, profile.delta, q);
      const int h = oracle::entropy(words, b.set, q);
      f.check(h <= lambda, tag + " entropy");
      f.check(b.set.size() >= need, tag + " size");
      const auto sh = oracle::shortened(words, b.set);
      f.check(oracle::log_q(sh.size(), q) == code.dimension() - h, tag + " shortened dimension");
      const int dsh = oracle::distance(sh);
      f.check(dsh < 0 || dsh >= d, tag + " shortened distance");
    }
  }
  return f;
}

Failures asymptotic_values() {
  Failures f;
  f.check(asympt_singleton_g(0.0, 12, 9, 2) == 0.25, "singleton_g(0) for (12,9,2)");
  f.check(asympt_singleton_g(0.0, 4, 3, 2) == 0.5, "singleton_g(0) for (4,3,2)");
  f.check(asympt_abhmt(0.0, 6, 3, 2, LcChoice::hamming) == 0.5, "abhmt-hamming(0) for (6,3,2)");
  const auto t = threshold_delta_t(6, 3, 2, LcChoice::hamming);
  f.check(t && std::abs(*t - 1.0 / 9.0) <= 1e-12, "delta_t(6,3,2)");
  const auto grid = uniform_grid(512);
  for (const auto& [r, delta] : {std::pair{4, 3}, {6, 3}, {12, 9}}) {
    const int kb = kappa_b(r, delta, 2);
    for (double x : grid) {
      f.check(std::abs(asympt_cmg(x, r, delta, 2, ROpt::plotkin) - asympt_cmg_plotkin_closed(x, kb, delta, 2)) <= 1e-6,
              fmt::format("minimization vs closed form r={} x={}", r, x));
    }
  }
  for (double x : grid) {
    f.check(asympt_abhmt(x, 6, 3, 2, LcChoice::hamming) <= asympt_singleton_g(x, 6, 3, 2),
            fmt::format("abhmt <= singleton_g at {}", x));
    f.check(asympt_singleton_g(x, 12, 9, 2) <= asympt_abhmt(x, 12, 9, 2, LcChoice::best),
            fmt::format("singleton_g <= abhmt at {}", x));
  }
  if (t) {
    const int ka = kappa_a(6, 3, 2, LcChoice::hamming).value_or(0);
    for (double x : grid) {
      if (x <= *t || x >= 1.0) continue;
      f.check(asympt_cmg_plotkin_closed(x, ka, 3, 2) < asympt_abhmt(x, 6, 3, 2, LcChoice::hamming),
              fmt::format("strict improvement at {}", x));
    }
  }
  return f;
}

Failures verify_paper() {
  Failures f;
  std::ostringstream out, err;
  const int code = cli::run({"lrc", "verify-paper", "--no-timestamp"}, out, err);
  f.check(code == 0, fmt::format("exit status {}", code));
  return f;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Failures()> run;
};

}  // namespace
}  // namespace lrc

int main(int argc, char** argv) {
  using namespace lrc;
  std::uint64_t seed = oracle::seed();
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) {
      seed = std::stoull(arg.substr(7));
    } else {
      std::cerr << "usage: lrc_acceptance [--seed=N]\n";
      return 2;
    }
  }
  oracle::set_seed(seed);
  const std::vector<Criterion> criteria{
      {1, "example 1 [10,4,4], locality (3,3), singleton_g tight", 1, example_1},
      {2, "example 2 [13,6,3], cmg_kappa = 6 via 5 + k_opt(4,3)", 1, example_2},
      {3, "example 3 [10,3,3], cmg_r = 3 via 2 + k_opt(4,3)", 1, example_3},
      {4, "simplex parameters, Griesmer, residual, dimension-locality", 30, simplex_suite},
      {5, "Griesmer additivity and non-log-convexity", 5, griesmer_properties},
      {6, "residual parameters on 200 random binary codes", 60, [seed] { return residual_property(seed); }},
      {7, "polymatroid and closure axioms on 1000 triples", 30, [seed] { return polymatroid_property(seed); }},
      {8, "dominance sweeps on 1200 parameter tuples", 60, [seed] { return dominance(seed); }},
      {9, "set-builder guarantees at every lambda", 60, set_builder},
      {10, "asymptotic intercepts, closed form, orderings, threshold", 10, asymptotic_values},
      {11, "verify-paper exits 0", 60, verify_paper},
  };
  std::cout << fmt::format("seed {}\n", seed);
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failures f;
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = f.ok() && in_time;
    failed += !pass;
    std::string detail = f.summary();
    if (!in_time) detail += fmt::format("{}over the {:g} s limit", detail.empty() ? "" : "; ", c.limit_seconds);
    std::cout << fmt::format("{} criterion {:>2}: {} ({:.3f} s){}\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                             detail.empty() ? "" : " -- " + detail);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

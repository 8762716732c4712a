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

#include <string>
#include <vector>

#include <fmt/format.h>

#include "lrc/bounds.hpp"
#include "lrc/cli/commands.hpp"
#include "lrc/constructions.hpp"
#include "lrc/locality.hpp"
#include "lrc/residual.hpp"

namespace lrc::cli {
namespace {

class Checks {
 public:
  explicit Checks(std::string group) : group_(std::move(group)) {}

  void expect(std::string name, bool pass, std::string detail) {
    results_.push_back({group_, std::move(name), pass, std::move(detail)});
  }

  template <typename T>
  void expect_eq(std::string name, const T& got, const T& want) {
    expect(std::move(name), got == want, fmt::format("got {}, want {}", got, want));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string group_;
  std::vector<CheckResult> results_;
};

std::string params(const LinearCode& code, Distance d) { return code.describe(d); }

void example_1(std::vector<CheckResult>& all) {
  Checks c("example-1");
  const NamedCode ex = paper_example(1);
  const Distance d = min_distance(ex.code);
  c.expect_eq("parameters", params(ex.code, d), std::string("[10,4,4]"));
  for (std::size_t i = 0; i < ex.repair_sets.size(); ++i) {
    const RepairSetCheck r = verify_repair_set(ex.code, ex.repair_sets[i], 3);
    c.expect(fmt::format("R{} {}", i + 1, ex.repair_sets[i].to_string()),
             r.valid && r.entropy == 3 && r.size == 6 && r.distance == 3,
             fmt::format("H={} |R|={} d={}", r.entropy, r.size, r.distance.value_or(0)));
  }
  const LocalityProfile p = compute_locality(ex.code, 3);
  c.expect("locality delta=3", p.feasible && p.kappa == 3 && p.r == 4,
           fmt::format("kappa={} r={} (want 3, 4)", p.kappa, p.r));
  c.expect_eq("singleton_g(10,4,4,3,2) = d", bound_singleton_g(10, 4, 4, 3, 2), d.value_or(-1));
  for (auto& r : c.take()) all.push_back(std::move(r));
}

void example_2(std::vector<CheckResult>& all) {
  Checks c("example-2");
  const NamedCode ex = paper_example(2);
  const Distance d = min_distance(ex.code);
  c.expect_eq("parameters", params(ex.code, d), std::string("[13,6,3]"));
  const BoundReport b = bound_cmg_kappa(13, 3, 3, 3, 2);
  c.expect_eq("cmg_kappa(13,3,3,3,2) = k", b.value, ex.code.dimension());
  c.expect("witness 5 + k_opt(4,3) = 6",
           b.witness.lambda == 5 && b.witness.shortened_length == 4 && k_opt(4, 3, 2) == 1,
           fmt::format("lambda={} length={} k_opt={}", b.witness.lambda.value_or(-1),
                       b.witness.shortened_length.value_or(-1), k_opt(4, 3, 2)));
  for (auto& r : c.take()) all.push_back(std::move(r));
}

void example_3(std::vector<CheckResult>& all) {
  Checks c("example-3");
  const NamedCode ex = paper_example(3);
  const Distance d = min_distance(ex.code);
  c.expect_eq("parameters", params(ex.code, d), std::string("[10,3,3]"));
  c.expect_eq("kappa_B(2,3,2)", kappa_b(2, 3, 2), 1);
  c.expect_eq("G(1,3)", griesmer_length(1, 3, 2), 3LL);
  const BoundReport b = bound_cmg_r(10, 3, 2, 3, 2);
  c.expect_eq("cmg_r(10,3,2,3,2) = k", b.value, ex.code.dimension());
  c.expect("witness 2 + k_opt(4,3) = 3",
           b.witness.lambda == 2 && b.witness.shortened_length == 4 && k_opt(4, 3, 2) == 1,
           fmt::format("lambda={} length={}", b.witness.lambda.value_or(-1), b.witness.shortened_length.value_or(-1)));
  for (auto& r : c.take()) all.push_back(std::move(r));
}

void simplex_suite(std::vector<CheckResult>& all) {
  Checks c("simplex");
  for (const auto& [m, q] : {std::pair{3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
    const LinearCode s = simplex(m, q);
    long long n = 0;
    long long top = 1;
    for (int i = 0; i < m; ++i) {
      n += top;
      if (i < m - 1) top *= q;
    }
    const Distance d = min_distance(s);
    const std::string tag = fmt::format("S({},{})", m, q);
    c.expect(tag + " parameters", s.length() == n && s.dimension() == m && d == static_cast<int>(top),
             params(s, d));
    c.expect_eq(tag + " Griesmer length", griesmer_length(m, static_cast<int>(top), q), n);
    const ResidualCode res = residual(s);
    c.expect(tag + " residual is S(m-1,q)", is_simplex(res.code) && res.code.dimension() == m - 1,
             params(res.code, std::nullopt));
    for (int kappa = 2; kappa <= m; ++kappa) {
      const SimplexLocality want = simplex_locality(m, q, kappa);
      const LocalityProfile p = compute_locality(s, want.delta_local, s.length());
      c.expect(fmt::format("{} kappa={} delta={}", tag, kappa, want.delta_local), p.feasible && p.kappa == kappa,
               fmt::format("computed kappa={}", p.kappa));
    }
  }
  for (auto& r : c.take()) all.push_back(std::move(r));
}

void griesmer_suite(std::vector<CheckResult>& all) {
  Checks c("griesmer");
  long long failures = 0;
  long long cases = 0;
  std::string first;
  for (int q : {2, 3, 4}) {
    for (int a = 0; a <= 8; ++a) {
      for (int b = 0; b <= 8; ++b) {
        for (int delta = 1; delta <= 32; ++delta) {
          ++cases;
          const long long lhs = griesmer_length(a, delta, q) +
                                griesmer_length(b, static_cast<int>(ceil_div_pow(delta, q, a)), q);
          if (lhs != griesmer_length(a + b, delta, q)) {
            if (failures++ == 0) first = fmt::format(" first at q={} a={} b={} delta={}", q, a, b, delta);
          }
        }
      }
    }
  }
  c.expect("additivity", failures == 0, fmt::format("{} of {} cases fail{}", failures, cases, first));
  const int g7 = griesmer_dim(7, 5, 2);
  const int g8 = griesmer_dim(8, 5, 2);
  const int g9 = griesmer_dim(9, 5, 2);
  c.expect("not log-convex at n=8, d=5", g7 == 1 && g8 == 2 && g9 == 2 && 2 * g8 > g7 + g9,
           fmt::format("G_k(7,5)={} G_k(8,5)={} G_k(9,5)={}", g7, g8, g9));
  for (auto& r : c.take()) all.push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> paper_checks() {
  std::vector<CheckResult> all;
  example_1(all);
  example_2(all);
  example_3(all);
  simplex_suite(all);
  griesmer_suite(all);
  return all;
}

}  // namespace lrc::cli

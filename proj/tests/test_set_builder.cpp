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

#include <gtest/gtest.h>

#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "lrc/set_builder.hpp"
#include "oracles.hpp"

namespace lrc {
namespace {

TEST(Correction, WholeRepairSetWhenDisjoint) {
  const NamedCode ex = paper_example(1);
  const CoordSet f = closure(ex.code, CoordSet{});
  const CoordSet r = closure(ex.code, ex.repair_sets[0]);
  const Correction c = correct_with_reschain(ex.code, f, r, 3, 3, 3);
  EXPECT_EQ(c.chain_element, r);
  EXPECT_EQ(c.result, closure(ex.code, f.united(r)));
}

TEST(Correction, Example1SecondRepairSet) {
  const NamedCode ex = paper_example(1);
  const CoordSet f = closure(ex.code, ex.repair_sets[0]);
  const CoordSet r = ex.repair_sets[1];
  const Correction c = correct_with_reschain(ex.code, f, r, 1, 3, 3);
  const auto words = oracle::codewords(ex.code);
  EXPECT_LE(oracle::entropy(words, c.result, 2), oracle::entropy(words, f, 2) + 1);
  EXPECT_GE(c.result.size(), f.size() + griesmer_length(1, 1, 2));
  EXPECT_EQ(closure(ex.code, c.result), c.result);
}

TEST(Correction, Preconditions) {
  const NamedCode ex = paper_example(1);
  const CoordSet f = closure(ex.code, ex.repair_sets[0]);
  const CoordSet r = ex.repair_sets[1];
  // H(R) - H(F n R) = 1 here, so alpha = 2 is too large.
  try {
    correct_with_reschain(ex.code, f, r, 2, 3, 3);
    FAIL() << "accepted alpha above the entropy gap";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("H(R) - H(F n R) >= alpha"), std::string::npos) << e.what();
  }
  EXPECT_THROW(correct_with_reschain(ex.code, f, r, 0, 3, 3), PreconditionError);
  EXPECT_THROW(correct_with_reschain(ex.code, f, r, 4, 3, 3), PreconditionError);
  // F must be closed.
  EXPECT_THROW(correct_with_reschain(ex.code, CoordSet{0, 1, 2, 4, 5}, r, 1, 3, 3), PreconditionError);
  // Local distance below delta.
  EXPECT_THROW(correct_with_reschain(ex.code, CoordSet{}, CoordSet{0, 1, 2}, 1, 3, 3), PreconditionError);
}

void check_all_lambdas(const LinearCode& code, const LocalityProfile& profile) {
  const auto words = oracle::codewords(code);
  const int d = oracle::distance(words);
  const int q = code.q();
  for (int lambda = 0; lambda <= code.dimension(); ++lambda) {
    const BuiltSet b = build_low_entropy_set(code, profile, lambda);
    const int a = lambda / profile.kappa;
    const int bb = lambda % profile.kappa;
    const long long need = (a + 1) * griesmer_length(profile.kappa, profile.delta, q) -
                           griesmer_length(profile.kappa - bb, profile.delta, q);
    const int h = oracle::entropy(words, b.set, q);
    ASSERT_LE(h, lambda);
    ASSERT_GE(b.set.size(), need);
    ASSERT_EQ(b.entropy, h);
    ASSERT_EQ(b.guaranteed_size, need);
    const auto sh = oracle::shortened(words, b.set);
    ASSERT_EQ(oracle::log_q(sh.size(), q), code.dimension() - h);
    const int dsh = oracle::distance(sh);
    if (dsh >= 0) {
      ASSERT_GE(dsh, d);
    }
    ASSERT_FALSE(b.trace.empty());
    EXPECT_EQ(b.trace.front().kind, BuildStep::Kind::start);
  }
}

TEST(BuildSet, PaperExamplesAndSimplex) {
  for (int which : {1, 2, 3}) {
    const NamedCode ex = paper_example(which);
    SCOPED_TRACE(ex.name);
    check_all_lambdas(ex.code, compute_locality(ex.code, ex.delta));
    check_all_lambdas(ex.code, profile_from_repair_sets(ex.code, ex.repair_sets, ex.delta));
  }
  const LinearCode s = simplex(4, 2);
  check_all_lambdas(s, compute_locality(s, 4));
  check_all_lambdas(s, compute_locality(s, 2));
}

TEST(BuildSet, Example1LambdaThree) {
  const NamedCode ex = paper_example(1);
  const BuiltSet b = build_low_entropy_set(ex.code, ex.repair_sets, 3, 3, 3);
  EXPECT_EQ(b.a, 1);
  EXPECT_EQ(b.b, 0);
  EXPECT_LE(b.entropy, 3);
  EXPECT_GE(b.size, 6);
}

TEST(BuildSet, Example2LambdaFive) {
  const NamedCode ex = paper_example(2);
  const BuiltSet b = build_low_entropy_set(ex.code, ex.repair_sets, 3, 3, 5);
  EXPECT_EQ(b.guaranteed_size, 9);
  EXPECT_LE(b.entropy, 5);
  EXPECT_GE(b.size, 9);
}

TEST(BuildSet, LambdaZeroIsClosureOfEmptySet) {
  const NamedCode ex = paper_example(3);
  const BuiltSet b = build_low_entropy_set(ex.code, ex.repair_sets, 1, 3, 0);
  EXPECT_EQ(b.set, closure(ex.code, CoordSet{}));
  EXPECT_EQ(b.entropy, 0);
}

TEST(BuildSet, Preconditions) {
  const NamedCode ex = paper_example(1);
  EXPECT_THROW(build_low_entropy_set(ex.code, ex.repair_sets, 3, 3, 5), PreconditionError);
  EXPECT_THROW(build_low_entropy_set(ex.code, ex.repair_sets, 3, 3, -1), PreconditionError);
  // kappa below the entropy of a declared set.
  EXPECT_THROW(build_low_entropy_set(ex.code, ex.repair_sets, 2, 3, 2), PreconditionError);
  // Sets that leave coordinate 4 uncovered.
  const std::vector<CoordSet> partial{ex.repair_sets[0], ex.repair_sets[1]};
  EXPECT_THROW(build_low_entropy_set(ex.code, partial, 3, 3, 2), PreconditionError);
}

}  // namespace
}  // namespace lrc

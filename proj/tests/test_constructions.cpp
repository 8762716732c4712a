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

#include <cmath>

#include "lrc/constructions.hpp"
#include "lrc/residual.hpp"
#include "oracles.hpp"

namespace lrc {
namespace {

TEST(Simplex, ParametersMatchOracle) {
  for (const auto& [m, q] : {std::pair{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    const LinearCode s = simplex(m, q);
    const int n = static_cast<int>((std::pow(q, m) - 1) / (q - 1));
    EXPECT_EQ(s.length(), n);
    EXPECT_EQ(s.dimension(), m);
    const auto words = oracle::codewords(s);
    EXPECT_EQ(oracle::distance(words), static_cast<int>(std::pow(q, m - 1)));
    // Constant weight: every nonzero codeword has weight q^(m-1).
    for (const auto& w : words) {
      int wt = 0;
      for (int x : w) wt += x != 0;
      if (wt) {
        EXPECT_EQ(wt, static_cast<int>(std::pow(q, m - 1)));
      }
    }
    EXPECT_TRUE(is_simplex(s));
  }
}

TEST(Simplex, RecognizesColumnPermutationsAndRejectsOthers) {
  const LinearCode s = simplex(3, 2);
  std::vector<int> keep{6, 5, 4, 3, 2, 1, 0};
  Matrix g(3, 7);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 7; ++j) g.at(i, j) = s.generator().at(i, keep[j]);
  }
  EXPECT_TRUE(is_simplex(LinearCode(GaloisField(2), g)));
  EXPECT_FALSE(is_simplex(puncture(s, CoordSet{0})));
  EXPECT_FALSE(is_simplex(paper_example(3).code));
  EXPECT_THROW(simplex(0, 2), std::invalid_argument);
}

TEST(PaperExamples, Parameters) {
  for (int which : {1, 2, 3}) {
    const NamedCode ex = paper_example(which);
    SCOPED_TRACE(ex.name);
    EXPECT_EQ(ex.code.length(), ex.n);
    EXPECT_EQ(ex.code.dimension(), ex.k);
    EXPECT_EQ(oracle::distance(oracle::codewords(ex.code)), ex.d);
  }
  EXPECT_THROW(paper_example(4), std::out_of_range);
}

TEST(PaperExamples, Optimality) {
  const OptimalityReport r1 = verify_optimality(paper_example(1));
  EXPECT_TRUE(r1.meets("singleton_g"));
  EXPECT_EQ(r1.singleton_g, 4);

  const OptimalityReport r2 = verify_optimality(paper_example(2));
  EXPECT_TRUE(r2.meets("cmg_kappa"));
  EXPECT_EQ(r2.cmg_kappa.value, 6);
  EXPECT_FALSE(r2.meets("singleton_g"));

  const OptimalityReport r3 = verify_optimality(paper_example(3));
  EXPECT_TRUE(r3.meets("cmg_r"));
  EXPECT_EQ(r3.cmg_r.value, 3);
  EXPECT_FALSE(r3.meets("singleton_g"));
}

TEST(PaperExamples, DeclaredVersusComputedLocality) {
  const OptimalityReport r2 = verify_optimality(paper_example(2));
  EXPECT_EQ(r2.declared.r, 5);
  EXPECT_EQ(r2.computed.r, 4);
  EXPECT_EQ(r2.declared.kappa, 3);
  const OptimalityReport r3 = verify_optimality(paper_example(3));
  EXPECT_EQ(r3.declared.r, 2);
  EXPECT_EQ(r3.declared.kappa, 1);
  EXPECT_EQ(r3.computed.kappa, 1);
}

}  // namespace
}  // namespace lrc

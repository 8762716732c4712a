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

#include <random>

#include "lrc/matrix.hpp"
#include "oracles.hpp"

namespace lrc {
namespace {

TEST(Matrix, FromRowsRejectsRaggedInput) {
  EXPECT_THROW(Matrix::from_rows({{1, 0}, {1}}), std::invalid_argument);
}

TEST(Matrix, RrefOfKnownMatrix) {
  const GaloisField f(2);
  const Matrix m = Matrix::from_rows({{1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}});
  const EchelonForm e = rref(f, m);
  EXPECT_EQ(e.rank(), 2);
  EXPECT_EQ(e.pivots, (std::vector<int>{0, 1}));
  EXPECT_EQ(e.reduced, Matrix::from_rows({{1, 0, 1, 0}, {0, 1, 1, 1}}));
}

TEST(Matrix, RankMatchesSpanSize) {
  std::mt19937_64 rng(oracle::seed());
  for (int q : {2, 3, 4, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 4);
      const int n = 1 + static_cast<int>(rng() % 6);
      const LinearCode c = oracle::random_code(rng, q, n, k);
      const auto words = oracle::codewords(c);
      EXPECT_EQ(c.dimension(), oracle::log_q(words.size(), q));
    }
  }
}

TEST(Matrix, LeftKernelAnnihilates) {
  std::mt19937_64 rng(oracle::seed() + 1);
  for (int q : {2, 3, 4, 7}) {
    const GaloisField f(q);
    for (int trial = 0; trial < 30; ++trial) {
      const int rows = 1 + static_cast<int>(rng() % 5);
      const int cols = 1 + static_cast<int>(rng() % 5);
      Matrix m(rows, cols);
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<Elem>(rng() % q);
      }
      const Matrix ker = left_kernel(f, m);
      EXPECT_EQ(ker.rows(), rows - rank(f, m));
      if (ker.rows() > 0) {
        EXPECT_EQ(rank(f, ker), ker.rows());
        const Matrix prod = mat_mul(f, ker, m);
        for (int i = 0; i < prod.rows(); ++i) {
          for (int j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod.at(i, j), 0);
        }
      }
    }
  }
}

TEST(Matrix, IndependentRowsAreGreedy) {
  const GaloisField f(3);
  const Matrix m = Matrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}, {1, 2, 1}});
  EXPECT_EQ(independent_rows(f, m), (std::vector<int>{0, 2}));
}

TEST(Matrix, TransposeAndSelect) {
  const Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(m.transposed(), Matrix::from_rows({{1, 4}, {2, 5}, {3, 6}}));
  const std::vector<int> cols{2, 0};
  EXPECT_EQ(m.select_columns(cols), Matrix::from_rows({{3, 1}, {6, 4}}));
  EXPECT_EQ(Matrix::identity(2), Matrix::from_rows({{1, 0}, {0, 1}}));
}

}  // namespace
}  // namespace lrc

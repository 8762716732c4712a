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

#include <stdexcept>
#include <vector>

#include "lrc/galois.hpp"
#include "oracles.hpp"

namespace lrc {
namespace {

std::vector<int> prime_powers_up_to(int limit) {
  std::vector<int> out;
  for (int q = 2; q <= limit; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

TEST(Galois, RecognizesPrimePowers) {
  EXPECT_TRUE(is_prime_power(2));
  EXPECT_TRUE(is_prime_power(256));
  EXPECT_TRUE(is_prime_power(243));
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_FALSE(is_prime_power(6));
  EXPECT_FALSE(is_prime_power(100));
  // Brute force: q is a prime power iff its smallest prime factor divides out completely.
  std::vector<int> expected;
  for (int q = 2; q <= 256; ++q) {
    int p = 2;
    while (q % p != 0) ++p;
    int rest = q;
    while (rest % p == 0) rest /= p;
    if (rest == 1) expected.push_back(q);
  }
  EXPECT_EQ(expected.size(), 70u);
  EXPECT_EQ(prime_powers_up_to(256), expected);
}

TEST(Galois, RejectsNonPrimePowerWithFactorization) {
  try {
    GaloisField f(6);
    FAIL() << "GF(6) constructed";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("2 * 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(GaloisField(257), std::invalid_argument);
  EXPECT_THROW(GaloisField(1), std::invalid_argument);
}

TEST(Galois, TablesMatchPolynomialArithmetic) {
  for (int q : prime_powers_up_to(256)) {
    const GaloisField f(q);
    const std::vector<int> modulus(f.modulus().begin(), f.modulus().end());
    const int p = f.characteristic();
    // Every pair for small fields, a stride through the rest.
    const int step = q <= 32 ? 1 : 7;
    for (int a = 0; a < q; a += step) {
      for (int b = 0; b < q; ++b) {
        ASSERT_EQ(f.mul(static_cast<Elem>(a), static_cast<Elem>(b)), oracle::poly_mul(a, b, p, modulus))
            << "GF(" << q << ") " << a << "*" << b;
        ASSERT_EQ(f.add(static_cast<Elem>(a), static_cast<Elem>(b)), oracle::poly_add(a, b, p));
      }
    }
  }
}

TEST(Galois, Gf4ByHand) {
  // x^2 = x + 1 with 2 = x and 3 = x + 1.
  const GaloisField f(4);
  EXPECT_EQ(f.mul(2, 2), 3);
  EXPECT_EQ(f.mul(2, 3), 1);
  EXPECT_EQ(f.mul(3, 3), 2);
  EXPECT_EQ(f.add(2, 3), 1);
}

TEST(Galois, FieldAxioms) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 125, 128, 243, 256}) {
    const GaloisField f(q);
    for (int a = 0; a < q; ++a) {
      const Elem x = static_cast<Elem>(a);
      ASSERT_EQ(f.add(x, f.neg(x)), 0);
      ASSERT_EQ(f.mul(x, 1), x);
      ASSERT_EQ(f.add(x, 0), x);
      if (a != 0) {
        ASSERT_EQ(f.mul(x, f.inv(x)), 1) << "q=" << q << " a=" << a;
        ASSERT_EQ(f.div(x, x), 1);
      }
    }
    if (q <= 27) {
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
          for (int c = 0; c < q; ++c) {
            const Elem x = a, y = b, z = c;
            ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
            ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
          }
        }
      }
    }
  }
}

TEST(Galois, PrimitiveElementGeneratesGroup) {
  for (int q : prime_powers_up_to(256)) {
    const GaloisField f(q);
    EXPECT_EQ(f.multiplicative_order(f.primitive_element()), q - 1) << "q=" << q;
    EXPECT_EQ(f.pow(f.primitive_element(), q - 1), 1);
  }
}

TEST(Galois, PowAndInverseEdgeCases) {
  const GaloisField f(9);
  EXPECT_EQ(f.pow(0, 0), 1);
  EXPECT_EQ(f.pow(0, 3), 0);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.characteristic(), 3);
}

TEST(Galois, Factorize) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(243), (std::vector<std::pair<int, int>>{{3, 5}}));
}

}  // namespace
}  // namespace lrc

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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/coord_set.hpp"
#include "lrc/galois.hpp"
#include "lrc/matrix.hpp"

namespace lrc {

// Minimum distance of a code. Empty when the code has no nonzero codeword
// (dimension 0), in which case every distance condition is vacuous.
using Distance = std::optional<int>;

// Largest number of codewords an exhaustive enumeration will visit.
inline constexpr std::uint64_t kDefaultMaxCodewords = std::uint64_t{1} << 24;

// Raised when an exhaustive computation would exceed its enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A linear [n, k] code over GF(q) given by a generator matrix.
//
// The generator is normalized to full row rank on construction: rows that are
// linear combinations of earlier rows are dropped. The row count before
// normalization is kept as declared_dimension() so callers can warn about
// rank-deficient input. Dimension 0 is allowed and marks a degenerate code,
// e.g. the restriction of a code to a set of zero columns.
class LinearCode {
 public:
  LinearCode(GaloisField field, Matrix generator);

  const GaloisField& field() const { return field_; }
  int q() const { return field_.order(); }
  int length() const { return generator_.cols(); }
  int dimension() const { return generator_.rows(); }
  int declared_dimension() const { return declared_dimension_; }
  bool rank_deficient() const { return declared_dimension_ != dimension(); }
  bool is_zero_dimensional() const { return dimension() == 0; }

  const Matrix& generator() const { return generator_; }

  // Codeword for a message of length k.
  std::vector<Elem> encode(std::span<const Elem> message) const;

  // "[n,k]" or "[n,k,d]" when a distance is supplied.
  std::string describe(Distance d = std::nullopt) const;

 private:
  GaloisField field_;
  Matrix generator_;
  int declared_dimension_ = 0;
};

// Reduced row-echelon form of the generator and its rank.
EchelonForm rref(const LinearCode& code);

// H(I): dimension of the restriction to I, i.e. the rank of the columns in I.
// Throws std::out_of_range for indices >= n.
int entropy(const LinearCode& code, const CoordSet& coords);

// All coordinates whose generator column lies in the span of the columns in I.
CoordSet closure(const LinearCode& code, const CoordSet& coords);

// C|_I, with coordinates renumbered 0..|I|-1 in increasing order. The result
// has dimension H(I) and may be zero-dimensional.
LinearCode restriction(const LinearCode& code, const CoordSet& coords);

// C/I: codewords vanishing on I, with the coordinates of I removed. The
// result has length n - |I| and dimension k - H(I).
LinearCode shorten(const LinearCode& code, const CoordSet& coords);

// Restriction to the complement of I.
LinearCode puncture(const LinearCode& code, const CoordSet& coords);

struct MinWeightCodeword {
  Distance weight;
  // Lexicographically smallest message (by element index, first symbol most
  // significant) whose codeword has the minimum weight. Empty if k = 0.
  std::vector<Elem> message;
  std::vector<Elem> codeword;
};

// Exhaustive search over all q^k - 1 nonzero messages.
// Throws CapExceeded if q^k > max_codewords.
MinWeightCodeword min_weight_codeword(const LinearCode& code,
                                      std::uint64_t max_codewords = kDefaultMaxCodewords);

Distance min_distance(const LinearCode& code, std::uint64_t max_codewords = kDefaultMaxCodewords);

// q^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(const LinearCode& code);

// Support of a vector as a coordinate set.
CoordSet support(std::span<const Elem> word);

}  // namespace lrc

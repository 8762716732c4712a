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

#include "lrc/linear_code.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace lrc {
namespace {

void check_coords(const LinearCode& code, const CoordSet& coords) {
  if (coords.bound() > code.length()) {
    throw std::out_of_range(fmt::format("coordinate {} outside code of length {}", coords.bound(), code.length()));
  }
}

// Generator rows are kept as given when they are already independent, so
// derived codes keep declared_dimension() == dimension().
LinearCode full_rank_code(const GaloisField& field, const Matrix& gen) {
  const auto rows = independent_rows(field, gen);
  if (static_cast<int>(rows.size()) == gen.rows()) return LinearCode(field, gen);
  return LinearCode(field, gen.select_rows(rows));
}

}  // namespace

LinearCode::LinearCode(GaloisField field, Matrix generator)
    : field_(std::move(field)), declared_dimension_(generator.rows()) {
  for (int i = 0; i < generator.rows(); ++i) {
    for (Elem x : generator.row(i)) {
      if (x >= field_.order()) {
        throw std::invalid_argument(fmt::format("generator entry {} is not an element of GF({})", x, field_.order()));
      }
    }
  }
  const auto rows = independent_rows(field_, generator);
  generator_ = static_cast<int>(rows.size()) == generator.rows() ? std::move(generator)
                                                                 : generator.select_rows(rows);
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  return vec_mat(field_, message, generator_);
}

std::string LinearCode::describe(Distance d) const {
  if (d) return fmt::format("[{},{},{}]", length(), dimension(), *d);
  return fmt::format("[{},{}]", length(), dimension());
}

EchelonForm rref(const LinearCode& code) { return rref(code.field(), code.generator()); }

int entropy(const LinearCode& code, const CoordSet& coords) {
  check_coords(code, coords);
  if (coords.empty() || code.dimension() == 0) return 0;
  return rank(code.field(), code.generator().select_columns(coords.members()));
}

CoordSet closure(const LinearCode& code, const CoordSet& coords) {
  check_coords(code, coords);
  const int h = entropy(code, coords);
  std::vector<int> out;
  for (int e = 0; e < code.length(); ++e) {
    if (coords.contains(e) || entropy(code, coords.with(e)) == h) out.push_back(e);
  }
  return CoordSet(std::move(out));
}

LinearCode restriction(const LinearCode& code, const CoordSet& coords) {
  check_coords(code, coords);
  return full_rank_code(code.field(), code.generator().select_columns(coords.members()));
}

LinearCode shorten(const LinearCode& code, const CoordSet& coords) {
  check_coords(code, coords);
  const GaloisField& f = code.field();
  const Matrix kernel = left_kernel(f, code.generator().select_columns(coords.members()));
  const Matrix words = kernel.rows() == 0 ? Matrix(0, code.length()) : mat_mul(f, kernel, code.generator());
  return full_rank_code(f, words.select_columns(coords.complement(code.length()).members()));
}

LinearCode puncture(const LinearCode& code, const CoordSet& coords) {
  check_coords(code, coords);
  return restriction(code, coords.complement(code.length()));
}

std::uint64_t codeword_count(const LinearCode& code) {
  std::uint64_t count = 1;
  const auto q = static_cast<std::uint64_t>(code.q());
  for (int i = 0; i < code.dimension(); ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    count *= q;
  }
  return count;
}

MinWeightCodeword min_weight_codeword(const LinearCode& code, std::uint64_t max_codewords) {
  const int k = code.dimension();
  const int n = code.length();
  const int q = code.q();
  if (k == 0) return {};
  const std::uint64_t total = codeword_count(code);
  if (total > max_codewords) {
    throw CapExceeded(fmt::format(
        "exhaustive enumeration of {}^{} codewords exceeds the cap of {} codewords; raise the cap to proceed",
        q, k, max_codewords));
  }

  const GaloisField& f = code.field();
  const Matrix& g = code.generator();
  // scaled[(j * q + s) * n + c] = s * g[j][c]
  std::vector<Elem> scaled(static_cast<std::size_t>(k) * q * n);
  for (int j = 0; j < k; ++j) {
    for (int s = 0; s < q; ++s) {
      for (int c = 0; c < n; ++c) {
        scaled[(static_cast<std::size_t>(j) * q + s) * n + c] = f.mul(static_cast<Elem>(s), g.at(j, c));
      }
    }
  }
  auto add_row = [&](std::vector<Elem>& word, int j, Elem s) {
    const Elem* row = &scaled[(static_cast<std::size_t>(j) * q + s) * n];
    for (int c = 0; c < n; ++c) word[c] = f.add(word[c], row[c]);
  };

  std::vector<Elem> message(k, 0);
  std::vector<Elem> word(n, 0);
  MinWeightCodeword best;
  int best_weight = std::numeric_limits<int>::max();
  // Odometer over messages in lexicographic order, last symbol fastest.
  for (std::uint64_t step = 1; step < total; ++step) {
    int j = k - 1;
    while (message[j] == q - 1) {
      add_row(word, j, f.sub(0, message[j]));
      message[j] = 0;
      --j;
    }
    const Elem next = static_cast<Elem>(message[j] + 1);
    add_row(word, j, f.sub(next, message[j]));
    message[j] = next;

    const int w = static_cast<int>(std::count_if(word.begin(), word.end(), [](Elem x) { return x != 0; }));
    if (w < best_weight) {
      best_weight = w;
      best.message = message;
      best.codeword = word;
    }
  }
  best.weight = best_weight;
  return best;
}

Distance min_distance(const LinearCode& code, std::uint64_t max_codewords) {
  return min_weight_codeword(code, max_codewords).weight;
}

CoordSet support(std::span<const Elem> word) {
  std::vector<int> s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != 0) s.push_back(static_cast<int>(i));
  }
  return CoordSet(std::move(s));
}

}  // namespace lrc

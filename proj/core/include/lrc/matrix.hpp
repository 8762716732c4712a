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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

// Dense row-major matrix of field element indices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  // Throws std::invalid_argument on ragged input.
  static Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& at(int r, int c) { return data_[offset(r, c)]; }
  Elem at(int r, int c) const { return data_[offset(r, c)]; }

  std::span<Elem> row(int r) { return {data_.data() + offset(r, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const Elem> row(int r) const {
    return {data_.data() + offset(r, 0), static_cast<std::size_t>(cols_)};
  }

  void swap_rows(int a, int b);
  void append_row(std::span<const Elem> values);

  // Submatrix keeping the given columns, in the given order.
  Matrix select_columns(std::span<const int> cols) const;
  // Submatrix keeping the given rows, in the given order.
  Matrix select_rows(std::span<const int> rows) const;
  Matrix transposed() const;

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t offset(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct EchelonForm {
  // Reduced row-echelon form with zero rows removed.
  Matrix reduced;
  // Pivot column of each row of `reduced`.
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(pivots.size()); }
};

// Gauss-Jordan elimination over GF(q).
EchelonForm rref(const GaloisField& field, Matrix m);

int rank(const GaloisField& field, const Matrix& m);

// Basis (as rows) of {x : x * m = 0}.
Matrix left_kernel(const GaloisField& field, const Matrix& m);

// Indices of a maximal set of linearly independent rows, chosen greedily
// in row order.
std::vector<int> independent_rows(const GaloisField& field, const Matrix& m);

// x * m for a row vector x of length m.rows().
std::vector<Elem> vec_mat(const GaloisField& field, std::span<const Elem> x, const Matrix& m);

Matrix mat_mul(const GaloisField& field, const Matrix& a, const Matrix& b);

}  // namespace lrc

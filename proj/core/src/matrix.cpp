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

#include "lrc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j] < 0 || rows[i][j] >= kMaxFieldOrder) {
        throw std::invalid_argument("matrix entry outside [0, 256)");
      }
      m.at(i, j) = static_cast<Elem>(rows[i][j]);
    }
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void Matrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
  if (static_cast<int>(values.size()) != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::select_columns(std::span<const int> cols) const {
  Matrix out(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, static_cast<int>(j)) = at(i, cols[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const int> rows) const {
  Matrix out(static_cast<int>(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(row(rows[i]).begin(), row(rows[i]).end(), out.row(static_cast<int>(i)).begin());
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

std::vector<std::vector<int>> Matrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

EchelonForm rref(const GaloisField& f, Matrix m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Elem scale = f.inv(m.at(r, c));
    for (auto& x : m.row(r)) x = f.mul(x, scale);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Elem factor = f.neg(m.at(i, c));
      auto dst = m.row(i);
      auto src = m.row(r);
      for (int j = c; j < m.cols(); ++j) dst[j] = f.add(dst[j], f.mul(factor, src[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<int> keep(r);
  for (int i = 0; i < r; ++i) keep[i] = i;
  Matrix reduced = r == m.rows() ? std::move(m) : m.select_rows(keep);
  return {std::move(reduced), std::move(pivots)};
}

int rank(const GaloisField& f, const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(f, m).rank();
}

Matrix left_kernel(const GaloisField& f, const Matrix& m) {
  // x * m = 0  <=>  m^T x^T = 0.
  const Matrix mt = m.transposed();
  const int nvars = m.rows();
  const EchelonForm e = rref(f, mt);
  std::vector<bool> is_pivot(nvars, false);
  for (int p : e.pivots) is_pivot[p] = true;

  Matrix basis(0, nvars);
  for (int free = 0; free < nvars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(nvars, 0);
    v[free] = 1;
    for (int i = 0; i < e.rank(); ++i) v[e.pivots[i]] = f.neg(e.reduced.at(i, free));
    basis.append_row(v);
  }
  return basis;
}

std::vector<int> independent_rows(const GaloisField& f, const Matrix& m) {
  std::vector<int> chosen;
  Matrix acc(0, m.cols());
  int current_rank = 0;
  for (int i = 0; i < m.rows(); ++i) {
    Matrix trial = acc;
    trial.append_row(m.row(i));
    const int r = rank(f, trial);
    if (r > current_rank) {
      acc = std::move(trial);
      current_rank = r;
      chosen.push_back(i);
    }
  }
  return chosen;
}

std::vector<Elem> vec_mat(const GaloisField& f, std::span<const Elem> x, const Matrix& m) {
  if (static_cast<int>(x.size()) != m.rows()) throw std::invalid_argument("vector/matrix size mismatch");
  std::vector<Elem> out(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    const auto r = m.row(i);
    for (int j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x[i], r[j]));
  }
  return out;
}

Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const auto v = vec_mat(f, a.row(i), b);
    std::copy(v.begin(), v.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace lrc

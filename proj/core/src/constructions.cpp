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

#include "lrc/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace lrc {
namespace {

// Scales a nonzero column so that its first nonzero entry is 1.
std::vector<Elem> normalized(const GaloisField& f, std::vector<Elem> col) {
  const auto lead = std::find_if(col.begin(), col.end(), [](Elem e) { return e != 0; });
  if (lead == col.end()) return col;
  const Elem s = f.inv(*lead);
  for (Elem& e : col) e = f.mul(e, s);
  return col;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

std::vector<CoordSet> one_based_sets(std::initializer_list<std::vector<int>> sets, int n) {
  std::vector<CoordSet> out;
  for (const auto& s : sets) out.push_back(CoordSet::from_one_based(s, n));
  return out;
}

CoordSet range_set(int first, int last) {
  std::vector<int> m;
  for (int i = first; i <= last; ++i) m.push_back(i - 1);
  return CoordSet(std::move(m));
}

}  // namespace

LinearCode simplex(int m, int q) {
  if (m < 2) throw std::invalid_argument(fmt::format("simplex code needs m >= 2, got {}", m));
  const GaloisField f(q);
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= q;
    if (total > (1LL << 20)) throw std::invalid_argument(fmt::format("S({}, {}) is too long", m, q));
  }
  std::vector<std::vector<Elem>> cols;
  std::vector<Elem> v(m, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long x = idx;
    for (int i = m - 1; i >= 0; --i) {
      v[i] = static_cast<Elem>(x % q);
      x /= q;
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (lead != v.end() && *lead == 1) cols.push_back(v);
  }
  Matrix g(m, static_cast<int>(cols.size()));
  for (int j = 0; j < g.cols(); ++j) {
    for (int i = 0; i < m; ++i) g.at(i, j) = cols[j][i];
  }
  return LinearCode(f, std::move(g));
}

bool is_simplex(const LinearCode& code) {
  const int k = code.dimension();
  const int q = code.q();
  if (k < 1) return false;
  long long expected = 0;
  for (long long p = 1, i = 0; i < k; ++i, p *= q) expected += p;
  if (code.length() != expected) return false;
  std::set<std::vector<Elem>> seen;
  const Matrix& g = code.generator();
  for (int j = 0; j < g.cols(); ++j) {
    std::vector<Elem> col(k);
    for (int i = 0; i < k; ++i) col[i] = g.at(i, j);
    if (std::all_of(col.begin(), col.end(), [](Elem e) { return e == 0; })) return false;
    if (!seen.insert(normalized(code.field(), std::move(col))).second) return false;
  }
  return true;
}

NamedCode paper_example(int which) {
  const GaloisField f2(2);
  switch (which) {
    case 1: {
      LinearCode code(f2, Matrix::from_rows({
                              {1, 0, 0, 0, 1, 0, 1, 1, 1, 1},
                              {0, 1, 0, 0, 1, 1, 0, 1, 1, 1},
                              {0, 0, 1, 0, 0, 1, 0, 1, 0, 1},
                              {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
                          }));
      return {"example-1", std::move(code), 10, 4, 4, 3,
              one_based_sets({{1, 2, 3, 5, 6, 8}, {2, 3, 6, 7, 9, 10}, {1, 4, 6, 7, 8, 10}}, 10),
              4, 3, "singleton_g"};
    }
    case 2: {
      const LinearCode c1 = simplex(3, 2);
      const LinearCode c2 = puncture(c1, CoordSet{6});
      LinearCode code(f2, direct_sum(c1.generator(), c2.generator()));
      return {"example-2", std::move(code), 13, 6, 3, 3, {range_set(1, 7), range_set(8, 13)}, 5, 3, "cmg_kappa"};
    }
    case 3: {
      LinearCode code(f2, Matrix::from_rows({
                              {1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                              {0, 0, 0, 0, 1, 1, 1, 0, 0, 0},
                              {0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
                          }));
      return {"example-3", std::move(code), 10, 3, 3, 3, {range_set(1, 4), range_set(5, 7), range_set(8, 10)},
              2, 1, "cmg_r"};
    }
    default:
      throw std::out_of_range(fmt::format("no example {} (choose 1, 2 or 3)", which));
  }
}

bool OptimalityReport::meets(const std::string& bound) const {
  return std::find(met.begin(), met.end(), bound) != met.end();
}

OptimalityReport verify_optimality(const NamedCode& named, std::optional<int> delta, std::optional<int> size_cap,
                                   std::uint64_t max_codewords) {
  const LinearCode& code = named.code;
  OptimalityReport rep;
  rep.name = named.name;
  rep.n = code.length();
  rep.k = code.dimension();
  rep.d = min_distance(code, max_codewords);
  rep.delta = delta.value_or(named.delta);
  rep.computed = compute_locality(code, rep.delta, size_cap, max_codewords);
  rep.declared = profile_from_repair_sets(code, named.repair_sets, rep.delta, max_codewords);
  if (!rep.computed.feasible || !rep.d || rep.k < 1) return rep;

  const int q = code.q();
  const int d = *rep.d;
  const int r = rep.computed.r;
  rep.singleton_g = bound_singleton_g(rep.n, rep.k, r, rep.delta, q);
  rep.cmg_kappa = bound_cmg_kappa(rep.n, d, rep.computed.kappa, rep.delta, q);
  rep.cmg_r = bound_cmg_r(rep.n, d, r, rep.delta, q);
  if (rep.singleton_g == d) rep.met.emplace_back("singleton_g");
  if (rep.cmg_kappa.value == rep.k) rep.met.emplace_back("cmg_kappa");
  if (rep.cmg_r.value == rep.k) rep.met.emplace_back("cmg_r");
  return rep;
}

}  // namespace lrc

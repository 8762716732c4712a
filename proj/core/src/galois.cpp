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

#include "lrc/galois.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace lrc {
namespace {

struct ConwayPolynomial {
  int p;
  int m;
  // Coefficients c_0 .. c_m, monic.
  std::array<int, 9> coeffs;
};

// Conway polynomials for every p^m <= 256 with m >= 2.
constexpr std::array<ConwayPolynomial, 16> kConway = {{
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {7, 2, {3, 6, 1}},
    {11, 2, {2, 7, 1}},
    {13, 2, {2, 12, 1}},
}};

std::string describe_factorization(const std::vector<std::pair<int, int>>& f) {
  std::string out;
  for (const auto& [prime, exp] : f) {
    if (!out.empty()) out += " * ";
    out += exp == 1 ? std::to_string(prime) : fmt::format("{}^{}", prime, exp);
  }
  return out;
}

// Digits of an element index in base p, lowest first, padded to m.
std::vector<int> to_digits(int value, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int value = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) value = value * p + *it;
  return value;
}

}  // namespace

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int f = 2; f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e > 0) out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime_power(int q) { return q >= 2 && factorize(q).size() == 1; }

GaloisField::GaloisField(int q) {
  if (q < 2 || q > kMaxFieldOrder) {
    throw std::invalid_argument(
        fmt::format("field order {} outside supported range [2, {}]", q, kMaxFieldOrder));
  }
  const auto factors = factorize(q);
  if (factors.size() != 1) {
    throw std::invalid_argument(fmt::format("field order {} is not a prime power ({} = {})", q, q,
                                            describe_factorization(factors)));
  }

  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = factors.front().first;
  t->m = factors.front().second;
  const int p = t->p;
  const int m = t->m;
  const auto qq = static_cast<std::size_t>(q);
  t->add.resize(qq * qq);
  t->mul.resize(qq * qq);
  t->neg.resize(qq);
  t->inv.resize(qq);

  if (m == 1) {
    for (int a = 0; a < q; ++a) {
      t->neg[a] = static_cast<Elem>((q - a) % q);
      for (int b = 0; b < q; ++b) {
        t->add[a * qq + b] = static_cast<Elem>((a + b) % q);
        t->mul[a * qq + b] = static_cast<Elem>((a * b) % q);
      }
    }
  } else {
    const auto it = std::find_if(kConway.begin(), kConway.end(),
                                 [&](const auto& c) { return c.p == p && c.m == m; });
    if (it == kConway.end()) {
      throw std::logic_error(fmt::format("no defining polynomial for GF({}^{})", p, m));
    }
    t->modulus.assign(it->coeffs.begin(), it->coeffs.begin() + m + 1);

    for (int a = 0; a < q; ++a) {
      const auto da = to_digits(a, p, m);
      std::vector<int> dn(m);
      for (int i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
      t->neg[a] = static_cast<Elem>(from_digits(dn, p));
      for (int b = 0; b < q; ++b) {
        const auto db = to_digits(b, p, m);
        std::vector<int> ds(m);
        for (int i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
        t->add[a * qq + b] = static_cast<Elem>(from_digits(ds, p));
      }
    }

    // Powers of x modulo the defining polynomial give exp/log tables.
    std::vector<int> exp_table(q - 1);
    std::vector<int> log_table(q, -1);
    std::vector<int> cur(m, 0);
    cur[0] = 1;
    for (int e = 0; e < q - 1; ++e) {
      const int v = from_digits(cur, p);
      if (log_table[v] != -1) {
        throw std::logic_error(fmt::format("defining polynomial of GF({}) is not primitive", q));
      }
      exp_table[e] = v;
      log_table[v] = e;
      // cur *= x, then reduce x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
      const int top = cur[m - 1];
      for (int i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < m; ++i) cur[i] = ((cur[i] - top * t->modulus[i]) % p + p) % p;
    }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        Elem v = 0;
        if (a != 0 && b != 0) v = static_cast<Elem>(exp_table[(log_table[a] + log_table[b]) % (q - 1)]);
        t->mul[a * qq + b] = v;
      }
    }
  }

  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (t->mul[a * qq + b] == 1) {
        t->inv[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  for (int g = 1; g < q && t->primitive == 0; ++g) {
    int order = 1;
    for (int x = g; x != 1; x = t->mul[x * qq + g]) ++order;
    if (order == q - 1) t->primitive = static_cast<Elem>(g);
  }
  t_ = std::move(t);
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(q)");
  return t_->inv[a];
}

Elem GaloisField::pow(Elem a, unsigned e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

int GaloisField::multiplicative_order(Elem a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  int order = 1;
  for (Elem x = a; x != 1; x = mul(x, a)) ++order;
  return order;
}

}  // namespace lrc

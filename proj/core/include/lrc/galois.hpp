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
#include <memory>
#include <span>
#include <vector>

namespace lrc {

// An element of GF(q) is identified by its index in [0, q). Index 0 is the
// additive identity and index 1 the multiplicative identity. For q = p^m the
// index sum_i c_i p^i stands for the polynomial sum_i c_i x^i reduced modulo
// the field's defining polynomial.
using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 256;

// Arithmetic in GF(q) for prime powers 2 <= q <= 256.
//
// Addition and multiplication are full q x q lookup tables, so a field object
// is a shared handle to immutable tables and copies are cheap. Extension
// fields are built from a fixed Conway polynomial per (p, m), which makes the
// element numbering reproducible across runs and platforms.
class GaloisField {
 public:
  // Throws std::invalid_argument if q is not a prime power in [2, 256].
  explicit GaloisField(int q);

  int order() const { return t_->q; }
  int characteristic() const { return t_->p; }
  int degree() const { return t_->m; }

  // Defining polynomial, lowest-degree coefficient first. Empty for prime q.
  std::span<const int> modulus() const { return t_->modulus; }

  // A primitive element: its powers enumerate every nonzero element.
  Elem primitive_element() const { return t_->primitive; }

  Elem add(Elem a, Elem b) const { return t_->add[index(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }
  Elem neg(Elem a) const { return t_->neg[a]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[index(a, b)]; }
  // Throws std::domain_error on a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // a^e for e >= 0, with 0^0 = 1.
  Elem pow(Elem a, unsigned e) const;

  // Multiplicative order of a nonzero element.
  int multiplicative_order(Elem a) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.order() == b.order();
  }

 private:
  struct Tables {
    int q = 0;
    int p = 0;
    int m = 0;
    Elem primitive = 0;
    std::vector<int> modulus;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<Elem> inv;
  };

  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(t_->q) + b;
  }

  std::shared_ptr<const Tables> t_;
};

// Factorization of n into (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<int, int>> factorize(int n);

// True iff q = p^m for a prime p and m >= 1.
bool is_prime_power(int q);

}  // namespace lrc

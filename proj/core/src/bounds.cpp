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

#include "lrc/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>

#include "lrc/galois.hpp"
#include "lrc/residual.hpp"

namespace lrc {
namespace {

using boost::multiprecision::cpp_int;

void require_field(int q) {
  if (!is_prime_power(q)) throw std::invalid_argument(fmt::format("q = {} is not a prime power", q));
}

// Largest k with q^k <= m, for m >= 1.
int floor_log(long long m, int q) {
  int k = 0;
  long long p = q;
  while (p <= m) {
    ++k;
    if (p > std::numeric_limits<long long>::max() / q) break;
    p *= q;
  }
  return k;
}

// Cardinality bound from Plotkin, nullopt when not applicable. Binary codes
// use the sharper form M <= 2 floor(d / (2d - n)) for even d (4d at n = 2d),
// and the odd case through A(n, d) = A(n + 1, d + 1).
std::optional<long long> plotkin_size(int n, int d, int q) {
  if (q == 2) {
    int ne = n;
    int de = d;
    if (d % 2 == 1) {
      ne = n + 1;
      de = d + 1;
    }
    if (ne == 2 * de) return 4LL * de;
    if (2 * de > ne) return std::max(1LL, 2LL * (de / (2 * de - ne)));
    return std::nullopt;
  }
  const long long num = static_cast<long long>(q) * d;
  const long long den = num - static_cast<long long>(q - 1) * n;
  if (den <= 0) return std::nullopt;
  return std::max(1LL, num / den);
}

struct Term {
  int value;
  int length;
};

}  // namespace

long long griesmer_length(int k, int d, int q) {
  if (k < 0 || d < 1) throw std::invalid_argument(fmt::format("G({}, {}) needs k >= 0 and d >= 1", k, d));
  require_field(q);
  long long total = 0;
  for (int i = 0; i < k; ++i) {
    const long long term = ceil_div_pow(d, q, i);
    if (term == 1) return total + (k - i);
    total += term;
  }
  return total;
}

int griesmer_dim(int n, int d, int q) {
  if (d < 1) throw std::invalid_argument(fmt::format("distance {} must be positive", d));
  int k = 0;
  while (griesmer_length(k + 1, d, q) <= n) ++k;
  return k;
}

int k_singleton(int n, int d) { return std::max(0, n - d + 1); }

int k_hamming(int n, int d, int q) {
  require_field(q);
  if (n <= 0) return 0;
  const int t = std::max(0, (d - 1) / 2);
  cpp_int ball = 0;
  cpp_int binom = 1;
  cpp_int scale = 1;
  for (int i = 0; i <= std::min(t, n); ++i) {
    ball += binom * scale;
    binom = binom * (n - i) / (i + 1);
    scale *= q - 1;
  }
  int m = 0;
  cpp_int p = 1;
  while (p < ball) {
    p *= q;
    ++m;
  }
  return std::max(0, n - m);
}

std::optional<int> k_plotkin(int n, int d, int q) {
  require_field(q);
  const auto m = plotkin_size(n, d, q);
  if (!m) return std::nullopt;
  return floor_log(*m, q);
}

KOpt k_opt_detail(int n, int d, int q) {
  require_field(q);
  if (n <= 0 || n < d) return {0, {"n<d"}};
  d = std::max(d, 1);
  std::vector<std::pair<std::string, int>> parts{
      {"singleton", k_singleton(n, d)},
      {"hamming", k_hamming(n, d, q)},
  };
  if (const auto p = k_plotkin(n, d, q)) parts.emplace_back("plotkin", *p);
  parts.emplace_back("griesmer", griesmer_dim(n, d, q));

  KOpt out;
  out.value = std::numeric_limits<int>::max();
  for (const auto& [name, v] : parts) out.value = std::min(out.value, v);
  for (const auto& [name, v] : parts) {
    if (v == out.value) out.active.push_back(name);
  }
  return out;
}

int k_opt(int n, int d, int q) { return k_opt_detail(n, d, q).value; }

int bound_gopalan(int n, int k, int r) {
  if (r < 1 || r > k) throw std::invalid_argument(fmt::format("locality r = {} outside [1, k = {}]", r, k));
  return n - k - static_cast<int>(ceil_div(k, r)) + 2;
}

int bound_prakash(int n, int k, int r, int delta) {
  if (r < 1 || r > k) throw std::invalid_argument(fmt::format("locality r = {} outside [1, k = {}]", r, k));
  if (delta < 2) throw std::invalid_argument(fmt::format("delta = {} must be at least 2", delta));
  return n - k + 1 - (static_cast<int>(ceil_div(k, r)) - 1) * (delta - 1);
}

BoundReport bound_cm(int n, int d, int r, int q) {
  if (r < 1) throw std::invalid_argument(fmt::format("locality r = {} must be positive", r));
  BoundReport rep{"cm", 'k', 0, {}, {}};
  std::optional<KOpt> best_inner;
  for (int t = 1; t <= n / (r + 1); ++t) {
    const int len = n - t * (r + 1);
    KOpt inner = k_opt_detail(len, d, q);
    const int value = t * r + inner.value;
    if (!best_inner || value < rep.value) {
      rep.value = value;
      rep.witness = {t, {}, {}, {}, len};
      best_inner = std::move(inner);
    }
  }
  if (!best_inner) {
    // Empty range: only the locality-free bound remains.
    best_inner = k_opt_detail(n, d, q);
    rep.value = best_inner->value;
    rep.witness = {0, {}, {}, {}, n};
  }
  rep.components = best_inner->active;
  return rep;
}

BoundReport bound_cm_rdelta(int n, int d, int r, int delta, int q) {
  if (r < 1 || delta < 2) throw std::invalid_argument(fmt::format("need r >= 1 and delta >= 2 (r = {}, delta = {})", r, delta));
  BoundReport rep{"cm_rdelta", 'k', 0, {}, {}};
  std::optional<KOpt> best_inner;
  for (int t = 0;; ++t) {
    const long long len = static_cast<long long>(n) - static_cast<long long>(t) * (r + delta - 1);
    if (len <= 0 && t > 0) break;
    if (best_inner && static_cast<long long>(t) * r > rep.value) break;
    KOpt inner = k_opt_detail(static_cast<int>(len), d, q);
    const int value = t * r + inner.value;
    if (!best_inner || value < rep.value) {
      rep.value = value;
      rep.witness = {t, {}, {}, {}, static_cast<int>(len)};
      best_inner = std::move(inner);
    }
  }
  rep.components = best_inner->active;
  return rep;
}

std::string_view to_string(LcChoice choice) {
  switch (choice) {
    case LcChoice::singleton:
      return "singleton";
    case LcChoice::hamming:
      return "hamming";
    case LcChoice::plotkin:
      return "plotkin";
    case LcChoice::best:
      return "best";
  }
  return "?";
}

LcChoice parse_lc_choice(std::string_view name) {
  for (LcChoice c : {LcChoice::singleton, LcChoice::hamming, LcChoice::plotkin, LcChoice::best}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument(fmt::format("unknown log-convex bound '{}' (singleton|hamming|plotkin|best)", name));
}

int kappa_b(int r, int delta, int q) {
  if (r < 1 || delta < 2) throw std::invalid_argument(fmt::format("need r >= 1 and delta >= 2 (r = {}, delta = {})", r, delta));
  return k_opt(r + delta - 1, delta, q);
}

std::optional<int> kappa_a(int r, int delta, int q, LcChoice choice) {
  if (r < 1 || delta < 2) throw std::invalid_argument(fmt::format("need r >= 1 and delta >= 2 (r = {}, delta = {})", r, delta));
  const int len = r + delta - 1;
  switch (choice) {
    case LcChoice::singleton:
      return k_singleton(len, delta);
    case LcChoice::hamming:
      return k_hamming(len, delta, q);
    case LcChoice::plotkin:
      return k_plotkin(len, delta, q);
    case LcChoice::best: {
      int best = std::min(k_singleton(len, delta), k_hamming(len, delta, q));
      if (const auto p = k_plotkin(len, delta, q)) best = std::min(best, *p);
      return best;
    }
  }
  return std::nullopt;
}

BoundReport bound_abhmt(int n, int d, int r, int delta, int q, LcChoice choice) {
  const auto ka = kappa_a(r, delta, q, choice);
  if (!ka) {
    throw std::invalid_argument(
        fmt::format("{} bound does not apply at length {} and distance {}", to_string(choice), r + delta - 1, delta));
  }
  BoundReport rep{"abhmt", 'k', 0, {}, {}};
  const int blocks = static_cast<int>(ceil_div(std::max(0, n - d + 1), r + delta - 1)) + 1;
  rep.value = blocks * *ka;
  if (choice == LcChoice::best) {
    const int len = r + delta - 1;
    if (k_singleton(len, delta) == *ka) rep.components.emplace_back("singleton");
    if (k_hamming(len, delta, q) == *ka) rep.components.emplace_back("hamming");
    if (k_plotkin(len, delta, q) == ka) rep.components.emplace_back("plotkin");
  } else {
    rep.components.emplace_back(to_string(choice));
  }
  return rep;
}

namespace {

BoundReport cmg_min(const char* name, int n, int d, int kappa, int delta, int q, bool whole_blocks) {
  if (kappa < 1 || delta < 2) {
    throw std::invalid_argument(fmt::format("need kappa >= 1 and delta >= 2 (kappa = {}, delta = {})", kappa, delta));
  }
  const long long g_kappa = griesmer_length(kappa, delta, q);
  BoundReport rep{name, 'k', 0, {}, {}};
  std::optional<KOpt> best_inner;
  const int step = whole_blocks ? kappa : 1;
  for (long long lambda = 0;; lambda += step) {
    const int a = static_cast<int>(lambda / kappa);
    const int b = static_cast<int>(lambda % kappa);
    const long long len = n - (a + 1) * g_kappa + griesmer_length(kappa - b, delta, q);
    // The shortened length strictly decreases in lambda and every term is
    // at least lambda.
    if (len <= 0) break;
    if (best_inner && lambda > rep.value) break;
    KOpt inner = k_opt_detail(static_cast<int>(len), d, q);
    const long long value = lambda + inner.value;
    if (!best_inner || value < rep.value) {
      rep.value = static_cast<int>(value);
      rep.witness = {whole_blocks ? std::optional<int>(a) : std::nullopt, static_cast<int>(lambda), a, b,
                     static_cast<int>(len)};
      best_inner = std::move(inner);
    }
  }
  if (!best_inner) {
    // n <= 0: nothing to shorten.
    rep.value = 0;
    rep.components = {"n<d"};
    return rep;
  }
  rep.components = best_inner->active;
  return rep;
}

}  // namespace

BoundReport bound_cmg_kappa(int n, int d, int kappa, int delta, int q) {
  return cmg_min("cmg_kappa", n, d, kappa, delta, q, false);
}

BoundReport bound_cmg_tkappa(int n, int d, int kappa, int delta, int q) {
  return cmg_min("cmg_tkappa", n, d, kappa, delta, q, true);
}

BoundReport bound_cmg_r(int n, int d, int r, int delta, int q) {
  const int kb = kappa_b(r, delta, q);
  if (kb < 1) throw std::invalid_argument(fmt::format("kappa_B = 0 at r = {}, delta = {}", r, delta));
  BoundReport rep = cmg_min("cmg_r", n, d, kb, delta, q, false);
  rep.components.insert(rep.components.begin(), fmt::format("kappa_B={}", kb));
  return rep;
}

int bound_singleton_g(int n, int k, int r, int delta, int q) {
  if (k < 1) throw std::invalid_argument(fmt::format("dimension k = {} must be positive", k));
  const int kb = kappa_b(r, delta, q);
  if (kb < 1) throw std::invalid_argument(fmt::format("kappa_B = 0 at r = {}, delta = {}", r, delta));
  const long long blocks = ceil_div(k, kb);
  const int b = static_cast<int>(k - 1 - (blocks - 1) * kb);
  return static_cast<int>(n - blocks * griesmer_length(kb, delta, q) + griesmer_length(kb - b, delta, q));
}

}  // namespace lrc

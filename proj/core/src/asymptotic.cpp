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

#include "lrc/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace lrc {
namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void require_delta_n(double delta_n) {
  if (!(delta_n >= 0.0 && delta_n <= 1.0)) {
    throw std::invalid_argument(fmt::format("relative distance {} outside [0, 1]", delta_n));
  }
}

double kappa_b_ratio(int r, int delta, int q) {
  const int kb = kappa_b(r, delta, q);
  return static_cast<double>(kb) / static_cast<double>(griesmer_length(kb, delta, q));
}

}  // namespace

double asympt_singleton_g(double delta_n, int r, int delta, int q) {
  require_delta_n(delta_n);
  return clamp01(kappa_b_ratio(r, delta, q) * (1.0 - delta_n));
}

double asympt_abhmt(double delta_n, int r, int delta, int q, LcChoice choice) {
  require_delta_n(delta_n);
  const auto ka = kappa_a(r, delta, q, choice);
  if (!ka) throw std::invalid_argument(fmt::format("{} bound does not apply", to_string(choice)));
  return clamp01(static_cast<double>(*ka) / (r + delta - 1) * (1.0 - delta_n));
}

double asympt_prakash(double delta_n, int r, int delta) {
  require_delta_n(delta_n);
  return clamp01(static_cast<double>(r) / (r + delta - 1) * (1.0 - delta_n));
}

double asympt_gopalan(double delta_n, int r) { return asympt_prakash(delta_n, r, 2); }

double asympt_singleton(double delta_n) {
  require_delta_n(delta_n);
  return clamp01(1.0 - delta_n);
}

std::string to_string(ROpt choice) { return choice == ROpt::plotkin ? "plotkin" : "mrrw"; }

ROpt parse_ropt(const std::string& name) {
  if (name == "plotkin") return ROpt::plotkin;
  if (name == "mrrw") return ROpt::mrrw;
  throw std::invalid_argument(fmt::format("unknown rate bound '{}' (mrrw|plotkin)", name));
}

double r_opt_plotkin(double delta_n, int q) {
  require_delta_n(delta_n);
  return clamp01(1.0 - static_cast<double>(q) / (q - 1) * delta_n);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double r_opt_mrrw(double delta_n) {
  require_delta_n(delta_n);
  if (delta_n >= 0.5) return 0.0;
  return clamp01(binary_entropy(0.5 - std::sqrt(delta_n * (1.0 - delta_n))));
}

double r_opt(double delta_n, int q, ROpt choice) {
  if (choice == ROpt::plotkin) return r_opt_plotkin(delta_n, q);
  if (q != 2) throw std::invalid_argument(fmt::format("MRRW is binary only (q = {}); use the Plotkin rate bound", q));
  return r_opt_mrrw(delta_n);
}

Minimum minimize_shortened_rate(double delta_n, double nu, int q, ROpt choice) {
  require_delta_n(delta_n);
  if (!(nu >= 1.0)) throw std::invalid_argument(fmt::format("nu = {} must be at least 1", nu));
  const double hi = (1.0 - 1e-12) / nu;
  const auto objective = [&](double x) {
    const double rest = 1.0 - x * nu;
    // Past the point where the shortened relative distance reaches 1 the
    // remaining rate is 0.
    const double rel = delta_n / rest;
    return x + rest * (rel >= 1.0 ? 0.0 : r_opt(rel, q, choice));
  };

  const double step = hi / kMinimizeGrid;
  Minimum best{objective(0.0), 0.0};
  int best_i = 0;
  for (int i = 1; i <= kMinimizeGrid; ++i) {
    const double x = i * step;
    const double v = objective(x);
    if (v < best.value) {
      best = {v, x};
      best_i = i;
    }
  }

  double lo = std::max(0.0, (best_i - 1) * step);
  double up = std::min(hi, (best_i + 1) * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = up - inv_phi * (up - lo);
  double x2 = lo + inv_phi * (up - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (up - lo > 1e-12) {
    if (f1 <= f2) {
      up = x2;
      x2 = x1;
      f2 = f1;
      x1 = up - inv_phi * (up - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (up - lo);
      f2 = objective(x2);
    }
  }
  const double x = (lo + up) / 2.0;
  const double v = objective(x);
  if (v < best.value) best = {v, x};
  best.value = clamp01(best.value);
  return best;
}

double asympt_cmg(double delta_n, int r, int delta, int q, ROpt choice) {
  return minimize_shortened_rate(delta_n, 1.0 / kappa_b_ratio(r, delta, q), q, choice).value;
}

double asympt_cm_rdelta(double delta_n, int r, int delta, int q, ROpt choice) {
  return minimize_shortened_rate(delta_n, static_cast<double>(r + delta - 1) / r, q, choice).value;
}

double asympt_cmg_plotkin_closed(double delta_n, int kappa, int delta, int q) {
  require_delta_n(delta_n);
  const double ratio = static_cast<double>(kappa) / static_cast<double>(griesmer_length(kappa, delta, q));
  const double relative = static_cast<double>(q - 1) / q;
  return clamp01(ratio * std::max(0.0, 1.0 - delta_n / relative));
}

std::optional<double> threshold_delta_t(int r, int delta, int q, LcChoice choice) {
  const auto ka = kappa_a(r, delta, q, choice);
  if (!ka || *ka < 1) return std::nullopt;
  const double len = r + delta - 1;
  const double g = static_cast<double>(griesmer_length(*ka, delta, q));
  if (g >= len) return std::nullopt;
  const double diff = (q - 1) * (len - g);
  return diff / (diff + len);
}

const std::vector<std::string>& curve_names() {
  static const std::vector<std::string> names{
      "singleton", "gopalan",     "prakash", "cm_rdelta",   "abhmt",         "abhmt_singleton",
      "abhmt_hamming", "abhmt_plotkin", "singleton_g", "cmg", "cmg_plotkin"};
  return names;
}

double curve_value(const std::string& name, double delta_n, const CurveParams& p) {
  if (name == "singleton") return asympt_singleton(delta_n);
  if (name == "gopalan") return asympt_gopalan(delta_n, p.r);
  if (name == "prakash") return asympt_prakash(delta_n, p.r, p.delta);
  if (name == "cm_rdelta") return asympt_cm_rdelta(delta_n, p.r, p.delta, p.q, p.ropt);
  if (name == "abhmt") return asympt_abhmt(delta_n, p.r, p.delta, p.q, p.lc);
  if (name == "abhmt_singleton") return asympt_abhmt(delta_n, p.r, p.delta, p.q, LcChoice::singleton);
  if (name == "abhmt_hamming") return asympt_abhmt(delta_n, p.r, p.delta, p.q, LcChoice::hamming);
  if (name == "abhmt_plotkin") return asympt_abhmt(delta_n, p.r, p.delta, p.q, LcChoice::plotkin);
  if (name == "singleton_g") return asympt_singleton_g(delta_n, p.r, p.delta, p.q);
  if (name == "cmg") return asympt_cmg(delta_n, p.r, p.delta, p.q, p.ropt);
  if (name == "cmg_plotkin") return asympt_cmg_plotkin_closed(delta_n, kappa_b(p.r, p.delta, p.q), p.delta, p.q);
  throw std::invalid_argument(fmt::format("unknown bound '{}'", name));
}

std::vector<double> uniform_grid(int n) {
  if (n < 2) throw std::invalid_argument(fmt::format("grid needs at least 2 points, got {}", n));
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / (n - 1);
  return grid;
}

void emit_curves(std::ostream& out, const CurveParams& params, const std::vector<std::string>& bounds,
                 const std::vector<double>& grid) {
  for (const auto& b : bounds) {
    if (std::find(curve_names().begin(), curve_names().end(), b) == curve_names().end()) {
      throw std::invalid_argument(fmt::format("unknown bound '{}'", b));
    }
  }
  out << "delta_n";
  for (const auto& b : bounds) out << ',' << b;
  out << '\n';
  for (double x : grid) {
    out << fmt::format("{:.9g}", x);
    for (const auto& b : bounds) out << fmt::format(",{:.9g}", curve_value(b, x, params));
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed to write curve data");
}

}  // namespace lrc

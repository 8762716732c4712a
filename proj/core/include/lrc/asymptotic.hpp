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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"

namespace lrc {

// Rate bounds as functions of the relative distance delta_n = d / n in the
// limit n -> infinity (o(1) terms dropped). Every value is clamped to [0, 1].

// kappa_B / G(kappa_B, delta) * (1 - delta_n).
double asympt_singleton_g(double delta_n, int r, int delta, int q);
// kappa_A / (r + delta - 1) * (1 - delta_n). Throws std::invalid_argument when
// the chosen bound does not apply.
double asympt_abhmt(double delta_n, int r, int delta, int q, LcChoice choice);
// r / (r + delta - 1) * (1 - delta_n).
double asympt_prakash(double delta_n, int r, int delta);
// r / (r + 1) * (1 - delta_n).
double asympt_gopalan(double delta_n, int r);
// 1 - delta_n.
double asympt_singleton(double delta_n);

enum class ROpt { plotkin, mrrw };

std::string to_string(ROpt choice);
ROpt parse_ropt(const std::string& name);

// max(0, 1 - q / (q - 1) * delta_n).
double r_opt_plotkin(double delta_n, int q);
// h(1/2 - sqrt(delta_n (1 - delta_n))), 0 for delta_n >= 1/2.
double r_opt_mrrw(double delta_n);
// Binary entropy in bits with h(0) = h(1) = 0.
double binary_entropy(double x);
// Throws std::invalid_argument for MRRW with q != 2.
double r_opt(double delta_n, int q, ROpt choice);

// Absolute tolerance on the objective of the numerical minimization.
inline constexpr double kMinimizeTolerance = 1e-6;
inline constexpr int kMinimizeGrid = 1024;

struct Minimum {
  double value = 0;
  double x = 0;
};

// min over 0 <= x < 1 / nu of x + (1 - x nu) R_opt(delta_n / (1 - x nu)),
// by a grid scan followed by golden-section refinement around the best cell.
Minimum minimize_shortened_rate(double delta_n, double nu, int q, ROpt choice);

// The minimization with nu = G(kappa_B, delta) / kappa_B.
double asympt_cmg(double delta_n, int r, int delta, int q, ROpt choice);
// The minimization with nu = (r + delta - 1) / r.
double asympt_cm_rdelta(double delta_n, int r, int delta, int q, ROpt choice);
// Closed form of the Plotkin case: kappa / G(kappa, delta) * max(0, 1 - delta_n / (1 - 1/q)).
double asympt_cmg_plotkin_closed(double delta_n, int kappa, int delta, int q);

// Relative distance above which the closed form at kappa_A lies strictly
// below the ABHMT line. nullopt when G(kappa_A, delta) >= r + delta - 1 or the
// chosen bound does not apply.
std::optional<double> threshold_delta_t(int r, int delta, int q, LcChoice choice);

struct CurveParams {
  int r = 0;
  int delta = 0;
  int q = 2;
  ROpt ropt = ROpt::mrrw;
  LcChoice lc = LcChoice::best;
};

// Known column names: singleton, gopalan, prakash, cm_rdelta, abhmt,
// abhmt_singleton, abhmt_hamming, abhmt_plotkin, singleton_g, cmg, cmg_plotkin.
const std::vector<std::string>& curve_names();
double curve_value(const std::string& name, double delta_n, const CurveParams& params);

// n points spaced uniformly on [0, 1], endpoints included.
std::vector<double> uniform_grid(int n);

// CSV with a delta_n column followed by one column per bound, 9 significant
// digits. Throws std::invalid_argument for unknown names.
void emit_curves(std::ostream& out, const CurveParams& params, const std::vector<std::string>& bounds,
                 const std::vector<double>& grid);

}  // namespace lrc

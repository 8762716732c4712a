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

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "lrc/asymptotic.hpp"
#include "lrc/bounds.hpp"
#include "lrc/cli/commands.hpp"
#include "lrc/code_io.hpp"
#include "lrc/constructions.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/locality.hpp"
#include "lrc/set_builder.hpp"

namespace lrc::cli {
namespace {

using nlohmann::json;

struct Global {
  bool no_timestamp = false;
  std::uint64_t max_codewords = kDefaultMaxCodewords;
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument(fmt::format("{}: cannot open for writing", path));
  f << text;
  if (!f) throw std::runtime_error(fmt::format("{}: write failed", path));
}

std::string dist_str(Distance d) { return d ? std::to_string(*d) : "-"; }

// One evaluated bound, for tables and JSON.
struct BoundRow {
  std::string name;
  char bounds = 'k';
  int value = 0;
  std::optional<int> actual;
  std::string witness;
  std::string components;

  std::string status() const {
    if (!actual) return "";
    if (*actual > value) return "VIOLATED";
    return *actual == value ? "tight" : "ok";
  }
};

std::string witness_str(const BoundWitness& w) {
  std::vector<std::string> parts;
  if (w.lambda) {
    parts.push_back(fmt::format("lambda={} (a={},b={})", *w.lambda, w.a.value_or(0), w.b.value_or(0)));
  } else if (w.t) {
    parts.push_back(fmt::format("t={}", *w.t));
  }
  if (w.shortened_length) parts.push_back(fmt::format("len={}", *w.shortened_length));
  return fmt::format("{}", fmt::join(parts, " "));
}

BoundRow row_of(const BoundReport& rep, std::optional<int> actual) {
  return {rep.name, rep.bounds, rep.value, actual, witness_str(rep.witness), fmt::format("{}", fmt::join(rep.components, ","))};
}

struct BoundInputs {
  int n = 0;
  int d = 0;
  int q = 2;
  int delta = 2;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<int> kappa;
  // Known true values, for the status column.
  std::optional<int> actual_k;
  std::optional<int> actual_d;
};

std::vector<BoundRow> evaluate_bounds(const BoundInputs& in) {
  std::vector<BoundRow> rows;
  const KOpt ko = k_opt_detail(in.n, in.d, in.q);
  rows.push_back({"k_opt", 'k', ko.value, in.actual_k, "", fmt::format("{}", fmt::join(ko.active, ","))});
  if (in.r) {
    const int r = *in.r;
    if (in.k && r <= *in.k) {
      if (in.delta == 2) rows.push_back({"gopalan", 'd', bound_gopalan(in.n, *in.k, r), in.actual_d, "", ""});
      rows.push_back({"prakash", 'd', bound_prakash(in.n, *in.k, r, in.delta), in.actual_d, "", ""});
    }
    if (in.k && *in.k >= 1) {
      rows.push_back({"singleton_g", 'd', bound_singleton_g(in.n, *in.k, r, in.delta, in.q), in.actual_d, "",
                      fmt::format("kappa_B={}", kappa_b(r, in.delta, in.q))});
    }
    if (in.delta == 2) rows.push_back(row_of(bound_cm(in.n, in.d, r, in.q), in.actual_k));
    rows.push_back(row_of(bound_cm_rdelta(in.n, in.d, r, in.delta, in.q), in.actual_k));
    rows.push_back(row_of(bound_cmg_r(in.n, in.d, r, in.delta, in.q), in.actual_k));
    rows.push_back(row_of(bound_abhmt(in.n, in.d, r, in.delta, in.q, LcChoice::best), in.actual_k));
  }
  if (in.kappa) {
    rows.push_back(row_of(bound_cmg_kappa(in.n, in.d, *in.kappa, in.delta, in.q), in.actual_k));
    rows.push_back(row_of(bound_cmg_tkappa(in.n, in.d, *in.kappa, in.delta, in.q), in.actual_k));
  }
  return rows;
}

void print_bounds(std::ostream& out, const std::vector<BoundRow>& rows) {
  out << fmt::format("  {:<12} {:<6} {:>5} {:>6}  {:<8}  {:<28} {}\n", "bound", "on", "value", "actual", "status",
                     "witness", "components");
  for (const auto& r : rows) {
    out << fmt::format("  {:<12} {:<6} {:>5} {:>6}  {:<8}  {:<28} {}\n", r.name, std::string(1, r.bounds), r.value,
                       r.actual ? std::to_string(*r.actual) : "", r.status(), r.witness, r.components);
  }
}

json bounds_json(const std::vector<BoundRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j{{"name", r.name}, {"bounds", std::string(1, r.bounds)}, {"value", r.value}};
    if (r.actual) {
      j["actual"] = *r.actual;
      j["status"] = r.status();
    }
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.components.empty()) j["components"] = r.components;
    arr.push_back(std::move(j));
  }
  return arr;
}

bool any_violated(const std::vector<BoundRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.status() == "VIOLATED"; });
}

json profile_json(const LocalityProfile& p, const LinearCode& code) {
  json j{{"delta", p.delta}, {"feasible", p.feasible}};
  if (!p.feasible) {
    if (p.infeasible_coordinate) j["infeasible_coordinate"] = *p.infeasible_coordinate + 1;
    return j;
  }
  j["r"] = p.r;
  j["kappa"] = p.kappa;
  json w = json::array();
  for (std::size_t i = 0; i < p.size_witnesses.size(); ++i) {
    w.push_back({{"coordinate", i + 1},
                 {"min_size", p.size_witnesses[i].to_one_based()},
                 {"min_entropy", p.entropy_witnesses[i].to_one_based()},
                 {"entropy", entropy(code, p.entropy_witnesses[i])}});
  }
  j["witnesses"] = std::move(w);
  return j;
}

void print_profile(std::ostream& out, const LocalityProfile& p, const LinearCode& code) {
  if (!p.feasible) {
    out << fmt::format("  infeasible: coordinate {} has no repair set of size <= {}\n",
                       p.infeasible_coordinate.value_or(-1) + 1, p.size_cap);
    return;
  }
  out << fmt::format("  r = {}, kappa = {}\n", p.r, p.kappa);
  out << fmt::format("  {:>5}  {:<24} {:<24} {}\n", "coord", "min-size set", "min-entropy set", "H");
  for (std::size_t i = 0; i < p.size_witnesses.size(); ++i) {
    out << fmt::format("  {:>5}  {:<24} {:<24} {}\n", i + 1, p.size_witnesses[i].to_string(),
                       p.entropy_witnesses[i].to_string(), entropy(code, p.entropy_witnesses[i]));
  }
}

// analyze ------------------------------------------------------------------

struct AnalyzeArgs {
  std::string file;
  std::optional<int> delta;
  std::optional<int> cap;
  bool json_out = false;
  std::string out_file;
};

int cmd_analyze(const AnalyzeArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  const CodeFile cf = load_code_file(a.file);
  const LinearCode& code = cf.code;
  const int delta = a.delta ? *a.delta : cf.delta.value_or(0);
  if (delta < 2) throw std::invalid_argument("local distance needed: pass --delta or set \"delta\" in the file");
  for (const auto& w : cf.warnings) err << "warning: " << w << '\n';

  const Distance d = min_distance(code, g.max_codewords);
  const LocalityProfile prof = compute_locality(code, delta, a.cap, g.max_codewords);
  std::optional<LocalityProfile> declared;
  std::vector<RepairSetCheck> checks;
  if (!cf.repair_sets.empty()) {
    for (const auto& s : cf.repair_sets) checks.push_back(verify_repair_set(code, s, delta, g.max_codewords));
    declared = profile_from_repair_sets(code, cf.repair_sets, delta, g.max_codewords);
  }

  std::vector<BoundRow> rows;
  if (d && prof.feasible && code.dimension() >= 1) {
    BoundInputs in{code.length(), *d, code.q(), delta, code.dimension(), prof.r, prof.kappa, code.dimension(), *d};
    rows = evaluate_bounds(in);
  }

  json report{{"code", cf.name.empty() ? a.file : cf.name},
              {"q", code.q()},
              {"n", code.length()},
              {"k", code.dimension()},
              {"declared_k", code.declared_dimension()},
              {"warnings", cf.warnings},
              {"locality", profile_json(prof, code)},
              {"size_cap", prof.size_cap},
              {"cap_limited", prof.cap_limited},
              {"bounds", bounds_json(rows)}};
  report["d"] = d ? json(*d) : json(nullptr);
  if (declared) {
    json sets = json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      sets.push_back({{"set", cf.repair_sets[i].to_one_based()},
                      {"entropy", checks[i].entropy},
                      {"size", checks[i].size},
                      {"distance", checks[i].distance ? json(*checks[i].distance) : json(nullptr)},
                      {"valid", checks[i].valid}});
    }
    report["declared_repair_sets"] = std::move(sets);
    report["declared_locality"] = profile_json(*declared, code);
  }
  if (!g.no_timestamp) report["generated"] = timestamp();

  if (a.json_out) {
    out << report.dump(2) << '\n';
  } else {
    out << fmt::format("code: {}\n", cf.name.empty() ? a.file : cf.name);
    if (!g.no_timestamp) out << fmt::format("generated: {}\n", report["generated"].get<std::string>());
    out << fmt::format("field: GF({})\nparameters: {}\n", code.q(), code.describe(d));
    if (code.rank_deficient()) {
      out << fmt::format("effective dimension: {} (declared {})\n", code.dimension(), code.declared_dimension());
    }
    out << fmt::format("locality at delta = {} (subsets up to size {}):\n", delta, prof.size_cap);
    print_profile(out, prof, code);
    if (prof.cap_limited) out << "  note: the size cap was active; a larger --cap might lower kappa\n";
    if (declared) {
      out << "declared repair sets:\n";
      for (std::size_t i = 0; i < checks.size(); ++i) {
        out << fmt::format("  {:<24} H={} |R|={} d={} {}\n", cf.repair_sets[i].to_string(), checks[i].entropy,
                           checks[i].size, dist_str(checks[i].distance), checks[i].valid ? "valid" : checks[i].reason);
      }
      if (declared->feasible) {
        out << fmt::format("  induced r = {}, kappa = {}\n", declared->r, declared->kappa);
      } else {
        out << fmt::format("  coordinate {} is not covered by a valid set\n", declared->infeasible_coordinate.value_or(-1) + 1);
      }
    }
    if (!rows.empty()) {
      out << "bounds (computed r and kappa):\n";
      print_bounds(out, rows);
    }
  }
  if (!a.out_file.empty()) write_file(a.out_file, report.dump(2) + "\n");
  return any_violated(rows) ? kVerificationFailed : kOk;
}

// bounds -------------------------------------------------------------------

int cmd_bounds(const BoundInputs& in, std::ostream& out) {
  const std::vector<BoundRow> rows = evaluate_bounds(in);
  out << fmt::format("n={} d={} q={} delta={}", in.n, in.d, in.q, in.delta);
  if (in.k) out << fmt::format(" k={}", *in.k);
  if (in.r) out << fmt::format(" r={}", *in.r);
  if (in.kappa) out << fmt::format(" kappa={}", *in.kappa);
  out << '\n';
  print_bounds(out, rows);
  return kOk;
}

// asymptotic ---------------------------------------------------------------

struct AsymptoticArgs {
  CurveParams params;
  std::string bounds = "prakash,cm_rdelta,abhmt,singleton_g,cmg";
  std::string ropt;
  std::string lc = "best";
  int grid = 512;
  std::string out_file;
};

int cmd_asymptotic(AsymptoticArgs a, const Global& g, std::ostream& out) {
  a.params.ropt = a.ropt.empty() ? (a.params.q == 2 ? ROpt::mrrw : ROpt::plotkin) : parse_ropt(a.ropt);
  if (a.params.ropt == ROpt::mrrw && a.params.q != 2) {
    throw std::invalid_argument("MRRW is binary only; use --ropt plotkin");
  }
  a.params.lc = parse_lc_choice(a.lc);
  std::vector<std::string> names;
  std::stringstream ss(a.bounds);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) names.push_back(item);
  }

  std::ostringstream csv;
  csv << fmt::format("# r={} delta={} q={} ropt={} lc={}\n", a.params.r, a.params.delta, a.params.q,
                     to_string(a.params.ropt), to_string(a.params.lc));
  csv << "# limit curves (o(1) terms dropped); minimization: " << kMinimizeGrid
      << "-point grid + golden section, objective tolerance " << kMinimizeTolerance << '\n';
  if (!g.no_timestamp) csv << "# generated " << timestamp() << '\n';
  emit_curves(csv, a.params, names, uniform_grid(a.grid));
  if (a.out_file.empty()) {
    out << csv.str();
  } else {
    write_file(a.out_file, csv.str());
    out << fmt::format("wrote {} rows x {} bounds to {}\n", a.grid, names.size(), a.out_file);
  }
  return kOk;
}

// simplex ------------------------------------------------------------------

int cmd_simplex(int m, int q, const std::string& out_file, const Global& g, std::ostream& out) {
  const LinearCode s = simplex(m, q);
  const Distance d = min_distance(s, g.max_codewords);
  const long long gl = d ? griesmer_length(m, *d, q) : 0;
  out << fmt::format("S({},{}): {}\n", m, q, s.describe(d));
  out << fmt::format("Griesmer length G({},{}) = {} ({})\n", m, dist_str(d), gl,
                     gl == s.length() ? "met with equality" : "not met");
  for (int kappa = 2; kappa <= m; ++kappa) {
    const SimplexLocality loc = simplex_locality(m, q, kappa);
    out << fmt::format("  dimension-locality ({}, {}), r = {}\n", kappa, loc.delta_local, loc.r);
  }
  if (!out_file.empty()) {
    write_file(out_file, code_to_json(s, {}, fmt::format("simplex-{}-{}", m, q)).dump(2) + "\n");
  }
  return kOk;
}

// build-set ----------------------------------------------------------------

struct BuildArgs {
  std::string file;
  int delta = 0;
  std::optional<int> kappa;
  std::optional<int> lambda;
  std::optional<int> cap;
};

int cmd_build_set(const BuildArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  const CodeFile cf = load_code_file(a.file);
  for (const auto& w : cf.warnings) err << "warning: " << w << '\n';
  const LinearCode& code = cf.code;

  std::vector<CoordSet> sets = cf.repair_sets;
  int kappa = 0;
  if (sets.empty()) {
    const LocalityProfile p = compute_locality(code, a.delta, a.cap, g.max_codewords);
    if (!p.feasible) {
      throw std::invalid_argument(
          fmt::format("coordinate {} has no repair set within the size cap", p.infeasible_coordinate.value_or(-1) + 1));
    }
    sets = p.repair_sets();
    kappa = p.kappa;
    out << "repair sets: computed\n";
  } else {
    for (const auto& s : sets) kappa = std::max(kappa, entropy(code, s));
    out << "repair sets: declared\n";
  }
  if (a.kappa) kappa = *a.kappa;

  const Distance d = min_distance(code, g.max_codewords);
  out << fmt::format("code: {} delta={} kappa={}\n", code.describe(d), a.delta, kappa);
  if (!g.no_timestamp) out << fmt::format("generated: {}\n", timestamp());

  int lo = 0;
  int hi = code.dimension();
  if (a.lambda) lo = hi = *a.lambda;
  bool ok = true;
  for (int lambda = lo; lambda <= hi; ++lambda) {
    const BuiltSet b = build_low_entropy_set(code, sets, kappa, a.delta, lambda, g.max_codewords);
    const LinearCode sh = shorten(code, b.set);
    const Distance dsh = min_distance(sh, g.max_codewords);
    const bool shortened_ok = sh.dimension() == code.dimension() - b.entropy && (!dsh || !d || *dsh >= *d);
    ok = ok && shortened_ok;
    out << fmt::format("lambda={} (a={}, b={}): I = {}\n", lambda, b.a, b.b, b.set.to_string());
    out << fmt::format("  H(I) = {} <= {}, |I| = {} >= {}\n", b.entropy, lambda, b.size, b.guaranteed_size);
    out << fmt::format("  shortened on I: [{},{},{}]{}\n", sh.length(), sh.dimension(), dist_str(dsh),
                       shortened_ok ? "" : "  (expected dimension k - H(I) and distance >= d)");
    for (const auto& s : b.trace) {
      out << fmt::format("    {:<11} {:<24} alpha={} H {}->{} size {}->{}\n", to_string(s.kind), s.added.to_string(),
                         s.alpha, s.entropy_before, s.entropy_after, s.size_before, s.size_after);
    }
  }
  return ok ? kOk : kVerificationFailed;
}

// verify-paper -------------------------------------------------------------

int cmd_verify_paper(const Global& g, std::ostream& out) {
  if (!g.no_timestamp) out << fmt::format("generated: {}\n", timestamp());
  const std::vector<CheckResult> results = paper_checks();
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    out << fmt::format("{:<4} {:<10} {:<36} {}\n", r.pass ? "PASS" : "FAIL", r.group, r.name, r.detail);
  }
  out << fmt::format("{} checks, {} failed\n", results.size(), failed);
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and locality analysis for linear locally repairable codes", "lrc"};
  app.require_subcommand(1);
  // Global options may follow the subcommand.
  app.fallthrough();
  Global g;
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the generation time from reports");
  app.add_option("--max-codewords", g.max_codewords, "Cap on codewords enumerated per distance computation")
      ->capture_default_str();

  AnalyzeArgs an;
  CLI::App* analyze = app.add_subcommand("analyze", "Parameters, locality and bounds of a code file");
  analyze->add_option("file", an.file, "JSON code file")->required();
  analyze->add_option("--delta", an.delta, "Local distance");
  analyze->add_option("--cap", an.cap, "Largest repair-set size searched (default min(n, delta + k))");
  analyze->add_flag("--json", an.json_out, "Print the report as JSON");
  analyze->add_option("--out", an.out_file, "Also write the JSON report to this file");

  BoundInputs bi;
  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate the finite-length bounds");
  bounds->add_option("--n", bi.n, "Length")->required();
  bounds->add_option("--d", bi.d, "Minimum distance")->required();
  bounds->add_option("--q", bi.q, "Field size")->capture_default_str();
  bounds->add_option("--delta", bi.delta, "Local distance")->capture_default_str();
  bounds->add_option("--k", bi.k, "Dimension (for distance bounds)");
  bounds->add_option("--r", bi.r, "Locality r");
  bounds->add_option("--kappa", bi.kappa, "Dimension-locality kappa");

  AsymptoticArgs as;
  CLI::App* asym = app.add_subcommand("asymptotic", "Rate bounds as functions of the relative distance (CSV)");
  asym->add_option("--r", as.params.r, "Locality r")->required();
  asym->add_option("--delta", as.params.delta, "Local distance")->required();
  asym->add_option("--q", as.params.q, "Field size")->capture_default_str();
  asym->add_option("--bounds", as.bounds, "Comma-separated columns")->capture_default_str();
  asym->add_option("--ropt", as.ropt, "Rate bound inside the minimization: mrrw or plotkin (default mrrw for q = 2)");
  asym->add_option("--lc", as.lc, "Log-convex bound for abhmt: singleton, hamming, plotkin or best")
      ->capture_default_str();
  asym->add_option("--grid", as.grid, "Number of points on [0, 1]")->capture_default_str();
  asym->add_option("--out", as.out_file, "CSV file (default: standard output)");

  int sm = 0;
  int sq = 0;
  std::string s_out;
  CLI::App* simp = app.add_subcommand("simplex", "Build and check a simplex code");
  simp->add_option("--m", sm, "Dimension")->required();
  simp->add_option("--q", sq, "Field size")->required();
  simp->add_option("--out", s_out, "Write the code as JSON");

  BuildArgs ba;
  CLI::App* build = app.add_subcommand("build-set", "Construct a low-entropy set with its trace");
  build->add_option("--code", ba.file, "JSON code file")->required();
  build->add_option("--delta", ba.delta, "Local distance")->required();
  build->add_option("--kappa", ba.kappa, "Dimension-locality (default: largest repair-set entropy)");
  build->add_option("--lambda", ba.lambda, "Entropy budget (default: every lambda in [0, k])");
  build->add_option("--cap", ba.cap, "Largest repair-set size searched when the file declares none");

  CLI::App* verify = app.add_subcommand("verify-paper", "Check the worked examples, simplex codes and Griesmer identities");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(an, g, out, err);
    if (*bounds) return cmd_bounds(bi, out);
    if (*asym) return cmd_asymptotic(as, g, out);
    if (*simp) return cmd_simplex(sm, sq, s_out, g, out);
    if (*build) return cmd_build_set(ba, g, out, err);
    if (*verify) return cmd_verify_paper(g, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace lrc::cli

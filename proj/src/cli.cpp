// Copyright 2026 The entangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entangle/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entangle/bipartite.hpp"
#include "entangle/error.hpp"
#include "entangle/homogeneous.hpp"
#include "entangle/hydrogen.hpp"
#include "entangle/io.hpp"
#include "entangle/lattice.hpp"

namespace entangle::cli {

namespace {

struct OutputPaths {
  std::string csv = "-";
  std::string summary;  // empty: <csv>.json, or the error stream when csv is "-"
};

struct SchmidtConfig {
  std::string input;
  double tol = kDefaultRankTol;
  OutputPaths paths;
};

struct HydrogenConfig {
  double a0 = 1.0;
  double hbar = 1.0;
  double mass_ratio = hydrogen::kProtonElectronMassRatio;
  std::vector<double> P = {0.0, 0.0, 0.0};
  double k_max = 40.0;
  std::size_t n_bins = 4096;
  OutputPaths paths;
};

struct LatticeConfig {
  std::size_t n_sites = 64;
  double box_length = 40.0;
  double decay = 1.0;
  std::vector<double> decays;
  long com_index = 0;
  double mass_ratio = hydrogen::kProtonElectronMassRatio;
  double hbar = 1.0;
  double tol = kDefaultRankTol;
  unsigned threads = 0;
  OutputPaths paths;
};

void require_tolerance(double tol, const char *name) {
  if (!(tol > 0.0 && tol <= 1e-3)) {
    throw ValidationError(std::string(name) + " must be in (0, 1e-3]");
  }
}

void emit(const std::string &path, const std::string &text, std::ostream &fallback) {
  if (path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ValidationError("write to '" + path + "' failed");
}

void emit_outputs(const OutputPaths &paths, const std::string &csv, const std::string &summary,
                  std::ostream &out, std::ostream &err) {
  emit(paths.csv, csv, out);
  if (!paths.summary.empty()) {
    emit(paths.summary, summary, out);
  } else if (paths.csv == "-") {
    err << summary;
  } else {
    emit(paths.csv + ".json", summary, out);
  }
}

void add_output_options(CLI::App *cmd, OutputPaths &paths) {
  cmd->add_option("--out", paths.csv, "CSV output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--summary", paths.summary,
                  "JSON summary path ('-' for stdout; default <out>.json, or stderr when "
                  "--out is '-')");
}

int cmd_schmidt(const SchmidtConfig &cfg, std::ostream &out, std::ostream &err) {
  require_tolerance(cfg.tol, "--tol");
  const auto loaded = io::load_state_json(cfg.input);
  if (loaded.warning) err << "warning: " << *loaded.warning << '\n';

  const auto dec = schmidt(loaded.state, cfg.tol);
  const auto rep = entanglement_report(dec, cfg.tol);

  std::ostringstream csv;
  io::write_schmidt_csv(csv, dec.lambdas);

  double lambda_sum = 0.0;
  for (double l : dec.lambdas) lambda_sum += l;
  io::JsonSummary s;
  s.set("format_version", std::int64_t{1})
      .set("command", std::string("schmidt"))
      .set("dim_u", static_cast<std::int64_t>(loaded.state.dim_u()))
      .set("dim_v", static_cast<std::int64_t>(loaded.state.dim_v()))
      .set("rank", static_cast<std::int64_t>(rep.schmidt_rank))
      .set("purity", rep.purity)
      .set("entropy", rep.entropy)
      .set("participation", rep.participation_number)
      .set("lambda_sum", lambda_sum)
      .set("tol", cfg.tol)
      .set("warnings", loaded.warning ? std::vector<std::string>{*loaded.warning}
                                      : std::vector<std::string>{});
  emit_outputs(cfg.paths, csv.str(), s.dump(), out, err);
  return kExitOk;
}

int cmd_hydrogen(const HydrogenConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.P.size() != 3) throw ValidationError("--P takes three components");
  hydrogen::HydrogenParams params;
  params.a0 = cfg.a0;
  params.hbar = cfg.hbar;
  params.m_e = 1.0;
  params.m_p = cfg.mass_ratio;
  params.P = {cfg.P[0], cfg.P[1], cfg.P[2]};
  params.validate();

  const auto table = hydrogen::radial_spectrum_export(params, cfg.k_max, cfg.n_bins);
  const auto lab = hydrogen::lab_frame_moments(params);
  const auto drift = params.electron_drift();

  std::vector<std::string> warnings;
  if (table.precision_warning) {
    warnings.push_back(*table.precision_warning);
    err << "warning: " << *table.precision_warning << '\n';
  }

  std::ostringstream csv;
  io::write_radial_csv(csv, table);

  io::JsonSummary s;
  s.set("format_version", std::int64_t{1})
      .set("command", std::string("hydrogen"))
      .set("a0", params.a0)
      .set("hbar", params.hbar)
      .set("mass_ratio", params.m_p / params.m_e)
      .set("P", std::vector<double>(params.P.begin(), params.P.end()))
      .set("delta_p", hydrogen::delta_p(params))
      .set("delta_p_quadrature", hydrogen::delta_p_quadrature(params))
      .set("delta_p_table", hydrogen::occupation_stddev(table))
      .set("delta_p_lab", lab.delta_p)
      .set("trace_check", table.weighted_moment(0))
      .set("tail_mass", table.tail_mass)
      .set("mean_p", std::vector<double>(lab.mean.begin(), lab.mean.end()))
      .set("expected_mean_p", std::vector<double>(drift.begin(), drift.end()))
      .set("k_max", cfg.k_max)
      .set("n_bins", static_cast<std::int64_t>(cfg.n_bins))
      .set("warnings", warnings);
  emit_outputs(cfg.paths, csv.str(), s.dump(), out, err);
  return kExitOk;
}

int cmd_lattice(const LatticeConfig &cfg, std::ostream &out, std::ostream &err) {
  require_tolerance(cfg.tol, "--tol");
  if (!(cfg.hbar > 0.0)) throw ValidationError("--hbar must be positive");
  lattice::LatticeParams params;
  params.n_sites = cfg.n_sites;
  params.box_length = cfg.box_length;
  params.decay = cfg.decay;
  params.com_index = cfg.com_index;
  params.mass_ratio = cfg.mass_ratio;

  io::JsonSummary s;
  s.set("format_version", std::int64_t{1})
      .set("command", std::string("lattice"))
      .set("n_sites", static_cast<std::int64_t>(params.n_sites))
      .set("box_length", params.box_length)
      .set("com_index", static_cast<std::int64_t>(params.com_index))
      .set("mass_ratio", params.mass_ratio);

  std::ostringstream csv;
  std::vector<std::string> warnings;
  if (cfg.decays.empty()) {
    const auto st = lattice::build_state(params);
    const auto report = lattice::cross_check(st, cfg.hbar, cfg.tol);
    const auto rep = entanglement_report(report.schmidt_lambdas, cfg.tol);
    if (report.spectrum.precision_warning()) warnings.push_back(*report.spectrum.precision_warning());
    if (!lattice::well_resolved(params)) {
      warnings.push_back("decay outside the well-resolved range [4 dx, L/8]");
    }
    io::write_spectrum_csv(csv, report.spectrum);
    s.set("mode", std::string("single"))
        .set("decay", params.decay)
        .set("well_resolved", lattice::well_resolved(params))
        .set("electron_shift", static_cast<std::int64_t>(st.electron_shift))
        .set("rank", static_cast<std::int64_t>(rep.schmidt_rank))
        .set("purity", rep.purity)
        .set("entropy", rep.entropy)
        .set("participation", rep.participation_number)
        .set("mean_p", momentum_moment(report.spectrum, 1))
        .set("delta_p", occupation_stddev(report.spectrum))
        .set("max_deviation", report.max_deviation);
  } else {
    const auto rows =
        lattice::entanglement_vs_decay_scan(params, cfg.decays, cfg.hbar, cfg.tol, cfg.threads);
    io::write_scan_csv(csv, rows);
    // Strict monotonicity of delta_p over the rows flagged as well resolved,
    // taken in increasing decay order.
    std::vector<lattice::ScanRow> resolved;
    for (const auto &r : rows)
      if (r.well_resolved) resolved.push_back(r);
    std::sort(resolved.begin(), resolved.end(),
              [](const auto &a, const auto &b) { return a.decay < b.decay; });
    bool monotone = true;
    for (std::size_t i = 1; i < resolved.size(); ++i)
      monotone = monotone && resolved[i].delta_p < resolved[i - 1].delta_p;
    std::vector<double> product;
    for (const auto &r : resolved) product.push_back(r.delta_p * r.decay);
    for (const auto &r : rows) {
      if (!r.well_resolved) warnings.push_back("decay " + io::format_number(r.decay) +
                                               " outside the well-resolved range");
    }
    s.set("mode", std::string("scan"))
        .set("rows", static_cast<std::int64_t>(rows.size()))
        .set("resolved_rows", static_cast<std::int64_t>(resolved.size()))
        .set("delta_p_monotone", monotone)
        .set("delta_p_times_decay", product);
  }
  s.set("warnings", warnings);
  for (const auto &w : warnings) err << "warning: " << w << '\n';
  emit_outputs(cfg.paths, csv.str(), s.dump(), out, err);
  return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Entanglement analysis of bipartite pure states and the hydrogen electron"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 2 validation error, 3 numerical failure.\n"
      "Tolerances: --tol is the absolute Schmidt-weight threshold for the rank (default 1e-12,\n"
      "allowed range (0, 1e-3]). Internal checks: state norm 1e-10, Hermiticity 1e-10,\n"
      "eigenvalue imaginary residue 1e-10. All numbers are written as %.12e.");

  SchmidtConfig schmidt_cfg;
  auto *schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a JSON state");
  schmidt_cmd->add_option("--input,-i", schmidt_cfg.input, "State JSON file")->required();
  schmidt_cmd->add_option("--tol", schmidt_cfg.tol, "Rank tolerance on Schmidt weights")
      ->capture_default_str();
  add_output_options(schmidt_cmd, schmidt_cfg.paths);

  HydrogenConfig hyd_cfg;
  auto *hyd_cmd = app.add_subcommand("hydrogen", "1s electron momentum distribution");
  hyd_cmd->add_option("--a0", hyd_cfg.a0, "Bohr radius")->capture_default_str();
  hyd_cmd->add_option("--hbar", hyd_cfg.hbar, "Reduced Planck constant")->capture_default_str();
  hyd_cmd->add_option("--mass-ratio", hyd_cfg.mass_ratio, "m_p / m_e")->capture_default_str();
  hyd_cmd->add_option("--P", hyd_cfg.P, "Total atom momentum (three components)")
      ->expected(3)
      ->capture_default_str();
  hyd_cmd->add_option("--k-max", hyd_cfg.k_max, "Radial table cutoff (1/length)")
      ->capture_default_str();
  hyd_cmd->add_option("--n-bins", hyd_cfg.n_bins, "Radial table bins (>= 16)")
      ->capture_default_str();
  add_output_options(hyd_cmd, hyd_cfg.paths);

  LatticeConfig lat_cfg;
  auto *lat_cmd = app.add_subcommand("lattice", "1D lattice electron-proton pair");
  lat_cmd->add_option("--n-sites,-N", lat_cfg.n_sites, "Sites per particle (even, 8..1024)")
      ->capture_default_str();
  lat_cmd->add_option("--box-length,-L", lat_cfg.box_length, "Periodic box length")
      ->capture_default_str();
  auto *decay_opt =
      lat_cmd->add_option("--decay", lat_cfg.decay, "Decay length a of exp(-|x|/a)")
          ->capture_default_str();
  lat_cmd->add_option("--decays", lat_cfg.decays, "Comma-separated decay lengths to scan")
      ->delimiter(',')
      ->excludes(decay_opt);
  lat_cmd->add_option("--com-index", lat_cfg.com_index, "Centre-of-mass momentum index")
      ->capture_default_str();
  lat_cmd->add_option("--mass-ratio", lat_cfg.mass_ratio, "m_p / m_e")->capture_default_str();
  lat_cmd->add_option("--hbar", lat_cfg.hbar, "Reduced Planck constant")->capture_default_str();
  lat_cmd->add_option("--tol", lat_cfg.tol, "Rank tolerance on Schmidt weights")
      ->capture_default_str();
  lat_cmd->add_option("--threads", lat_cfg.threads, "Scan worker threads (0 = all cores)")
      ->capture_default_str();
  add_output_options(lat_cmd, lat_cfg.paths);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*schmidt_cmd) return cmd_schmidt(schmidt_cfg, out, err);
    if (*hyd_cmd) return cmd_hydrogen(hyd_cfg, out, err);
    return cmd_lattice(lat_cfg, out, err);
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalFailure &e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace entangle::cli

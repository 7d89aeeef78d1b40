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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "entangle/bipartite.hpp"
#include "entangle/homogeneous.hpp"
#include "entangle/hydrogen.hpp"
#include "entangle/io.hpp"
#include "entangle/lattice.hpp"
#include "entangle/quadrature.hpp"

using namespace entangle;

namespace {

constexpr double kPi = std::numbers::pi;
const std::string kFixtures = ENTANGLE_FIXTURE_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Largest |sum lambda - 1| over every decomposition taken in this run.
double g_worst_lambda_sum = 0.0;
std::size_t g_decompositions = 0;

SchmidtDecomposition tracked_schmidt(const PureBipartiteState &st) {
  auto s = schmidt(st);
  double sum = 0.0;
  for (double l : s.lambdas) sum += l;
  g_worst_lambda_sum = std::max(g_worst_lambda_sum, std::abs(sum - 1.0));
  ++g_decompositions;
  return s;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<double> padded_desc(std::vector<double> v, std::size_t n) {
  v.resize(n, 0.0);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// --- 1 -----------------------------------------------------------------------
Outcome spectrum_equality() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t du = 1 + (seed * 7) % 16;
    const std::size_t dv = 1 + (seed * 11 + 3) % 16;
    const auto st = random_state(du, dv, 0x5eed0000 + seed);
    const auto eu = hermitian_eig(reduce_u(st).matrix()).eigenvalues;
    const auto ev = hermitian_eig(reduce_v(st).matrix()).eigenvalues;
    const std::size_t n = std::max(du, dv);
    const auto a = padded_desc(eu, n);
    const auto b = padded_desc(ev, n);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    tracked_schmidt(st);
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && t < 5.0, fmt("max |dlambda| = %.2e over 200 states, %.2f s", worst, t)};
}

// --- 3 -----------------------------------------------------------------------
Outcome purity_dichotomy() {
  bool ok = true;
  double worst_entropy = 0.0;
  auto check_product = [&](const PureBipartiteState &st) {
    const auto r = entanglement_report(tracked_schmidt(st));
    ok = ok && r.schmidt_rank == 1 && std::abs(r.purity - 1.0) <= 1e-12 && r.entropy < 1e-8;
    worst_entropy = std::max(worst_entropy, r.entropy);
  };
  check_product(io::load_state_json(kFixtures + "/product.json").state);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto u = random_state(1, 1 + seed % 8, 100 + seed).as_vector();
    const auto v = random_state(1, 1 + (seed * 5) % 9, 200 + seed).as_vector();
    check_product(PureBipartiteState::product(u, v));
  }
  const auto bell = entanglement_report(tracked_schmidt(io::load_state_json(kFixtures + "/bell.json").state));
  const double dp = std::abs(bell.purity - 0.5);
  const double de = std::abs(bell.entropy - std::numbers::ln2);
  ok = ok && dp <= 1e-12 && de <= 1e-9;
  return {ok, fmt("products: max entropy %.1e; Bell: |purity-0.5| %.1e, |S-ln2| %.1e", worst_entropy,
                  dp, de)};
}

// --- 4 -----------------------------------------------------------------------
Outcome dft_vs_dense() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t n : {16UL, 32UL, 64UL, 128UL}) {
    for (double decay : {0.7, 2.0}) {
      lattice::LatticeParams p;
      p.n_sites = n;
      p.box_length = 40.0;
      p.decay = decay;
      p.mass_ratio = hydrogen::kProtonElectronMassRatio;
      const auto c = lattice::reduced_electron_correlation(lattice::build_state(p));
      const auto sp = spectrum(c);
      std::vector<double> dft(sp.lambdas().begin(), sp.lambdas().end());
      std::sort(dft.begin(), dft.end(), std::greater<>());

      ComplexMatrix dense(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) dense(a, b) = c.correlation()[(a + n - b) % n] * c.spacing();
      const auto eig = hermitian_eig(dense).eigenvalues;
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(dft[i] - eig[i]));
      ++cases;
    }
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-10 && t < 10.0,
          fmt("max |dlambda| = %.2e over %g lattices (N <= 128), %.2f s", worst, static_cast<double>(cases), t)};
}

// --- 5 -----------------------------------------------------------------------
double radial_trace(const std::function<double(double)> &omega_rho, double kmax) {
  quad::Options opt;
  opt.max_intervals = 20000;
  const double integral = quad::integrate([&](double k) { return k * k * omega_rho(k); }, 0.0, kmax, opt).value;
  return 4.0 * kPi * integral / std::pow(2.0 * kPi, 3);
}

Outcome trace_condition() {
  auto exp4 = [](double k) { return hydrogen::rho_tilde_int(k); };
  auto exp1 = [](double k) { return 64.0 * kPi / (1.0 + k * k); };
  quad::Options opt;
  const double full = 4.0 * kPi *
                      quad::integrate_to_infinity([&](double k) { return k * k * exp4(k); }, 0.0, opt).value /
                      std::pow(2.0 * kPi, 3);
  const double t10 = radial_trace(exp1, 10.0);
  const double t100 = radial_trace(exp1, 100.0);
  const double t1000 = radial_trace(exp1, 1000.0);
  const bool diverges = t100 > 5.0 * t10 && t1000 > 5.0 * t100 && std::abs(t10 - 1.0) > 1.0;
  return {std::abs(full - 1.0) <= 1e-8 && diverges,
          fmt("exponent 4: |trace-1| = %.1e; exponent 1: %.4g -> %.4g -> ", std::abs(full - 1.0), t10, t100) +
              fmt("%.4g at k_max = 10, 100, 1000", t1000)};
}

// --- 6 -----------------------------------------------------------------------
Outcome fourier_pair() {
  double worst = 0.0;
  for (double k : {0.5, 1.0, 2.0}) {
    const double period = kPi / k;
    double total = 0.0;
    for (double lo = 0.0; lo < 80.0; lo += period) {
      const double hi = std::min(lo + period, 80.0);
      total += quad::integrate(
                   [&](double s) { return 4.0 * kPi * hydrogen::autocorrelation_1s(s) * std::sin(k * s) / k * s; },
                   lo, hi)
                   .value;
    }
    worst = std::max(worst, std::abs(total - hydrogen::rho_tilde_int(k)) / hydrogen::rho_tilde_int(k));
  }
  return {worst <= 1e-7, fmt("max relative deviation %.2e at k = 0.5, 1, 2", worst)};
}

// --- 7 -----------------------------------------------------------------------
Outcome delta_p_check() {
  hydrogen::HydrogenParams p;
  const double q = hydrogen::delta_p_quadrature(p);
  const auto table = hydrogen::radial_spectrum_export(p, 40.0, 4096);
  const double d = hydrogen::occupation_stddev(table);
  return {std::abs(q - 1.0) <= 1e-8 && std::abs(d - 1.0) <= 1e-3,
          fmt("quadrature |dp-1| = %.1e; radial export (k_max 40, 4096 bins) |dp-1| = %.1e",
              std::abs(q - 1.0), std::abs(d - 1.0))};
}

// --- 8 -----------------------------------------------------------------------
Outcome boost_invariance() {
  hydrogen::HydrogenParams rest;
  rest.m_p = 1.0;
  const auto r0 = hydrogen::lab_frame_moments(rest);
  double worst_mean = 0.0, worst_width = 0.0;
  for (const hydrogen::Vec3 &P : {hydrogen::Vec3{0.0, 0.0, 1.0}, hydrogen::Vec3{0.6, -0.8, 1.5},
                                  hydrogen::Vec3{-3.0, 2.0, 0.5}}) {
    auto p = rest;
    p.P = P;
    const auto m = hydrogen::lab_frame_moments(p);
    const auto drift = p.electron_drift();
    for (int i = 0; i < 3; ++i) worst_mean = std::max(worst_mean, std::abs(m.mean[i] - drift[i]));
    worst_width = std::max(worst_width, std::abs(m.delta_p - r0.delta_p));
  }

  lattice::LatticeParams lp;
  lp.mass_ratio = 1.0;
  lp.decay = 2.0;
  const auto base = spectrum(lattice::reduced_electron_correlation(lattice::build_state(lp)));
  double worst_bin = 0.0;
  for (long com : {2L, 6L, -10L}) {
    lp.com_index = com;
    const auto st = lattice::build_state(lp);
    const auto moved = spectrum(lattice::reduced_electron_correlation(st));
    const auto predicted = entangle::boost(base, st.electron_shift);
    for (std::size_t i = 0; i < moved.size(); ++i)
      worst_bin = std::max(worst_bin, std::abs(moved.lambdas()[i] - predicted.lambdas()[i]));
  }
  return {worst_mean <= 1e-6 && worst_width <= 1e-6 && worst_bin <= 1e-9,
          fmt("|<p> - (m_e/M)P| %.1e; |dDelta p| %.1e; lattice per-bin %.1e", worst_mean, worst_width,
              worst_bin)};
}

// --- 9 -----------------------------------------------------------------------
Outcome cross_module() {
  lattice::LatticeParams p;
  p.n_sites = 64;
  p.box_length = 40.0;
  p.decay = 1.0;
  p.mass_ratio = hydrogen::kProtonElectronMassRatio;
  const auto st = lattice::build_state(p);
  tracked_schmidt(st.state);
  const auto rep = lattice::cross_check(st);
  return {rep.max_deviation <= 1e-9, fmt("N = 64: max |lambda_schmidt - lambda_dft| = %.2e", rep.max_deviation)};
}

// --- 10 ----------------------------------------------------------------------
Outcome monotone_scan() {
  lattice::LatticeParams p;
  p.mass_ratio = 1.0;
  std::vector<double> decays;
  for (double a = 2.5; a <= 5.0 + 1e-12; a += 0.25) decays.push_back(a);
  const auto rows = lattice::entanglement_vs_decay_scan(p, decays);
  bool monotone = true;
  double prev = 1e300, lo = 1e300, hi = 0.0;
  std::size_t used = 0;
  for (const auto &r : rows) {
    if (!r.well_resolved) continue;
    ++used;
    monotone = monotone && r.delta_p < prev;
    prev = r.delta_p;
    lo = std::min(lo, r.delta_p * r.decay);
    hi = std::max(hi, r.delta_p * r.decay);
  }
  return {monotone && used >= 2 && hi / lo <= 1.2,
          fmt("%g well-resolved decays, strictly decreasing; Delta p * a in [%.4f, %.4f]",
              static_cast<double>(used), lo, hi)};
}

}  // namespace

int main() {
  struct Criterion {
    const char *name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"Schmidt spectrum equality", spectrum_equality},
      {"unit trace and normalization", nullptr},
      {"purity dichotomy", purity_dichotomy},
      {"DFT vs dense circulant", dft_vs_dense},
      {"hydrogen trace condition", trace_condition},
      {"Fourier pair", fourier_pair},
      {"Delta p = hbar / a0", delta_p_check},
      {"Galilean boost invariance", boost_invariance},
      {"cross-module consistency", cross_module},
      {"monotone correlation scan", monotone_scan},
  };

  std::vector<Outcome> outcomes(10);
  // Criterion 2 audits every decomposition the others take, so it runs last.
  for (int i = 0; i < 10; ++i) {
    if (i == 1) continue;
    try {
      outcomes[i] = criteria[i].run();
    } catch (const std::exception &e) {
      outcomes[i] = {false, std::string("exception: ") + e.what()};
    }
  }
  outcomes[1] = {g_decompositions > 0 && g_worst_lambda_sum <= 1e-10,
                 fmt("max |sum lambda - 1| = %.2e over %g decompositions", g_worst_lambda_sum,
                     static_cast<double>(g_decompositions))};

  int failures = 0;
  for (int i = 0; i < 10; ++i) {
    std::printf("criterion %2d %s  %-30s %s\n", i + 1, outcomes[i].pass ? "PASS" : "FAIL", criteria[i].name,
                outcomes[i].detail.c_str());
    failures += outcomes[i].pass ? 0 : 1;
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}

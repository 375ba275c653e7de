// Copyright 2026 The tempdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tempdist/cli.hpp"
#include "tempdist/closedform.hpp"
#include "tempdist/combinatorics.hpp"
#include "tempdist/metrics.hpp"
#include "tempdist/modes.hpp"
#include "tempdist/noon.hpp"

namespace tempdist {
namespace {

constexpr double kGap = 15.0;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Verdict permanents() {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    std::vector<Complex> e(n * n);
    for (auto& x : e) x = {d(rng), d(rng)};
    const SquareComplexMatrix m(n, e);
    const Complex naive = permanent_naive(m);
    worst = std::max(worst, std::abs(permanent_ryser(m) - naive) / std::abs(naive));
  }
  return {worst <= 1e-12, fmt("200 matrices, dims 2-8, max rel err %.2e", worst)};
}

Verdict normalization_law() {
  double worst_limits = 0.0;
  for (int n = 2; n <= 7; ++n) {
    const std::vector<TemporalMode> together(static_cast<std::size_t>(n), TemporalMode(1.0));
    std::vector<TemporalMode> apart;
    for (int f = 0; f < n; ++f) apart.emplace_back(1.0, 0.0, f);
    worst_limits = std::max(
        worst_limits,
        rel(normalization(ProductState::single_polarization(together)), factorial_d(n)));
    worst_limits = std::max(
        worst_limits, std::abs(normalization(ProductState::single_polarization(apart)) - 1.0));
  }
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst_oracle = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<TemporalMode> modes;
    for (int i = 0; i < n; ++i) modes.emplace_back(1.0, d(rng));
    worst_oracle = std::max(worst_oracle, rel(normalization(ProductState::single_polarization(modes)),
                                              oracles::permutation_sum(modes).real()));
  }
  return {worst_limits <= 1e-9 && worst_oracle <= 1e-10,
          fmt("N!/1 limits err %.2e; 50 random configs vs permutation sum, max rel err %.2e",
              worst_limits, worst_oracle)};
}

Verdict bunching_ratio() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const auto together = ProductState::single_polarization(well_separated_config({n}, kGap));
    const auto apart = ProductState::single_polarization(
        well_separated_config(std::vector<int>(static_cast<std::size_t>(n), 1), kGap));
    worst = std::max(worst,
                     rel(coincidence_total(together) / coincidence_total(apart), factorial_d(n)));
  }
  return {worst <= 1e-6, fmt("N = 2..6, max rel err vs N! %.2e", worst)};
}

Verdict hom() {
  const TemporalMode m(1.0);
  const double at_zero = hom_visibility({m, m, 0.0});
  const double far = hom_visibility({m, m, 20.0});
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const TwoPhotonAmplitude amp{m, m, 0.3 * i};
    worst = std::max(worst, rel(hom_visibility(amp), oracles::hom_quadrature(amp)));
  }
  return {std::abs(at_zero - 1.0) <= 1e-15 && far < 1e-12 && worst <= 1e-9,
          fmt("V(0) = %.17g, V(20/sigma) = %.2e, 10-point 2-D quadrature max rel err %.2e",
              at_zero, far, worst)};
}

Verdict pdc() {
  const TwoPhotonAmplitude sym{TemporalMode(1.0), TemporalMode(1.0), 0.0};
  const double ea0 = pair_ratio_EA(sym, 0.0);
  const double ea_far = pair_ratio_EA(sym, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double s = 0.4 * i;
    const double ea = pair_ratio_EA(sym, s);
    const PdcRates d = pdc_rates(sym, 0.1, true, s);
    const PdcRates n = pdc_rates(sym, 0.1, false, s);
    worst = std::max(worst, rel(d.p4, 3.0 * d.p2 * d.p2 * (1.0 + 2.0 * ea)));
    worst = std::max(worst, rel(n.p4, 2.0 * n.p2 * n.p2 * (1.0 + ea)));
  }
  return {ea0 == 1.0 && ea_far < 1e-12 && worst <= 1e-8,
          fmt("E/A(0) = %.17g, E/A(20/sigma) = %.2e, identity max rel err %.2e", ea0, ea_far,
              worst)};
}

Verdict three_photon() {
  auto dips_for = [](std::vector<double> h_delays) {
    std::vector<TemporalMode> h;
    for (double t : h_delays) h.emplace_back(1.0, t);
    return scan(PhotonConfig(h, {TemporalMode(1.0, -40.0)}), AllH{}, {0.0}).visibilities;
  };
  const auto coincident = dips_for({0.0, 0.0});
  const auto separated = dips_for({0.0, kGap});
  bool ok = coincident.size() == 1 && std::abs(coincident[0].visibility - 1.0) <= 1e-6 &&
            separated.size() == 2;
  double worst = 0.0;
  for (const Dip& d : separated) worst = std::max(worst, std::abs(d.visibility - 0.5));
  ok = ok && worst <= 1e-6;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "coincident H pair: %zu dip(s), V = %.12f; separated by 15/sigma: %zu dips, "
                "max |V - 1/2| %.2e",
                coincident.size(), coincident.empty() ? -1.0 : coincident[0].visibility,
                separated.size(), worst);
  return {ok, buf};
}

Verdict m_over_n() {
  auto vis = [](int m, const std::vector<int>& stray_families) {
    std::vector<TemporalMode> v(static_cast<std::size_t>(m), TemporalMode(1.0));
    for (int f : stray_families) v.emplace_back(1.0, 0.0, f);
    const PhotonConfig aligned({TemporalMode(1.0)}, v);
    return visibility(aligned, baseline_config(aligned, AllH{}, BaselineMode::kFamily));
  };
  double worst = 0.0, worst_regroup = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      std::vector<int> separate(static_cast<std::size_t>(n - m));
      std::iota(separate.begin(), separate.end(), 1);
      const double v = vis(m, separate);
      worst = std::max(worst, std::abs(v - static_cast<double>(m) / n));
      // Stray photons regrouped: all together, and alternating in two groups.
      std::vector<int> together(separate.size(), 1), halves;
      for (std::size_t i = 0; i < separate.size(); ++i) halves.push_back(1 + static_cast<int>(i % 2));
      worst_regroup = std::max(worst_regroup, std::abs(vis(m, together) - v));
      worst_regroup = std::max(worst_regroup, std::abs(vis(m, halves) - v));
    }
  }
  return {worst <= 1e-9 && worst_regroup <= 1e-9,
          fmt("N <= 6, max |V - m/N| %.2e, max regrouping change %.2e", worst, worst_regroup)};
}

Verdict golden_tables() {
  bool ok = true;
  double worst = 0.0;
  int entries = 0;
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    for (const auto& c : check_golden(k, n)) {
      ++entries;
      ok = ok && c.matches();
      worst = std::max(worst, std::abs(bruteforce_visibility(parse_scenario_string(c.label)) -
                                       to_double(c.expected)));
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d entries exact as rationals: %s; brute force max abs diff %.2e",
                entries, ok ? "yes" : "no", worst);
  return {ok && entries == 31 && worst <= 1e-9, buf};
}

Verdict enumeration_counts() {
  const std::size_t a = enumerate_scenarios(2, 3).size();
  const std::size_t b = enumerate_scenarios(2, 4).size();
  const std::size_t c = enumerate_scenarios(3, 3).size();
  return {a == 8 && b == 12 && c == 11,
          fmt("(2H,3V) %.0f, (2H,4V) %.0f, (3H,3V) %.0f", static_cast<double>(a),
              static_cast<double>(b), static_cast<double>(c))};
}

Verdict formula_sweep() {
  double worst = 0.0;
  std::size_t count = 0;
  for (int total = 2; total <= 7; ++total) {
    for (int k = 1; k < total; ++k) {
      for (const Scenario& s : enumerate_all_scenarios(k, total - k)) {
        ++count;
        worst = std::max(worst, std::abs(to_double(visibility_formula(s)) - bruteforce_visibility(s)));
      }
    }
  }
  return {worst <= 1e-9, fmt("%.0f scenarios with k+N <= 7, max abs diff %.2e",
                             static_cast<double>(count), worst)};
}

Verdict determinism() {
  auto output = [](RunSpec spec, unsigned threads) {
    spec.threads = threads;
    std::ostringstream out, err;
    const int status = run(spec, out, err);
    return std::to_string(status) + "\n" + out.str();
  };
  const unsigned max_threads = std::max(4u, resolve_threads(0));

  RunSpec tables;
  tables.subcommand = Subcommand::kTables;
  RunSpec noon;
  noon.subcommand = Subcommand::kNoonScan;
  noon.input = "2H1V+1H2V+V";
  noon.grid = Grid{-6.0, 5.95, 0.05};
  const std::size_t points = grid_points(*noon.grid).size();

  bool ok = points == 240;
  for (const RunSpec& spec : {tables, noon}) {
    const std::string reference = output(spec, 1);
    ok = ok && reference.starts_with("0\n");
    for (unsigned threads : {1u, max_threads, max_threads}) {
      ok = ok && output(spec, threads) == reference;
    }
  }
  return {ok, fmt("tables and a %.0f-point noon-scan byte-identical across 1 and %.0f threads",
                  static_cast<double>(points), static_cast<double>(max_threads))};
}

}  // namespace
}  // namespace tempdist

int main() {
  using namespace tempdist;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"permanent oracle equivalence", permanents},
      {"normalization law", normalization_law},
      {"bunching ratio N!", bunching_ratio},
      {"HOM visibility", hom},
      {"E/A and PDC identities", pdc},
      {"three-photon dips", three_photon},
      {"m/N law", m_over_n},
      {"golden tables", golden_tables},
      {"scenario enumeration counts", enumeration_counts},
      {"formula vs brute-force sweep", formula_sweep},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("[%s] %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

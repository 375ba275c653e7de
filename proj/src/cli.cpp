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

#include "tempdist/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "tempdist/errors.hpp"

namespace tempdist {

namespace {

constexpr double kSeparationGap = 15.0;  // in units of 1/sigma

bool looks_like_path(const std::string& input) {
  return input.find('/') != std::string::npos || input.ends_with(".json");
}

PolarizedConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

// Groups at multiples of the separation gap, all in one family, so that
// the separation is physical rather than exact.
PhotonConfig delayed_scenario_config(const Scenario& s, double sigma = 1.0) {
  const double gap = kSeparationGap / sigma;
  std::vector<TemporalMode> h, v;
  int slot = 0;
  for (const Group& g : s.groups()) {
    for (int i = 0; i < g.h; ++i) h.emplace_back(sigma, slot * gap);
    for (int i = 0; i < g.v; ++i) v.emplace_back(sigma, slot * gap);
    ++slot;
  }
  for (int i = 0; i < s.stray_v(); ++i) v.emplace_back(sigma, (slot++) * gap);
  return PhotonConfig(std::move(h), std::move(v));
}

TwoPhotonAmplitude amplitude_from(const RunSpec& spec) {
  if (spec.input.empty()) return {TemporalMode(1.0), TemporalMode(1.0), 0.0};
  const auto config = load_config(spec.input);
  if (config.photons.size() != 2) {
    throw ValidationError("two-photon input must list exactly two photons");
  }
  return {config.photons[0].mode, config.photons[1].mode, 0.0};
}

ScanTarget parse_target(const std::string& text, const PhotonConfig& config) {
  if (text == "all") return AllH{};
  std::size_t used = 0;
  long index = -1;
  try {
    index = std::stol(text, &used);
  } catch (const std::exception&) {
  }
  if (used != text.size() || index < 0) {
    throw ValidationError("target must be 'all' or a non-negative H group index");
  }
  if (static_cast<std::size_t>(index) >= h_groups(config).size()) {
    throw ValidationError("target group " + text + " does not exist");
  }
  return static_cast<std::size_t>(index);
}

void require_kn(const RunSpec& spec) {
  if (spec.k.has_value() != spec.n.has_value()) {
    throw ValidationError("--k and --n must be given together");
  }
}

struct Artifact {
  std::string contents;
  int status = kExitOk;
};

Artifact run_hom_scan(const RunSpec& spec) {
  const TwoPhotonAmplitude base = amplitude_from(spec);
  ScanResult result;
  result.delays = grid_points(spec.grid.value_or(Grid{}));
  result.baseline = 0.5;
  for (double t : result.delays) {
    const TwoPhotonAmplitude amp{base.mode_a, base.mode_b, t};
    result.raw.push_back(0.5 * (1.0 - hom_visibility(amp)));
  }
  return {render(scan_records(result), spec.format)};
}

Artifact run_noon_scan(const RunSpec& spec) {
  if (spec.input.empty()) throw ValidationError("noon-scan needs --input");
  const PhotonConfig config = looks_like_path(spec.input)
                                  ? load_config(spec.input).photon_config()
                                  : delayed_scenario_config(parse_scenario_string(spec.input));
  const ScanTarget target = parse_target(spec.target, config);
  const auto grid = grid_points(spec.grid.value_or(Grid{}));
  const ScanResult result = scan(config, target, grid, resolve_threads(spec.threads));
  if (spec.format == Format::kJson) return {scan_json(result)};
  std::string text = render(scan_records(result), spec.format);
  if (spec.format == Format::kText) {
    Records dips{{"dip_location", "visibility"}, {}};
    for (const Dip& d : result.visibilities) dips.rows.push_back({d.location, d.visibility});
    text += "\n" + to_text(dips);
  }
  return {std::move(text)};
}

Artifact run_bunching(const RunSpec& spec) {
  std::vector<int> sizes;
  if (spec.n) {
    sizes.push_back(*spec.n);
  } else {
    for (int n = 2; n <= 6; ++n) sizes.push_back(n);
  }
  Records records{{"n", "coincidence_nx1", "coincidence_1xn", "ratio"}, {}};
  for (int n : sizes) {
    if (n < 1) throw ValidationError("--n must be positive");
    const auto together = ProductState::single_polarization(
        well_separated_config({n}, kSeparationGap));
    const auto apart = ProductState::single_polarization(
        well_separated_config(std::vector<int>(static_cast<std::size_t>(n), 1), kSeparationGap));
    const double a = coincidence_total(together);
    const double b = coincidence_total(apart);
    records.rows.push_back({static_cast<std::int64_t>(n), a, b, a / b});
  }
  return {render(records, spec.format)};
}

Artifact run_pdc(const RunSpec& spec) {
  const TwoPhotonAmplitude amp = amplitude_from(spec);
  Records records{{"separation", "e_over_a", "p2_degenerate", "p4_degenerate",
                   "bunching_degenerate", "p2_nondegenerate", "p4_nondegenerate",
                   "bunching_nondegenerate"},
                  {}};
  for (double s : grid_points(spec.grid.value_or(Grid{0.0, 6.0, 0.05}))) {
    const PdcRates d = pdc_rates(amp, spec.eta, true, s);
    const PdcRates nd = pdc_rates(amp, spec.eta, false, s);
    records.rows.push_back({s, pair_ratio_EA(amp, s), d.p2, d.p4, d.bunching_factor, nd.p2, nd.p4,
                            nd.bunching_factor});
  }
  return {render(records, spec.format)};
}

Artifact run_tables(const RunSpec& spec, std::ostream& err) {
  require_kn(spec);
  const FormulaConvention convention =
      spec.literal ? FormulaConvention::kLiteral : FormulaConvention::kStandard;
  const unsigned threads = resolve_threads(spec.threads);
  std::vector<std::vector<TableRow>> tables;
  std::vector<std::pair<int, int>> golden_sizes;
  if (!spec.input.empty()) {
    const Scenario s = parse_scenario_string(spec.input);
    tables.push_back({{s, visibility_formula(s, convention), bruteforce_visibility(s)}});
  } else if (spec.k) {
    tables.push_back(make_table(*spec.k, *spec.n, threads, convention));
    golden_sizes.emplace_back(*spec.k, *spec.n);
  } else {
    for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
      tables.push_back(make_table(k, n, threads, convention));
      golden_sizes.emplace_back(k, n);
    }
  }

  int status = kExitOk;
  for (auto [k, n] : golden_sizes) {
    std::vector<GoldenCheck> checks;
    try {
      checks = check_golden(k, n, convention);
    } catch (const ValidationError&) {
      continue;  // no reference table for this size
    }
    for (const auto& c : checks) {
      if (c.matches()) continue;
      status = kExitGoldenMismatch;
      err << "golden mismatch k=" << k << " n=" << n << " " << c.label << ": expected "
          << c.expected << ", formula " << c.formula
          << (c.enumerated ? "" : " (scenario not enumerated)") << "\n";
    }
  }

  std::string text;
  if (spec.format == Format::kText) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i) text += "\n";
      const Scenario& first = tables[i].front().scenario;
      text += "k=" + std::to_string(first.k()) + " n=" + std::to_string(first.n()) + "\n";
      text += to_text_table(tables[i]);
    }
  } else {
    std::vector<TableRow> all;
    for (auto& t : tables) all.insert(all.end(), t.begin(), t.end());
    text = render(table_records(all), spec.format);
  }
  return {std::move(text), status};
}

Artifact run_scenarios(const RunSpec& spec) {
  require_kn(spec);
  if (!spec.k) throw ValidationError("scenarios needs --k and --n");
  Records records{{"scenario", "k", "n", "groups", "stray_v", "formula_num", "formula_den",
                   "formula_value"},
                  {}};
  for (const Scenario& s : enumerate_scenarios(*spec.k, *spec.n)) {
    const Rational v = visibility_formula(s);
    records.rows.push_back({render(s), static_cast<std::int64_t>(s.k()),
                            static_cast<std::int64_t>(s.n()), static_cast<std::int64_t>(s.r()),
                            static_cast<std::int64_t>(s.stray_v()),
                            boost::multiprecision::numerator(v).convert_to<std::int64_t>(),
                            boost::multiprecision::denominator(v).convert_to<std::int64_t>(), to_double(v)});
  }
  return {render(records, spec.format)};
}

Artifact dispatch(const RunSpec& spec, std::ostream& err) {
  switch (spec.subcommand) {
    case Subcommand::kHomScan:
      return run_hom_scan(spec);
    case Subcommand::kNoonScan:
      return run_noon_scan(spec);
    case Subcommand::kBunching:
      return run_bunching(spec);
    case Subcommand::kPdc:
      return run_pdc(spec);
    case Subcommand::kTables:
      return run_tables(spec, err);
    case Subcommand::kScenarios:
      return run_scenarios(spec);
  }
  throw ValidationError("unknown subcommand");
}

}  // namespace

Subcommand parse_subcommand(const std::string& name) {
  for (Subcommand s : {Subcommand::kHomScan, Subcommand::kNoonScan, Subcommand::kBunching,
                       Subcommand::kPdc, Subcommand::kTables, Subcommand::kScenarios}) {
    if (subcommand_name(s) == name) return s;
  }
  throw ValidationError("unknown subcommand '" + name + "'");
}

std::string subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::kHomScan:
      return "hom-scan";
    case Subcommand::kNoonScan:
      return "noon-scan";
    case Subcommand::kBunching:
      return "bunching";
    case Subcommand::kPdc:
      return "pdc";
    case Subcommand::kTables:
      return "tables";
    case Subcommand::kScenarios:
      return "scenarios";
  }
  return "?";
}

std::vector<double> grid_points(const Grid& grid) {
  if (!std::isfinite(grid.min) || !std::isfinite(grid.max) || !std::isfinite(grid.step)) {
    throw ValidationError("grid bounds and step must be finite");
  }
  if (!(grid.step > 0.0)) throw ValidationError("grid step must be positive");
  if (grid.max < grid.min) throw ValidationError("grid is empty: max < min");
  const double span = (grid.max - grid.min) / grid.step;
  if (span > 1e7) throw SizeLimitError("grid points", static_cast<std::size_t>(span), 10000000);
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = grid.min + static_cast<double>(i) * grid.step;
  return out;
}

unsigned resolve_threads(unsigned requested) {
  unsigned threads = requested;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("TEMPDIST_MAX_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && value > 0) {
      threads = std::min(threads, static_cast<unsigned>(value));
    }
  }
  return threads;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const Artifact artifact = dispatch(spec, err);
    if (spec.output.empty()) {
      out << artifact.contents;
    } else {
      write_file(spec.output, artifact.contents);
    }
    return artifact.status;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace tempdist

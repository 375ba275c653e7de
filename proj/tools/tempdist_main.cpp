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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tempdist/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Temporal distinguishability of multi-photon states"};
  app.require_subcommand(1);

  tempdist::RunSpec spec;
  std::string format = "csv";
  double grid_min = 0.0, grid_max = 0.0, grid_step = 0.0;
  int k = 0, n = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", spec.output, "Output file (default: stdout)");
    sub->add_option("-f,--format", format, "csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("-j,--threads", spec.threads, "Worker threads, 0 = auto");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--min", grid_min, "Grid start, units of 1/sigma");
    sub->add_option("--max", grid_max, "Grid end, units of 1/sigma");
    sub->add_option("--step", grid_step, "Grid step, units of 1/sigma");
  };

  auto* hom = app.add_subcommand("hom-scan", "Two-photon HOM dip versus delay");
  hom->add_option("-i,--input", spec.input, "JSON config with two photons");
  add_grid(hom);
  add_common(hom);

  auto* noon = app.add_subcommand("noon-scan", "NOON projection coincidence versus delay");
  noon->add_option("-i,--input", spec.input, "JSON config path or scenario string")->required();
  noon->add_option("--target", spec.target, "'all' or an H group index");
  add_grid(noon);
  add_common(noon);

  auto* bunching = app.add_subcommand("bunching", "N x 1 versus 1 x N coincidence ratio");
  bunching->add_option("-n,--n", n, "Photon number (default: 2..6)");
  add_common(bunching);

  auto* pdc = app.add_subcommand("pdc", "Two- and four-photon PDC rates versus pair separation");
  pdc->add_option("-i,--input", spec.input, "JSON config with the two pair photons");
  pdc->add_option("--eta", spec.eta, "Pair amplitude, |eta| < 0.3");
  add_grid(pdc);
  add_common(pdc);

  auto* tables = app.add_subcommand("tables", "Closed-form visibility tables with brute-force check");
  tables->add_option("-i,--input", spec.input, "Single scenario string");
  tables->add_option("-k,--k", k, "H photon count");
  tables->add_option("-n,--n", n, "V photon count");
  tables->add_flag("--literal", spec.literal, "Use the typeset formula reading (diagnostic)");
  add_common(tables);

  auto* scenarios = app.add_subcommand("scenarios", "List distinct grouping scenarios");
  scenarios->add_option("-k,--k", k, "H photon count")->required();
  scenarios->add_option("-n,--n", n, "V photon count")->required();
  add_common(scenarios);

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  try {
    spec.subcommand = tempdist::parse_subcommand(chosen->get_name());
    spec.format = tempdist::parse_format(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return tempdist::kExitInvalid;
  }
  auto given = [&](const char* name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--k")) spec.k = k;
  if (given("--n")) spec.n = n;
  if (given("--min") || given("--max") || given("--step")) {
    tempdist::Grid grid = spec.subcommand == tempdist::Subcommand::kPdc
                              ? tempdist::Grid{0.0, 6.0, 0.05}
                              : tempdist::Grid{};
    if (given("--min")) grid.min = grid_min;
    if (given("--max")) grid.max = grid_max;
    if (given("--step")) grid.step = grid_step;
    spec.grid = grid;
  }
  return tempdist::run(spec, std::cout, std::cerr);
}

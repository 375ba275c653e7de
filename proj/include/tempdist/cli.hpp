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

// Command dispatch shared by the tempdist executable, tests and bindings.

#ifndef TEMPDIST_CLI_HPP_
#define TEMPDIST_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tempdist/io.hpp"

namespace tempdist {

enum class Subcommand { kHomScan, kNoonScan, kBunching, kPdc, kTables, kScenarios };

Subcommand parse_subcommand(const std::string& name);
std::string subcommand_name(Subcommand s);

/// Delay grid in units of 1/sigma.
struct Grid {
  double min = -6.0;
  double max = 6.0;
  double step = 0.05;
};

/// min, min + step, ... up to max (inclusive within 1e-9 steps).
std::vector<double> grid_points(const Grid& grid);

struct RunSpec {
  Subcommand subcommand = Subcommand::kTables;
  /// JSON config path, or a scenario string for noon-scan and tables.
  std::string input;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<Grid> grid;  // subcommand default when unset
  std::string output;        // empty: standard output
  Format format = Format::kCsv;
  unsigned threads = 0;      // 0: hardware concurrency
  std::string target = "all";  // noon-scan: "all" or an H group index
  double eta = 0.1;          // pdc
  bool literal = false;      // tables: typeset formula reading (diagnostic)
};

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitGoldenMismatch = 2,
  kExitIo = 3,
};

/// Honors TEMPDIST_MAX_THREADS as an upper bound.
unsigned resolve_threads(unsigned requested);

/// Executes the spec and writes the artifact. Errors and golden mismatches
/// are reported on `err`; the return value is an ExitCode.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace tempdist

#endif  // TEMPDIST_CLI_HPP_

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

// Deterministic serialization of result records and the JSON photon
// config reader. Floats use 17 significant digits, lines end in LF.

#ifndef TEMPDIST_IO_HPP_
#define TEMPDIST_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "tempdist/closedform.hpp"
#include "tempdist/metrics.hpp"
#include "tempdist/noon.hpp"

namespace tempdist {

using Cell = std::variant<std::string, std::int64_t, double>;

/// Column-ordered rows; every row has one cell per column.
struct Records {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson, kText };

Format parse_format(const std::string& name);

/// "%.17g"; non-finite values are rejected.
std::string format_double(double x);

Records scan_records(const ScanResult& result);
Records table_records(const std::vector<TableRow>& rows);

/// {"baseline", "points": [{delay, raw, normalized}], "dips": [{location,
/// visibility}]}.
std::string scan_json(const ScanResult& result);

std::string to_csv(const Records& records);
/// Array of objects, keys in column order, two-space indent, trailing LF.
std::string to_json(const Records& records);
/// Space-padded columns.
std::string to_text(const Records& records);
/// Wide layout: one column per scenario, visibilities as fractions.
std::string to_text_table(const std::vector<TableRow>& rows);

std::string render(const Records& records, Format format);

/// Writes via a sibling temporary file and rename, so a failed write leaves
/// no partial file. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& contents);

std::string read_file(const std::filesystem::path& path);

struct PolarizedConfig {
  double sigma = 1.0;
  std::vector<LabeledMode> photons;

  std::vector<TemporalMode> modes(Polarization p) const;
  PhotonConfig photon_config() const;
};

/// {"sigma": s, "photons": [{"delay": t, "family": f, "carrier_offset": c,
/// "polarization": "H"|"V"}]}. Optional photon fields default to 0 and "V".
/// Throws ParseError on malformed JSON and ValidationError on bad values.
PolarizedConfig parse_config(const std::string& json_text);

}  // namespace tempdist

#endif  // TEMPDIST_IO_HPP_

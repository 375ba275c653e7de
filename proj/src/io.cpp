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

#include "tempdist/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "tempdist/errors.hpp"

namespace tempdist {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string fraction(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void check_rows(const Records& records) {
  for (const auto& row : records.rows) {
    if (row.size() != records.columns.size()) {
      throw ValidationError("record row width does not match column count");
    }
  }
}

ordered_json records_json(const Records& records) {
  check_rows(records);
  ordered_json out = ordered_json::array();
  for (const auto& row : records.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit([&](const auto& v) { obj[records.columns[c]] = v; }, row[c]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "text") return Format::kText;
  throw ValidationError("unknown output format '" + name + "' (expected csv, json or text)");
}

std::string format_double(double x) {
  if (!std::isfinite(x)) throw ValidationError("cannot serialize a non-finite value");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Records scan_records(const ScanResult& result) {
  if (result.delays.empty()) throw ValidationError("scan result has no grid points");
  Records out{{"delay", "raw", "normalized"}, {}};
  const auto normalized = result.normalized();
  for (std::size_t i = 0; i < result.delays.size(); ++i) {
    out.rows.push_back({result.delays[i], result.raw[i], normalized[i]});
  }
  return out;
}

Records table_records(const std::vector<TableRow>& rows) {
  Records out{{"scenario", "formula_num", "formula_den", "formula_value", "bruteforce_value",
               "abs_diff"},
              {}};
  for (const auto& row : rows) {
    const double value = to_double(row.formula);
    out.rows.push_back({render(row.scenario), boost::multiprecision::numerator(row.formula).convert_to<std::int64_t>(),
                        boost::multiprecision::denominator(row.formula).convert_to<std::int64_t>(), value,
                        row.bruteforce, std::abs(value - row.bruteforce)});
  }
  return out;
}

std::string scan_json(const ScanResult& result) {
  const Records points = scan_records(result);
  ordered_json out = ordered_json::object();
  out["baseline"] = result.baseline;
  out["points"] = records_json(points);
  out["dips"] = ordered_json::array();
  for (const Dip& d : result.visibilities) {
    out["dips"].push_back({{"location", d.location}, {"visibility", d.visibility}});
  }
  return out.dump(2) + "\n";
}

std::string to_csv(const Records& records) {
  check_rows(records);
  std::string out;
  for (std::size_t c = 0; c < records.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_field(records.columns[c]);
  }
  out += '\n';
  for (const auto& row : records.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += csv_field(cell_text(row[c]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Records& records) { return records_json(records).dump(2) + "\n"; }

std::string to_text(const Records& records) {
  check_rows(records);
  std::vector<std::vector<std::string>> cells;
  cells.push_back(records.columns);
  for (const auto& row : records.rows) {
    std::vector<std::string> line;
    for (const auto& cell : row) line.push_back(cell_text(cell));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(records.columns.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::string out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += line[c] + std::string(width[c] - line[c].size(), ' ');
    }
    text.erase(text.find_last_not_of(' ') + 1);
    out += text + '\n';
  }
  return out;
}

std::string to_text_table(const std::vector<TableRow>& rows) {
  Records layout;
  layout.columns.push_back("");
  std::vector<Cell> formula{std::string("V")};
  std::vector<Cell> brute{std::string("brute force")};
  for (const auto& row : rows) {
    layout.columns.push_back(render(row.scenario));
    formula.push_back(fraction(row.formula));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", row.bruteforce);
    brute.push_back(std::string(buf));
  }
  layout.rows = {formula, brute};
  return to_text(layout);
}

std::string render(const Records& records, Format format) {
  switch (format) {
    case Format::kCsv:
      return to_csv(records);
    case Format::kJson:
      return to_json(records);
    case Format::kText:
      return to_text(records);
  }
  throw ValidationError("unknown output format");
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("write to '" + path.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<TemporalMode> PolarizedConfig::modes(Polarization p) const {
  std::vector<TemporalMode> out;
  for (const auto& photon : photons) {
    if (photon.polarization == p) out.push_back(photon.mode);
  }
  return out;
}

PhotonConfig PolarizedConfig::photon_config() const {
  return PhotonConfig(modes(Polarization::H), modes(Polarization::V));
}

PolarizedConfig parse_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON config: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    if (!doc.is_object()) throw ValidationError("config must be a JSON object");
    PolarizedConfig out;
    out.sigma = doc.at("sigma").get<double>();
    const auto& photons = doc.at("photons");
    if (!photons.is_array() || photons.empty()) {
      throw ValidationError("config 'photons' must be a non-empty array");
    }
    for (const auto& p : photons) {
      if (!p.is_object()) throw ValidationError("each photon must be a JSON object");
      const double sigma = p.value("sigma", out.sigma);
      const double delay = p.value("delay", 0.0);
      const int family = p.value("family", 0);
      const double carrier = p.value("carrier_offset", 0.0);
      const std::string pol = p.value("polarization", std::string("V"));
      if (pol != "H" && pol != "V") {
        throw ValidationError("photon polarization must be \"H\" or \"V\", got \"" + pol + "\"");
      }
      out.photons.push_back({TemporalMode(sigma, delay, family, carrier),
                             pol == "H" ? Polarization::H : Polarization::V});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid JSON config: ") + e.what());
  }
}

}  // namespace tempdist

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

// Symbolic grouping scenarios and the closed-form visibility law, evaluated
// in exact rationals and cross-checked against the brute-force simulator.
//
// A scenario splits k H photons into r well separated groups; group j holds
// k_j H photons that coincide with m_j V photons. The remaining stray V
// photons overlap nothing. The visibility is
//
//   V = sum_{l=1..k} (-1)^(l-1) sum_{i_1+..+i_r=l} l!/(i_1!..i_r!)
//         prod_j C(k_j, i_j) m_j^(i_j) / ((N+k-1)(N+k-2)..(N+k-l))
//
// with C the binomial coefficient and m^(i) the falling factorial.

#ifndef TEMPDIST_CLOSEDFORM_HPP_
#define TEMPDIST_CLOSEDFORM_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tempdist/noon.hpp"

namespace tempdist {

using Rational = boost::multiprecision::cpp_rational;

struct Group {
  int h = 1;  // k_j >= 1
  int v = 0;  // m_j >= 0

  friend auto operator<=>(const Group&, const Group&) = default;
};

/// Groups are kept sorted descending by (h, v); two scenarios are equal
/// iff they describe the same arrangement up to group order.
class Scenario {
 public:
  Scenario(std::vector<Group> groups, int stray_v);

  const std::vector<Group>& groups() const noexcept { return groups_; }
  int stray_v() const noexcept { return stray_v_; }
  int k() const;
  int n() const;
  int r() const { return static_cast<int>(groups_.size()); }
  /// V photons sharing a group with H photons.
  int overlapping_v() const { return n() - stray_v_; }

  friend auto operator<=>(const Scenario&, const Scenario&) = default;

 private:
  std::vector<Group> groups_;
  int stray_v_;
};

/// Canonical text form, e.g. "2H1V+1V" or "1H1V+1H+2V".
std::string render(const Scenario& s);

/// Grammar: group ("+" group)*, group = [count] "H" [[count] "V"] | [count] "V".
/// Omitted counts are 1; V-only groups are stray photons. Throws ParseError
/// with the offending position, or ValidationError for zero-photon groups.
Scenario parse_scenario_string(const std::string& text);

enum class FormulaConvention {
  /// Standard binomial, m^(0) = 1, m^(i) = 0 only for i > m.
  kStandard,
  /// Typeset reading: m^(0) = m^(m) = 0 and C_k^i = (k+i)!/(k! i!).
  kLiteral,
};

Rational visibility_formula(const Scenario& s,
                            FormulaConvention convention = FormulaConvention::kStandard);

/// Every canonical scenario with k H and n V photons, including ones where
/// no V photon overlaps an H group. k + n <= kNoonMaxPhotons.
std::vector<Scenario> enumerate_all_scenarios(int k, int n);

/// Physically distinct scenarios: at least one H-V overlap, and for k == n
/// one representative per class under H <-> V relabeling (the stray V
/// photons counted as separate singletons). Sorted descending.
std::vector<Scenario> enumerate_scenarios(int k, int n);

/// One family per group, one per stray V photon; all delays zero.
PhotonConfig scenario_to_config(const Scenario& s, double sigma = 1.0);

/// Brute-force visibility: aligned config against the family-exact
/// baseline (all H groups moved to fresh families).
double bruteforce_visibility(const Scenario& s);

/// Exact brute-force visibility from integer permanents of the 0/1 overlap
/// pattern; independent of the floating-point engine.
Rational exact_bruteforce_visibility(const Scenario& s);

struct TableRow {
  Scenario scenario;
  Rational formula;
  double bruteforce = 0.0;
};

/// Rows for enumerate_scenarios(k, n); `threads` = 0 picks hardware
/// concurrency and does not affect the result.
std::vector<TableRow> make_table(int k, int n, unsigned threads = 1,
                                 FormulaConvention convention = FormulaConvention::kStandard);

struct GoldenEntry {
  std::string label;  // column header, in scenario grammar
  Rational value;
};

/// Reference visibilities for (k, n) in {(2,2), (2,3), (2,4), (3,3)}.
std::vector<GoldenEntry> golden_table(int k, int n);

struct GoldenCheck {
  std::string label;
  Rational expected;
  Rational formula;
  bool enumerated = false;  // label's scenario is among enumerate_scenarios(k, n)
  bool matches() const { return enumerated && expected == formula; }
};

std::vector<GoldenCheck> check_golden(int k, int n,
                                      FormulaConvention convention = FormulaConvention::kStandard);

double to_double(const Rational& q);

}  // namespace tempdist

#endif  // TEMPDIST_CLOSEDFORM_HPP_

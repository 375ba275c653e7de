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

#include "tempdist/closedform.hpp"

#include <gtest/gtest.h>

#include "tempdist/errors.hpp"

namespace tempdist {
namespace {

Rational q(int num, int den) { return Rational(num, den); }

TEST(ScenarioTest, CanonicalOrderAndCounts) {
  const Scenario s({{1, 1}, {2, 1}, {1, 0}}, 2);
  EXPECT_EQ(s.groups()[0], (Group{2, 1}));
  EXPECT_EQ(s.groups()[2], (Group{1, 0}));
  EXPECT_EQ(s.k(), 4);
  EXPECT_EQ(s.n(), 4);
  EXPECT_EQ(s.r(), 3);
  EXPECT_EQ(s.overlapping_v(), 2);
  EXPECT_EQ(s, Scenario({{1, 0}, {2, 1}, {1, 1}}, 2));
}

TEST(ScenarioTest, RejectsInvalid) {
  EXPECT_THROW(Scenario({}, 2), ValidationError);
  EXPECT_THROW(Scenario({{0, 1}}, 0), ValidationError);
  EXPECT_THROW(Scenario({{1, -1}}, 1), ValidationError);
  EXPECT_THROW(Scenario({{1, 0}}, 0), ValidationError);
}

TEST(ParseTest, TableHeaderForms) {
  EXPECT_EQ(parse_scenario_string("2H1V+1V"), Scenario({{2, 1}}, 1));
  EXPECT_EQ(parse_scenario_string("HV+V+H+V"), Scenario({{1, 1}, {1, 0}}, 2));
  EXPECT_EQ(parse_scenario_string("HV+V +H+V"), Scenario({{1, 1}, {1, 0}}, 2));
  EXPECT_EQ(parse_scenario_string("3H3V"), Scenario({{3, 3}}, 0));
  EXPECT_EQ(parse_scenario_string("1HV+1HV"), Scenario({{1, 1}, {1, 1}}, 0));
}

TEST(ParseTest, ErrorsCarryPosition) {
  try {
    parse_scenario_string("2H1V+X");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_scenario_string(""), ParseError);
  EXPECT_THROW(parse_scenario_string("2H1V+"), ParseError);
  EXPECT_THROW(parse_scenario_string("2H1"), ParseError);
  EXPECT_THROW(parse_scenario_string("2H1V 1V"), ParseError);
  EXPECT_THROW(parse_scenario_string("0H1V"), ValidationError);
  EXPECT_THROW(parse_scenario_string("1H+0V"), ValidationError);
  EXPECT_THROW(parse_scenario_string("3V"), ValidationError);
}

TEST(ParseTest, RenderRoundTrip) {
  for (int total = 2; total <= 7; ++total) {
    for (int k = 1; k < total; ++k) {
      for (const Scenario& s : enumerate_all_scenarios(k, total - k)) {
        EXPECT_EQ(parse_scenario_string(render(s)), s) << render(s);
      }
    }
  }
  EXPECT_EQ(render(Scenario({{1, 1}, {1, 0}}, 2)), "1H1V+1H+2V");
}

TEST(FormulaTest, SingleHReducesToMOverN) {
  for (int n = 1; n <= 7; ++n) {
    Rational previous = -1;
    for (int m = 0; m <= n; ++m) {
      const Rational v = visibility_formula(Scenario({{1, m}}, n - m));
      EXPECT_EQ(v, q(m, n));
      EXPECT_GT(v, previous);
      previous = v;
    }
  }
}

TEST(FormulaTest, KnownValues) {
  EXPECT_EQ(visibility_formula(parse_scenario_string("2H2V")), 1);
  EXPECT_EQ(visibility_formula(parse_scenario_string("2H1V+1V")), q(2, 3));
  EXPECT_EQ(visibility_formula(parse_scenario_string("1HV+1HV")), q(1, 3));
  EXPECT_EQ(visibility_formula(parse_scenario_string("1H2V+1H1V")), q(5, 12));
  // A runaway HV does not help: 1H2V+HV is below 1H2V+H+V.
  EXPECT_LT(visibility_formula(parse_scenario_string("1H2V+HV")),
            visibility_formula(parse_scenario_string("1H2V+H+V")));
  // Rows named in the text rather than the table columns.
  EXPECT_EQ(visibility_formula(parse_scenario_string("1H2V+1H1V+1V")), q(2, 5));
  EXPECT_EQ(visibility_formula(parse_scenario_string("1H2V+1H+2V")), q(2, 5));
  EXPECT_EQ(visibility_formula(parse_scenario_string("2H1V+1H1V+1V")), q(2, 5));
  EXPECT_EQ(visibility_formula(parse_scenario_string("2H1V+1H+2V")), q(2, 5));
}

TEST(FormulaTest, TypesetReadingFailsTheChecks) {
  const Scenario s({{1, 1}}, 1);
  EXPECT_NE(visibility_formula(s, FormulaConvention::kLiteral), q(1, 2));
  EXPECT_NE(visibility_formula(parse_scenario_string("2H1V+1V"), FormulaConvention::kLiteral),
            q(2, 3));
}

TEST(FormulaTest, ValuesStayInUnitInterval) {
  for (int total = 2; total <= 7; ++total) {
    for (int k = 1; k < total; ++k) {
      for (const Scenario& s : enumerate_all_scenarios(k, total - k)) {
        const Rational v = visibility_formula(s);
        EXPECT_GE(v, 0) << render(s);
        EXPECT_LE(v, 1) << render(s);
      }
    }
  }
}

TEST(EnumerationTest, DistinctScenarioCounts) {
  EXPECT_EQ(enumerate_scenarios(2, 2).size(), 4u);
  EXPECT_EQ(enumerate_scenarios(2, 3).size(), 8u);
  EXPECT_EQ(enumerate_scenarios(2, 4).size(), 12u);
  EXPECT_EQ(enumerate_scenarios(3, 3).size(), 11u);
}

TEST(EnumerationTest, DistinctAndOverlapping) {
  for (auto [k, n] : {std::pair{1, 4}, {2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
    const auto all = enumerate_scenarios(k, n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(all[i].k(), k);
      EXPECT_EQ(all[i].n(), n);
      EXPECT_GE(all[i].overlapping_v(), 1);
      if (i) EXPECT_GT(all[i - 1], all[i]);
    }
  }
  EXPECT_THROW(enumerate_scenarios(4, 5), SizeLimitError);
  EXPECT_THROW(enumerate_scenarios(0, 2), ValidationError);
}

TEST(ConfigTest, FamiliesPerGroup) {
  const PhotonConfig c = scenario_to_config(parse_scenario_string("2H1V+2V"));
  ASSERT_EQ(c.k(), 2u);
  ASSERT_EQ(c.n(), 3u);
  EXPECT_EQ(c.h_modes()[0].family(), c.v_modes()[0].family());
  EXPECT_EQ(c.h_modes()[1].family(), c.v_modes()[0].family());
  EXPECT_NE(c.v_modes()[1].family(), c.v_modes()[0].family());
  EXPECT_NE(c.v_modes()[1].family(), c.v_modes()[2].family());
  for (const auto& m : c.all_modes()) EXPECT_EQ(m.delay(), 0.0);

  const PhotonConfig pairs = scenario_to_config(parse_scenario_string("1HV+1HV"));
  EXPECT_EQ(pairs.h_modes()[0].family(), pairs.v_modes()[0].family());
  EXPECT_NE(pairs.h_modes()[0].family(), pairs.h_modes()[1].family());
}

TEST(BruteForceTest, ExactPathMatchesFormulaEverywhere) {
  for (int total = 2; total <= 7; ++total) {
    for (int k = 1; k < total; ++k) {
      for (const Scenario& s : enumerate_all_scenarios(k, total - k)) {
        EXPECT_EQ(exact_bruteforce_visibility(s), visibility_formula(s)) << render(s);
      }
    }
  }
}

TEST(BruteForceTest, FloatingPathMatchesExact) {
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {1, 5}, {3, 2}}) {
    for (const Scenario& s : enumerate_all_scenarios(k, n)) {
      EXPECT_NEAR(bruteforce_visibility(s), to_double(exact_bruteforce_visibility(s)), 1e-9)
          << render(s);
    }
  }
}

TEST(TableTest, RowsAndThreads) {
  const auto rows = make_table(2, 2);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].formula, 1);
  EXPECT_EQ(rows[1].formula, q(2, 3));
  EXPECT_EQ(rows[2].formula, q(1, 3));
  EXPECT_EQ(rows[3].formula, q(1, 3));
  for (const auto& r : rows) EXPECT_NEAR(r.bruteforce, to_double(r.formula), 1e-9);

  const auto serial = make_table(3, 3, 1);
  const auto parallel = make_table(3, 3, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].scenario, parallel[i].scenario);
    EXPECT_EQ(serial[i].bruteforce, parallel[i].bruteforce);
  }
}

TEST(TableTest, NamedRows) {
  auto find = [](const std::vector<TableRow>& rows, const std::string& label) {
    const Scenario s = parse_scenario_string(label);
    for (const auto& r : rows)
      if (r.scenario == s) return r.formula;
    return Rational(-1);
  };
  EXPECT_EQ(find(make_table(2, 4), "2H2V+2V"), q(7, 10));
  EXPECT_EQ(find(make_table(3, 3), "2H2V+H+V"), q(7, 10));
}

TEST(GoldenTest, AllTablesMatch) {
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    const auto checks = check_golden(k, n);
    EXPECT_EQ(checks.size(), golden_table(k, n).size());
    for (const auto& c : checks) EXPECT_TRUE(c.matches()) << c.label;
  }
  EXPECT_THROW(golden_table(1, 1), ValidationError);
}

TEST(GoldenTest, TypesetReadingMismatches) {
  bool any_mismatch = false;
  for (const auto& c : check_golden(2, 2, FormulaConvention::kLiteral)) {
    any_mismatch |= !c.matches();
  }
  EXPECT_TRUE(any_mismatch);
}

}  // namespace
}  // namespace tempdist

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

#include "tempdist/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tempdist/errors.hpp"

namespace tempdist {
namespace {

using oracles::four_photon_quadrature;
using oracles::hom_quadrature;
using oracles::permutation_sum;

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<TemporalMode> delays_to_modes(const std::vector<double>& delays) {
  std::vector<TemporalMode> out;
  for (double t : delays) out.emplace_back(1.0, t);
  return out;
}

TEST(HomVisibilityTest, LimitsAndSymmetry) {
  const TemporalMode m(1.0);
  EXPECT_DOUBLE_EQ(hom_visibility({m, m, 0.0}), 1.0);
  EXPECT_LT(hom_visibility({m, m, 20.0}), 1e-40);
  for (double t : {0.3, 1.0, 2.2}) {
    EXPECT_DOUBLE_EQ(hom_visibility({m, m, t}), hom_visibility({m, m, -t}));
  }
}

TEST(HomVisibilityTest, MatchesTwoDimensionalQuadrature) {
  const TemporalMode m(1.0);
  for (double t : {0.0, 0.5, 1.0, 2.0}) {
    const TwoPhotonAmplitude amp{m, m, t};
    const double numeric = hom_quadrature(amp);
    EXPECT_LE(std::abs(hom_visibility(amp) - numeric) / numeric, 1e-9) << t;
  }
}

TEST(PairRatioTest, LimitsAndQuadrature) {
  const TwoPhotonAmplitude amp{TemporalMode(1.0), TemporalMode(1.0), 0.0};
  EXPECT_DOUBLE_EQ(pair_ratio_EA(amp, 0.0), 1.0);
  EXPECT_LT(pair_ratio_EA(amp, 20.0), 1e-40);
  const auto [e, a] = four_photon_quadrature(amp, 1.0);
  EXPECT_LE(std::abs(pair_ratio_EA(amp, 1.0) - e / a) / (e / a), 1e-8);
  EXPECT_THROW(pair_ratio_EA(amp, -1.0), ValidationError);
}

TEST(NormalizationTest, CoincidentAndSeparated) {
  EXPECT_NEAR(normalization(ProductState::single_polarization(delays_to_modes({0, 0, 0, 0}))),
              24.0, 1e-12);
  EXPECT_NEAR(normalization(ProductState::single_polarization(
                  well_separated_config({1, 1, 1, 1}, 15.0))),
              1.0, 1e-9);
}

TEST(NormalizationTest, MatchesPermutationSum) {
  const auto modes = delays_to_modes({0.0, 0.0, 0.7});
  EXPECT_NEAR(normalization(ProductState::single_polarization(modes)),
              permutation_sum(modes).real(), 1e-12);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<TemporalMode> m;
      for (int i = 0; i < n; ++i) m.emplace_back(1.0, d(rng), 0, 0.3 * d(rng));
      const double value = normalization(ProductState::single_polarization(m));
      const double oracle = permutation_sum(m).real();
      EXPECT_LE(std::abs(value - oracle) / oracle, 1e-10);
      EXPECT_GE(value, 1.0 - 1e-12);
      EXPECT_LE(value, factorial_d(n) * (1.0 + 1e-12));
    }
  }
}

TEST(NormalizationTest, SizeGuard) {
  const std::vector<TemporalMode> many(11, TemporalMode(1.0));
  EXPECT_THROW(normalization(ProductState::single_polarization(many)), SizeLimitError);
  EXPECT_THROW(ProductState({}), ValidationError);
}

TEST(NormalizationGroupedTest, Cases) {
  const TemporalMode h(1.0), v(1.0, 3.3);
  const ProductState two_two({{h, Polarization::H}, {h, Polarization::H},
                              {v, Polarization::V}, {v, Polarization::V}});
  EXPECT_NEAR(normalization_grouped(two_two), 4.0, 1e-12);

  std::vector<LabeledMode> apart;
  for (const auto& m : well_separated_config({1, 1, 1}, 15.0)) apart.push_back({m, Polarization::V});
  EXPECT_NEAR(normalization_grouped(ProductState(apart)), 1.0, 1e-12);

  const auto h_block = delays_to_modes({0.0, 0.0, 0.9});
  std::vector<LabeledMode> mixed;
  for (const auto& m : h_block) mixed.push_back({m, Polarization::H});
  mixed.push_back({TemporalMode(1.0, 0.2), Polarization::V});
  EXPECT_NEAR(normalization_grouped(ProductState(mixed)),
              normalization(ProductState::single_polarization(h_block)), 1e-12);
}

TEST(CoincidenceTotalTest, BunchingFactor) {
  const auto coincident = ProductState::single_polarization(delays_to_modes({0, 0, 0}));
  const auto separated = ProductState::single_polarization(well_separated_config({1, 1, 1}, 15.0));
  EXPECT_NEAR(coincidence_total(coincident), 36.0, 1e-12);
  EXPECT_NEAR(coincidence_total(separated), 6.0, 1e-12);
  EXPECT_NEAR(coincidence_total(coincident) / coincidence_total(separated), 6.0, 1e-12);
  const auto two = ProductState::single_polarization(delays_to_modes({0, 0}));
  const auto two_apart = ProductState::single_polarization(well_separated_config({1, 1}, 15.0));
  EXPECT_NEAR(coincidence_total(two) / coincidence_total(two_apart), 2.0, 1e-12);
}

TEST(CoincidenceTotalTest, NormalizedIsDelayIndependent) {
  for (int i = 0; i <= 40; ++i) {
    const auto state = ProductState::single_polarization(delays_to_modes({0.0, 0.1 * i, 0.5}));
    EXPECT_NEAR(coincidence_total(state, Normalized::kYes), 6.0, 1e-9);
    EXPECT_NEAR(coincidence_total(state) / normalization(state), 6.0, 1e-9);
  }
}

TEST(SingleRateTest, Values) {
  EXPECT_NEAR(single_rate(ProductState::single_polarization(delays_to_modes({0, 0, 0, 0, 0}))),
              600.0, 1e-9);
  EXPECT_NEAR(single_rate(ProductState::single_polarization(
                  well_separated_config({1, 1, 1, 1, 1}, 15.0))),
              5.0, 1e-12);
  EXPECT_DOUBLE_EQ(single_rate(ProductState::single_polarization({TemporalMode(1.0)})), 1.0);
  EXPECT_DOUBLE_EQ(single_rate(ProductState::single_polarization(delays_to_modes({0, 0, 0})),
                               Normalized::kYes),
                   3.0);
}

TEST(PdcRatesTest, WorkedExamples) {
  const TwoPhotonAmplitude sym{TemporalMode(1.0), TemporalMode(1.0), 0.0};
  const double eta = 0.1;
  const PdcRates overlapping = pdc_rates(sym, eta, true, 0.0);
  EXPECT_NEAR(overlapping.p4 / (overlapping.p2 * overlapping.p2), 9.0, 1e-12);
  EXPECT_NEAR(overlapping.p2, 4.0 * eta * eta, 1e-15);
  const PdcRates apart = pdc_rates(sym, eta, false, 20.0);
  EXPECT_NEAR(apart.p4 / (apart.p2 * apart.p2), 2.0, 1e-12);
  EXPECT_NEAR(apart.bunching_factor, 2.0, 1e-12);
}

TEST(PdcRatesTest, PairBunchingIdentities) {
  const TwoPhotonAmplitude sym{TemporalMode(1.0), TemporalMode(1.0), 0.0};
  for (int i = 0; i <= 20; ++i) {
    const double s = 0.25 * i;
    const double ea = pair_ratio_EA(sym, s);
    const PdcRates d = pdc_rates(sym, 0.2, true, s);
    const PdcRates n = pdc_rates(sym, 0.2, false, s);
    const double d_expected = 3.0 * d.p2 * d.p2 * (1.0 + 2.0 * ea);
    const double n_expected = 2.0 * n.p2 * n.p2 * (1.0 + ea);
    EXPECT_LE(std::abs(d.p4 - d_expected) / d_expected, 1e-8) << s;
    EXPECT_LE(std::abs(n.p4 - n_expected) / n_expected, 1e-8) << s;
  }
}

TEST(PdcRatesTest, RejectsLargeEta) {
  const TwoPhotonAmplitude sym{TemporalMode(1.0), TemporalMode(1.0), 0.0};
  EXPECT_THROW(pdc_rates(sym, 0.3, true), ValidationError);
  EXPECT_THROW(pdc_rates(sym, -0.5, false), ValidationError);
  EXPECT_THROW(pdc_rates(sym, std::nan(""), false), ValidationError);
}

TEST(ProjectionProbabilityTest, Values) {
  EXPECT_NEAR(projection_probability(2, ProductState::single_polarization(delays_to_modes({0, 0}))),
              0.5, 1e-15);
  EXPECT_NEAR(projection_probability(
                  2, ProductState::single_polarization(well_separated_config({1, 1}, 15.0))),
              0.25, 1e-15);
  EXPECT_DOUBLE_EQ(projection_probability(1, ProductState::single_polarization({TemporalMode(1.0)})),
                   1.0);
  EXPECT_THROW(projection_probability(3, ProductState::single_polarization(delays_to_modes({0, 0}))),
               ValidationError);
}

}  // namespace
}  // namespace tempdist

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

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "tempdist/errors.hpp"

namespace tempdist {

ProductState::ProductState(std::vector<LabeledMode> photons) : photons_(std::move(photons)) {
  if (photons_.empty()) throw ValidationError("product state needs at least one photon");
}

ProductState ProductState::single_polarization(const std::vector<TemporalMode>& modes) {
  std::vector<LabeledMode> photons;
  photons.reserve(modes.size());
  for (const auto& m : modes) photons.push_back({m, Polarization::H});
  return ProductState(std::move(photons));
}

std::vector<TemporalMode> ProductState::modes() const {
  std::vector<TemporalMode> out;
  out.reserve(photons_.size());
  for (const auto& p : photons_) out.push_back(p.mode);
  return out;
}

std::vector<std::vector<TemporalMode>> ProductState::polarization_groups() const {
  std::vector<std::vector<TemporalMode>> out;
  for (Polarization pol : {Polarization::H, Polarization::V}) {
    std::vector<TemporalMode> group;
    for (const auto& p : photons_) {
      if (p.polarization == pol) group.push_back(p.mode);
    }
    if (!group.empty()) out.push_back(std::move(group));
  }
  return out;
}

namespace {

double factorial_d(std::size_t n) {
  double out = 1.0;
  for (std::size_t i = 2; i <= n; ++i) out *= static_cast<double>(i);
  return out;
}

// Permanent of a Gram matrix; real up to rounding.
double gram_permanent(const std::vector<TemporalMode>& modes) {
  if (modes.size() > kMaxPhotonsPerPolarization) {
    throw SizeLimitError("photons per polarization group", modes.size(),
                         kMaxPhotonsPerPolarization);
  }
  return permanent_ryser(gram(modes).as_matrix()).real();
}

// Sum over the given position permutations of the four-photon overlap
// integral. Positions 0,1 hold the first pair and 2,3 the second; a
// permutation that keeps the pairs intact contributes A, any other E.
template <typename Perms>
double four_photon_normalization(const Perms& perms, const PairOverlap& po) {
  double total = 0.0;
  for (const auto& p : perms) {
    const bool first_intact = (p[0] < 2) == (p[1] < 2) && (p[0] < 2) != (p[2] < 2);
    const bool second_intact = (p[2] < 2) == (p[3] < 2);
    total += (first_intact && second_intact) ? po.direct : po.exchange;
  }
  return total;
}

}  // namespace

double hom_visibility(const TwoPhotonAmplitude& amp) {
  return std::norm(overlap(amp.mode_a, amp.delayed_idler()));
}

PairOverlap pair_overlap(const TwoPhotonAmplitude& amp, double pair_separation) {
  if (!(pair_separation >= 0.0)) throw ValidationError("pair separation must be non-negative");
  // Exchanging the two signals leaves the idler integrals at 1; the signal
  // integrals give |<a | a delayed by the separation>|^2.
  const double e = std::norm(overlap(amp.mode_a, amp.mode_a.delayed_by(pair_separation)));
  return {e, 1.0};
}

double pair_ratio_EA(const TwoPhotonAmplitude& amp, double pair_separation) {
  return pair_overlap(amp, pair_separation).ratio();
}

double normalization(const ProductState& state) {
  return gram_permanent(state.modes());
}

double normalization_grouped(const ProductState& state) {
  double out = 1.0;
  for (const auto& group : state.polarization_groups()) out *= gram_permanent(group);
  return out;
}

double coincidence_total(const ProductState& state, Normalized normalized) {
  double multiplicity = 1.0;
  for (const auto& group : state.polarization_groups()) multiplicity *= factorial_d(group.size());
  if (normalized == Normalized::kYes) return multiplicity;
  return multiplicity * normalization_grouped(state);
}

double single_rate(const ProductState& state, Normalized normalized) {
  const auto n = static_cast<double>(state.size());
  if (normalized == Normalized::kYes) return n;
  return n * normalization_grouped(state);
}

PdcRates pdc_rates(const TwoPhotonAmplitude& amp, double eta, bool degenerate,
                   double pair_separation) {
  if (!(std::abs(eta) < 0.3)) {
    throw ValidationError("eta must satisfy |eta| < 0.3 (perturbative regime)");
  }
  const double eta2 = eta * eta;
  const PairOverlap po = pair_overlap(amp, pair_separation);
  // Amplitude of the four-photon term is eta^2 / 2.
  const double four_weight = eta2 * eta2 / 4.0;
  PdcRates out;
  if (degenerate) {
    // Two-photon term: 2! (I + M), M the exchange integral of the pair.
    const double intensity = 1.0;
    const double exchange = hom_visibility(amp);
    out.p2 = 2.0 * eta2 * (intensity + exchange);
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> perms;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    out.p4 = factorial_d(4) * four_weight * four_photon_normalization(perms, po);
  } else {
    out.p2 = eta2;
    // H photons at positions 0 and 2, V photons at 1 and 3.
    const std::vector<std::array<int, 4>> perms = {
        {0, 1, 2, 3}, {2, 1, 0, 3}, {0, 3, 2, 1}, {2, 3, 0, 1}};
    out.p4 = factorial_d(2) * factorial_d(2) * four_weight * four_photon_normalization(perms, po);
  }
  out.bunching_factor = out.p4 / (out.p2 * out.p2);
  return out;
}

double projection_probability(int n, const ProductState& state) {
  if (n < 1 || static_cast<std::size_t>(n) != state.size()) {
    throw ValidationError("projection_probability: state must contain exactly n photons");
  }
  return normalization(state) / std::pow(static_cast<double>(n), n);
}

}  // namespace tempdist

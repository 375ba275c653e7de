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

// Non-projective measures of temporal distinguishability: two-photon
// exchange symmetry (HOM visibility), the four-photon pair ratio E/A, state
// normalization, direct N-fold coincidence (generalized bunching) and the
// down-conversion rate examples. Rates are un-normalized; only ratios are
// meaningful.

#ifndef TEMPDIST_METRICS_HPP_
#define TEMPDIST_METRICS_HPP_

#include <cstddef>
#include <vector>

#include "tempdist/modes.hpp"

namespace tempdist {

inline constexpr std::size_t kMaxPhotonsPerPolarization = 10;

enum class Polarization { H, V };

/// Signal/idler pair with the factorized amplitude
/// Phi(w1, w2) = phi_a(w1) phi_b(w2) exp(i w2 T).
struct TwoPhotonAmplitude {
  TemporalMode mode_a;
  TemporalMode mode_b;
  double relative_delay = 0.0;

  /// The idler packet including the extra delay T.
  TemporalMode delayed_idler() const { return mode_b.delayed_by(relative_delay); }
};

struct LabeledMode {
  TemporalMode mode;
  Polarization polarization = Polarization::H;
};

/// Direct product of single-photon packets. At least one photon.
class ProductState {
 public:
  explicit ProductState(std::vector<LabeledMode> photons);
  /// All photons share one polarization label (H).
  static ProductState single_polarization(const std::vector<TemporalMode>& modes);

  std::size_t size() const noexcept { return photons_.size(); }
  const std::vector<LabeledMode>& photons() const noexcept { return photons_; }
  std::vector<TemporalMode> modes() const;
  /// Photon groups by polarization, H first; empty groups omitted.
  std::vector<std::vector<TemporalMode>> polarization_groups() const;

 private:
  std::vector<LabeledMode> photons_;
};

/// |M2(T)| = |<a | b_T>|^2 for the factorized amplitude. 1 for an
/// exchange-symmetric pair, 0 once the packets no longer overlap.
double hom_visibility(const TwoPhotonAmplitude& amp);

/// E and A for two copies of the pair, the second copy delayed by
/// `pair_separation`. A is 1 for unit-norm packets.
struct PairOverlap {
  double exchange = 0.0;  // E
  double direct = 1.0;    // A
  double ratio() const { return exchange / direct; }
};

PairOverlap pair_overlap(const TwoPhotonAmplitude& amp, double pair_separation);

/// E/A in [0, 1]: 1 for overlapping pairs, -> 0 for well separated pairs.
double pair_ratio_EA(const TwoPhotonAmplitude& amp, double pair_separation);

/// Permanent of the full Gram matrix (labels ignored, cross-family zeros kept).
double normalization(const ProductState& state);

/// Product of per-polarization permanents.
double normalization_grouped(const ProductState& state);

enum class Normalized { kNo, kYes };

/// N-fold coincidence n_1! ... n_k! N_k (N! N for a single label).
/// Normalized::kYes divides out N_k.
double coincidence_total(const ProductState& state, Normalized normalized = Normalized::kNo);

/// Single-photon rate P1 = N * N_k, or N when normalized.
double single_rate(const ProductState& state, Normalized normalized = Normalized::kNo);

struct PdcRates {
  double p2 = 0.0;
  double p4 = 0.0;
  /// p4 / p2^2
  double bunching_factor = 0.0;
};

/// Two- and four-photon rates of a weakly pumped down-converter,
/// |eta| < 0.3. The four-photon state is two copies of the pair with the
/// second delayed by `pair_separation`. Degenerate rates assume the
/// exchange-symmetric pair amplitude of a single-mode source; the
/// non-degenerate case has H signal and V idler.
PdcRates pdc_rates(const TwoPhotonAmplitude& amp, double eta, bool degenerate,
                   double pair_separation = 0.0);

/// N / n^n: probability that all n photons leave one output port of the
/// n-port splitter network. The state must have n photons.
double projection_probability(int n, const ProductState& state);

}  // namespace tempdist

#endif  // TEMPDIST_METRICS_HPP_

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

// Brute-force NOON-state projection measurement.
//
// k H photons and N V photons enter an M = k + N detector bank. Detector j
// sees E_V - E_H exp(i delta_j) with delta_j = 2 pi j / M. The M-fold
// coincidence is
//
//   P = sum_{S,S'} prod_{j in S} e^{i delta_j} prod_{j in S'} e^{-i delta_j} W(S, S')
//
// over k-subsets S, S' of detectors that receive the H photons, where
// W(S, S') sums the product of packet overlaps over all pairs of photon to
// detector assignments compatible with S and S'. The detector splitting
// constant is dropped; only ratios are meaningful.

#ifndef TEMPDIST_NOON_HPP_
#define TEMPDIST_NOON_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "tempdist/modes.hpp"

namespace tempdist {

inline constexpr std::size_t kNoonMaxPhotons = 8;
inline constexpr std::size_t kNoonOracleMaxPhotons = 6;

/// k H photons and N >= 1 V photons with k + N <= kNoonMaxPhotons.
class PhotonConfig {
 public:
  PhotonConfig(std::vector<TemporalMode> h_modes, std::vector<TemporalMode> v_modes);

  const std::vector<TemporalMode>& h_modes() const noexcept { return h_modes_; }
  const std::vector<TemporalMode>& v_modes() const noexcept { return v_modes_; }
  std::size_t k() const noexcept { return h_modes_.size(); }
  std::size_t n() const noexcept { return v_modes_.size(); }
  std::size_t total() const noexcept { return h_modes_.size() + v_modes_.size(); }

  /// H modes followed by V modes.
  std::vector<TemporalMode> all_modes() const;

  /// Same config with every mode shifted by dt.
  PhotonConfig translated(double dt) const;

  friend bool operator==(const PhotonConfig&, const PhotonConfig&) = default;

 private:
  std::vector<TemporalMode> h_modes_;
  std::vector<TemporalMode> v_modes_;
};

class DetectorBank {
 public:
  explicit DetectorBank(std::size_t m);

  std::size_t size() const noexcept { return phases_.size(); }
  double phase(std::size_t j) const { return phases_[j]; }
  /// exp(i delta_j)
  Complex phasor(std::size_t j) const;
  /// sum_j exp(i delta_j); zero up to rounding for m >= 2.
  Complex phasor_sum() const;

 private:
  std::vector<double> phases_;
};

/// M-fold coincidence via subset pairs and constrained bijection pairs.
/// Throws SizeLimitError when k + N > kNoonMaxPhotons.
double coincidence(const PhotonConfig& config);

/// Independent slow path: expands the amplitude over all M! photon to
/// detector maps with per-detector polarization coefficients and integrates
/// term by term. k + N <= kNoonOracleMaxPhotons.
double coincidence_oracle(const PhotonConfig& config);

/// (P_base - P_aligned) / P_base. The configs may differ only in H
/// placement. Throws ValidationError on a zero baseline.
double visibility(const PhotonConfig& config_aligned, const PhotonConfig& config_baseline);

/// H photons sharing family, delay, width and carrier form one group.
/// Groups are numbered by first appearance in h_modes().
std::vector<std::vector<std::size_t>> h_groups(const PhotonConfig& config);

/// Moves every H photon, or one H group, along the delay axis.
struct AllH {};
using ScanTarget = std::variant<AllH, std::size_t>;

std::vector<std::size_t> target_indices(const PhotonConfig& config, const ScanTarget& target);

PhotonConfig displace(const PhotonConfig& config, const ScanTarget& target, double offset);

enum class BaselineMode {
  /// Target moved into fresh families: exact orthogonality to every V photon.
  kFamily,
  /// Target pushed 20/sigma beyond the farthest photon.
  kDelay,
};

PhotonConfig baseline_config(const PhotonConfig& config, const ScanTarget& target,
                             BaselineMode mode = BaselineMode::kFamily);

struct Dip {
  double location = 0.0;
  double visibility = 0.0;
};

struct ScanResult {
  std::vector<double> delays;
  std::vector<double> raw;
  double baseline = 0.0;
  std::vector<Dip> visibilities;

  std::vector<double> normalized() const;
};

/// raw[i] = coincidence with the target displaced by grid[i]. The baseline
/// uses BaselineMode::kDelay. Dips are evaluated at exact alignment offsets
/// (a target photon delay equal to a same-family V delay) and kept when
/// the coincidence falls below baseline * (1 - 1e-6). `threads` = 0 picks
/// hardware concurrency; results do not depend on it.
ScanResult scan(const PhotonConfig& config, const ScanTarget& target,
                const std::vector<double>& grid, unsigned threads = 1);

}  // namespace tempdist

#endif  // TEMPDIST_NOON_HPP_

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

#include "tempdist/noon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "tempdist/combinatorics.hpp"
#include "tempdist/detail/kahan.hpp"
#include "tempdist/errors.hpp"

namespace tempdist {

PhotonConfig::PhotonConfig(std::vector<TemporalMode> h_modes, std::vector<TemporalMode> v_modes)
    : h_modes_(std::move(h_modes)), v_modes_(std::move(v_modes)) {
  if (v_modes_.empty()) throw ValidationError("photon config needs at least one V photon");
  if (total() > kNoonMaxPhotons) {
    throw SizeLimitError("NOON projection photon count", total(), kNoonMaxPhotons);
  }
}

std::vector<TemporalMode> PhotonConfig::all_modes() const {
  std::vector<TemporalMode> out(h_modes_);
  out.insert(out.end(), v_modes_.begin(), v_modes_.end());
  return out;
}

PhotonConfig PhotonConfig::translated(double dt) const {
  auto shift = [dt](std::vector<TemporalMode> modes) {
    for (auto& m : modes) m = m.delayed_by(dt);
    return modes;
  };
  return PhotonConfig(shift(h_modes_), shift(v_modes_));
}

DetectorBank::DetectorBank(std::size_t m) {
  if (m == 0) throw ValidationError("detector bank needs at least one detector");
  phases_.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    phases_[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
  }
}

Complex DetectorBank::phasor(std::size_t j) const { return std::polar(1.0, phases_[j]); }

Complex DetectorBank::phasor_sum() const {
  detail::ComplexKahanSum sum;
  for (std::size_t j = 0; j < size(); ++j) sum.add(phasor(j));
  return sum.value();
}

namespace {

// exp(2 pi i r / m) for r in [0, m).
std::vector<Complex> roots_of_unity(std::size_t m) {
  DetectorBank bank(m);
  std::vector<Complex> out(m);
  for (std::size_t r = 0; r < m; ++r) out[r] = bank.phasor(r);
  return out;
}

// Every photon-to-detector map (as detector -> photon) that sends the H
// photons 0..k-1 into the detectors of `h_detectors` and the V photons onto
// the rest.
std::vector<std::vector<int>> detector_maps(std::size_t k, std::size_t m,
                                            std::uint32_t h_detectors) {
  Partition photons(2), detectors(2);
  for (std::size_t q = 0; q < m; ++q) photons[q < k ? 0 : 1].push_back(static_cast<int>(q));
  for (std::size_t j = 0; j < m; ++j) {
    detectors[(h_detectors >> j) & 1u ? 0 : 1].push_back(static_cast<int>(j));
  }
  std::vector<std::vector<int>> out;
  for_each_constrained_bijection(photons, detectors, [&](const Assignment& photon_to_detector) {
    std::vector<int> detector_to_photon(m);
    for (std::size_t q = 0; q < m; ++q) detector_to_photon[photon_to_detector[q]] = static_cast<int>(q);
    out.push_back(std::move(detector_to_photon));
  });
  return out;
}

Complex assignment_pair_sum(const std::vector<std::vector<int>>& unprimed,
                            const std::vector<std::vector<int>>& primed, const OverlapMatrix& g) {
  const std::size_t m = g.dim();
  detail::ComplexKahanSum sum;
  for (const auto& p : unprimed) {
    for (const auto& q : primed) {
      Complex prod = 1.0;
      for (std::size_t j = 0; j < m; ++j) {
        const Complex& o = g(q[j], p[j]);
        if (o.real() == 0.0 && o.imag() == 0.0) {
          prod = 0.0;
          break;
        }
        prod *= o;
      }
      sum.add(prod);
    }
  }
  return sum.value();
}

// `scale` bounds the magnitude of the summed terms.
void check_real(Complex value, double scale, const char* where) {
  if (std::abs(value.imag()) > 1e-10 * std::max({1.0, std::abs(value.real()), scale})) {
    throw std::logic_error(std::string(where) + ": coincidence has a non-negligible imaginary part");
  }
}

std::vector<std::uint32_t> subsets_of_size(std::size_t m, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
  }
  return out;
}

}  // namespace

double coincidence(const PhotonConfig& config) {
  const std::size_t k = config.k();
  const std::size_t m = config.total();
  const auto modes = config.all_modes();
  const OverlapMatrix g = gram(modes);
  const auto roots = roots_of_unity(m);

  // Phase weight of every (S, S') pair, bucketed by |S & S'|. W(S, S') is
  // invariant under relabeling detectors, so it depends on S, S' only
  // through the size of their intersection.
  const auto subsets = subsets_of_size(m, k);
  std::vector<detail::ComplexKahanSum> phase_by_overlap(k + 1);
  for (std::uint32_t s : subsets) {
    std::size_t sum_s = 0;
    for (std::size_t j = 0; j < m; ++j) sum_s += ((s >> j) & 1u) * j;
    for (std::uint32_t t : subsets) {
      std::size_t sum_t = 0;
      for (std::size_t j = 0; j < m; ++j) sum_t += ((t >> j) & 1u) * j;
      const std::size_t shared = std::popcount(s & t);
      phase_by_overlap[shared].add(roots[(sum_s + m * k - sum_t) % m]);
    }
  }

  const std::uint32_t unprimed_set = (1u << k) - 1u;
  const auto unprimed = detector_maps(k, m, unprimed_set);
  detail::ComplexKahanSum total;
  double scale = 0.0;
  for (std::size_t shared = 0; shared <= k; ++shared) {
    const std::size_t moved = k - shared;
    if (moved > m - k) continue;
    // S' keeps the first `shared` detectors of S and takes `moved` from S̄.
    const std::uint32_t primed_set =
        ((1u << shared) - 1u) | (((1u << moved) - 1u) << k);
    const auto primed = detector_maps(k, m, primed_set);
    // Each bucket sum is invariant under a -> a*j (mod m) for j coprime to
    // m, so it is a rational integer; rounding removes the phase noise.
    const Complex phase_sum = phase_by_overlap[shared].value();
    const double weight = std::round(phase_sum.real());
    if (std::abs(phase_sum - weight) > 1e-6) {
      throw std::logic_error("coincidence: detector phase sum is not an integer");
    }
    if (weight == 0.0) continue;
    const Complex term = weight * assignment_pair_sum(unprimed, primed, g);
    scale += std::abs(term);
    total.add(term);
  }
  const Complex value = total.value();
  check_real(value, scale, "coincidence");
  return value.real();
}

double coincidence_oracle(const PhotonConfig& config) {
  const std::size_t m = config.total();
  if (m > kNoonOracleMaxPhotons) {
    throw SizeLimitError("coincidence oracle photon count", m, kNoonOracleMaxPhotons);
  }
  const std::size_t k = config.k();
  const OverlapMatrix g = gram(config.all_modes());
  const DetectorBank bank(m);

  // Detector j sees E_V - E_H exp(i delta_j): a V photon enters with
  // coefficient 1 and an H photon with -exp(i delta_j).
  std::vector<std::vector<int>> maps;
  std::vector<Complex> coefficients;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    Complex c = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (static_cast<std::size_t>(p[j]) < k) c *= -bank.phasor(j);
    }
    maps.push_back(p);
    coefficients.push_back(c);
  } while (std::next_permutation(p.begin(), p.end()));

  detail::ComplexKahanSum total;
  double scale = 0.0;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = 0; b < maps.size(); ++b) {
      Complex prod = coefficients[a] * std::conj(coefficients[b]);
      for (std::size_t j = 0; j < m; ++j) prod *= g(maps[b][j], maps[a][j]);
      scale += std::abs(prod);
      total.add(prod);
    }
  }
  const Complex value = total.value();
  check_real(value, scale, "coincidence_oracle");
  return value.real();
}

double visibility(const PhotonConfig& config_aligned, const PhotonConfig& config_baseline) {
  if (config_aligned.v_modes() != config_baseline.v_modes() ||
      config_aligned.k() != config_baseline.k()) {
    throw ValidationError("visibility: configs must differ only in H placement");
  }
  const double base = coincidence(config_baseline);
  if (!(base > 0.0)) throw ValidationError("visibility: zero baseline coincidence");
  return (base - coincidence(config_aligned)) / base;
}

std::vector<std::vector<std::size_t>> h_groups(const PhotonConfig& config) {
  std::vector<std::vector<std::size_t>> groups;
  const auto& h = config.h_modes();
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& grp) { return h[grp.front()] == h[i]; });
    if (it == groups.end()) {
      groups.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  return groups;
}

std::vector<std::size_t> target_indices(const PhotonConfig& config, const ScanTarget& target) {
  if (std::holds_alternative<AllH>(target)) {
    std::vector<std::size_t> all(config.k());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const std::size_t index = std::get<std::size_t>(target);
  const auto groups = h_groups(config);
  if (index >= groups.size()) {
    throw ValidationError("scan target H group " + std::to_string(index) + " does not exist (" +
                          std::to_string(groups.size()) + " groups)");
  }
  return groups[index];
}

PhotonConfig displace(const PhotonConfig& config, const ScanTarget& target, double offset) {
  auto h = config.h_modes();
  for (std::size_t i : target_indices(config, target)) h[i] = h[i].delayed_by(offset);
  return PhotonConfig(std::move(h), config.v_modes());
}

PhotonConfig baseline_config(const PhotonConfig& config, const ScanTarget& target,
                             BaselineMode mode) {
  const auto indices = target_indices(config, target);
  if (indices.empty()) return config;
  const auto modes = config.all_modes();
  auto h = config.h_modes();
  if (mode == BaselineMode::kFamily) {
    int fresh = 0;
    for (const auto& md : modes) fresh = std::max(fresh, md.family() + 1);
    for (std::size_t i : indices) h[i] = h[i].with_family(fresh + h[i].family());
    return PhotonConfig(std::move(h), config.v_modes());
  }
  double max_delay = -std::numeric_limits<double>::infinity();
  double min_sigma = std::numeric_limits<double>::infinity();
  for (const auto& md : modes) {
    max_delay = std::max(max_delay, md.delay());
    min_sigma = std::min(min_sigma, md.sigma());
  }
  double min_target = std::numeric_limits<double>::infinity();
  for (std::size_t i : indices) min_target = std::min(min_target, h[i].delay());
  const double shift = (max_delay - min_target) + 20.0 / min_sigma;
  for (std::size_t i : indices) h[i] = h[i].delayed_by(shift);
  return PhotonConfig(std::move(h), config.v_modes());
}

std::vector<double> ScanResult::normalized() const {
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] / baseline;
  return out;
}

ScanResult scan(const PhotonConfig& config, const ScanTarget& target,
                const std::vector<double>& grid, unsigned threads) {
  if (grid.empty()) throw ValidationError("scan grid must not be empty");
  const auto indices = target_indices(config, target);

  ScanResult out;
  out.delays = grid;
  out.raw.assign(grid.size(), 0.0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < grid.size(); i += step) {
      out.raw[i] = coincidence(displace(config, target, grid[i]));
    }
  };
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  out.baseline = coincidence(baseline_config(config, target, BaselineMode::kDelay));
  if (!(out.baseline > 0.0)) throw ValidationError("scan: zero baseline coincidence");

  std::vector<double> offsets;
  for (std::size_t i : indices) {
    const auto& h = config.h_modes()[i];
    for (const auto& v : config.v_modes()) {
      if (v.family() == h.family()) offsets.push_back(v.delay() - h.delay());
    }
  }
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end(),
                            [](double a, double b) {
                              return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
                            }),
                offsets.end());
  for (double offset : offsets) {
    const double p = coincidence(displace(config, target, offset));
    if (p < out.baseline * (1.0 - 1e-6)) {
      out.visibilities.push_back({offset, (out.baseline - p) / out.baseline});
    }
  }
  return out;
}

}  // namespace tempdist

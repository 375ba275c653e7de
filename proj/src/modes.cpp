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

#include "tempdist/modes.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include "tempdist/errors.hpp"

namespace tempdist {

TemporalMode::TemporalMode(double sigma, double delay, int family, double carrier_offset)
    : sigma_(sigma), delay_(delay), family_(family), carrier_offset_(carrier_offset) {
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw ValidationError("mode width sigma must be finite and positive");
  }
  if (!std::isfinite(delay)) throw ValidationError("mode delay must be finite");
  if (!std::isfinite(carrier_offset)) throw ValidationError("carrier offset must be finite");
  if (family < 0) throw ValidationError("mode family must be non-negative");
}

TemporalMode TemporalMode::delayed_by(double dt) const {
  return TemporalMode(sigma_, delay_ + dt, family_, carrier_offset_);
}

TemporalMode TemporalMode::with_family(int family) const {
  return TemporalMode(sigma_, delay_, family, carrier_offset_);
}

Complex TemporalMode::spectral_amplitude(double omega) const {
  const double norm = std::pow(2.0 * std::numbers::pi * sigma_ * sigma_, -0.25);
  const double x = omega - carrier_offset_;
  const double envelope = norm * std::exp(-x * x / (4.0 * sigma_ * sigma_));
  return std::polar(envelope, omega * delay_);
}

OverlapMatrix::OverlapMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw ValidationError("overlap matrix shape mismatch");
  }
}

Complex overlap(const TemporalMode& a, const TemporalMode& b) {
  if (a.family() != b.family()) return {0.0, 0.0};
  if (a == b) return {1.0, 0.0};
  // Evaluate in one fixed argument order so that <b|a> is conj(<a|b>) exactly.
  auto key = [](const TemporalMode& m) {
    return std::tuple(m.sigma(), m.delay(), m.carrier_offset());
  };
  if (key(b) < key(a)) return std::conj(overlap(b, a));
  // Integral of exp(-alpha w^2 + beta w - gamma) with complex beta.
  const double va = 4.0 * a.sigma() * a.sigma();
  const double vb = 4.0 * b.sigma() * b.sigma();
  const double alpha = 1.0 / va + 1.0 / vb;
  const double beta_re = 2.0 * a.carrier_offset() / va + 2.0 * b.carrier_offset() / vb;
  const double beta_im = b.delay() - a.delay();
  const double gamma =
      a.carrier_offset() * a.carrier_offset() / va + b.carrier_offset() * b.carrier_offset() / vb;
  // beta^2 / (4 alpha) - gamma, split into real and imaginary parts.
  const double exponent_re = (beta_re * beta_re - beta_im * beta_im) / (4.0 * alpha) - gamma;
  const double phase = 2.0 * beta_re * beta_im / (4.0 * alpha);
  // Prefactor (2 pi sa^2)^(-1/4) (2 pi sb^2)^(-1/4) sqrt(pi / alpha).
  const double prefactor =
      std::sqrt(std::numbers::pi / alpha) /
      std::sqrt(2.0 * std::numbers::pi * a.sigma() * b.sigma());
  return std::polar(prefactor * std::exp(exponent_re), phase);
}

OverlapMatrix gram(std::span<const TemporalMode> modes) {
  const std::size_t n = modes.size();
  if (n == 0) throw ValidationError("gram: empty mode list is a degenerate configuration");
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex o = overlap(modes[i], modes[j]);
      entries[i * n + j] = o;
      entries[j * n + i] = std::conj(o);
    }
  }
  return OverlapMatrix(n, std::move(entries));
}

std::vector<TemporalMode> well_separated_config(const std::vector<int>& group_sizes, double gap,
                                                double sigma) {
  if (!(gap > 0.0) || !std::isfinite(gap)) throw ValidationError("gap must be positive");
  std::vector<TemporalMode> out;
  for (std::size_t g = 0; g < group_sizes.size(); ++g) {
    if (group_sizes[g] < 1) throw ValidationError("group sizes must be at least 1");
    for (int i = 0; i < group_sizes[g]; ++i) {
      out.emplace_back(sigma, static_cast<double>(g) * gap);
    }
  }
  return out;
}

}  // namespace tempdist

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

// Single-photon temporal wave packets and their overlap (Gram) matrices.
//
// A mode has a normalized Gaussian spectral amplitude
//
//   phi(w) = (2 pi sigma^2)^(-1/4) exp(-(w - c)^2 / (4 sigma^2)) exp(i w T)
//
// where w is measured from a global reference frequency, c is the carrier
// offset and T the delay. |phi|^2 is a Gaussian of standard deviation sigma.
// Modes in different families are exactly orthogonal.

#ifndef TEMPDIST_MODES_HPP_
#define TEMPDIST_MODES_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tempdist/combinatorics.hpp"

namespace tempdist {

class TemporalMode {
 public:
  /// Throws ValidationError unless sigma is finite and > 0, delay and
  /// carrier offset are finite and family >= 0.
  explicit TemporalMode(double sigma, double delay = 0.0, int family = 0,
                        double carrier_offset = 0.0);

  double sigma() const noexcept { return sigma_; }
  double delay() const noexcept { return delay_; }
  int family() const noexcept { return family_; }
  double carrier_offset() const noexcept { return carrier_offset_; }

  TemporalMode delayed_by(double dt) const;
  TemporalMode with_family(int family) const;

  /// phi(w), the spectral amplitude. Used by quadrature checks.
  Complex spectral_amplitude(double omega) const;

  friend bool operator==(const TemporalMode&, const TemporalMode&) = default;

 private:
  double sigma_;
  double delay_;
  int family_;
  double carrier_offset_;
};

/// Gram matrix of unit-norm packets: entry (i, j) = <mode_i | mode_j>.
class OverlapMatrix {
 public:
  OverlapMatrix(std::size_t dim, std::vector<Complex> entries);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }
  SquareComplexMatrix as_matrix() const { return SquareComplexMatrix(dim_, entries_); }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// <a|b> = integral of conj(g_a(t)) g_b(t) dt, in closed form. Exactly 0
/// across families and exactly 1 for identical modes.
Complex overlap(const TemporalMode& a, const TemporalMode& b);

/// Throws ValidationError on an empty list. The result is exactly Hermitian
/// with an exact unit diagonal.
OverlapMatrix gram(std::span<const TemporalMode> modes);

/// Same-family modes grouped by delay: all members of group g sit at
/// g * gap. Requires gap > 0 and every group size >= 1.
std::vector<TemporalMode> well_separated_config(const std::vector<int>& group_sizes, double gap,
                                                double sigma = 1.0);

}  // namespace tempdist

#endif  // TEMPDIST_MODES_HPP_

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

// Exact combinatorial kernels: matrix permanents, integer compositions and
// partition-respecting bijections. Everything here is a pure function.

#ifndef TEMPDIST_COMBINATORICS_HPP_
#define TEMPDIST_COMBINATORICS_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tempdist {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kNaivePermanentMaxDim = 10;
inline constexpr std::size_t kRyserPermanentMaxDim = 30;
inline constexpr std::size_t kExactPermanentMaxDim = 20;

/// Dense square complex matrix, row-major. dim >= 1, all entries finite.
class SquareComplexMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit SquareComplexMatrix(std::size_t dim);
  /// Row-major entries; entries.size() must equal dim * dim.
  SquareComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Nested rows; must be square.
  static SquareComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static SquareComplexMatrix identity(std::size_t dim);
  static SquareComplexMatrix ones(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Sum over all dim! permutations. dim <= kNaivePermanentMaxDim.
Complex permanent_naive(const SquareComplexMatrix& m);

/// Ryser's formula with Gray-code subset order and compensated accumulation,
/// O(2^n n). dim <= kRyserPermanentMaxDim. Deterministic: single fixed
/// reduction order.
Complex permanent_ryser(const SquareComplexMatrix& m);

/// Exact permanent of an integer matrix (row-major, dim * dim entries).
/// Used with 0/1 overlap patterns where table values must be exact.
BigInt permanent_exact(std::size_t dim, std::span<const std::int64_t> entries);

struct Composition {
  std::vector<int> parts;
  int total = 0;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// All (i_1..i_r) with sum l and 0 <= i_j <= caps[j], in descending
/// lexicographic order: for l=1, r=2 the result is (1,0), (0,1).
/// Pass std::nullopt for unbounded parts.
std::vector<Composition> compositions(int l, int r,
                                      const std::optional<std::vector<int>>& caps = std::nullopt);

/// A partition of the element ids 0..n-1 into ordered parts.
using Partition = std::vector<std::vector<int>>;

/// assignment[source] = target.
using Assignment = std::vector<int>;

/// Visits every bijection that maps part i of `sources` onto part i of
/// `targets`, each exactly once. Part sizes must match pairwise.
void for_each_constrained_bijection(const Partition& sources, const Partition& targets,
                                    const std::function<void(const Assignment&)>& visit);

std::vector<Assignment> constrained_bijections(const Partition& sources,
                                               const Partition& targets);

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// m (m-1) ... (m-i+1); 1 for i == 0 and 0 for i > m.
BigInt falling_factorial(int m, int i);

}  // namespace tempdist

#endif  // TEMPDIST_COMBINATORICS_HPP_

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

#include "tempdist/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "tempdist/detail/kahan.hpp"
#include "tempdist/errors.hpp"

namespace tempdist {

SquareComplexMatrix::SquareComplexMatrix(std::size_t dim)
    : SquareComplexMatrix(dim, std::vector<Complex>(dim * dim)) {}

SquareComplexMatrix::SquareComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw ValidationError("matrix dimension must be at least 1");
  if (entries_.size() != dim_ * dim_) {
    throw ValidationError("expected " + std::to_string(dim_ * dim_) + " entries, got " +
                          std::to_string(entries_.size()));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("matrix entries must be finite");
    }
  }
}

SquareComplexMatrix SquareComplexMatrix::from_rows(
    const std::vector<std::vector<Complex>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw ValidationError("matrix rows must form a square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SquareComplexMatrix(n, std::move(flat));
}

SquareComplexMatrix SquareComplexMatrix::identity(std::size_t dim) {
  SquareComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SquareComplexMatrix SquareComplexMatrix::ones(std::size_t dim) {
  return SquareComplexMatrix(dim, std::vector<Complex>(dim * dim, Complex(1.0, 0.0)));
}

Complex permanent_naive(const SquareComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kNaivePermanentMaxDim) {
    throw SizeLimitError("naive permanent", n, kNaivePermanentMaxDim);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  detail::ComplexKahanSum total;
  do {
    Complex prod = 1.0;
    for (std::size_t row = 0; row < n; ++row) prod *= m(row, perm[row]);
    total.add(prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total.value();
}

Complex permanent_ryser(const SquareComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n > kRyserPermanentMaxDim) {
    throw SizeLimitError("Ryser permanent", n, kRyserPermanentMaxDim);
  }
  // perm(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij, with
  // S visited in Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(n, Complex(0.0, 0.0));
  std::uint64_t subset = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  detail::ComplexKahanSum total;
  for (std::uint64_t g = 1; g < count; ++g) {
    const auto col = static_cast<std::size_t>(std::countr_zero(g));
    const std::uint64_t bit = std::uint64_t{1} << col;
    subset ^= bit;
    if (subset & bit) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, col);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(i, col);
    }
    Complex prod = 1.0;
    for (const Complex& s : row_sums) prod *= s;
    if (std::popcount(subset) % 2 == 1) prod = -prod;
    total.add(prod);
  }
  const Complex result = total.value();
  return n % 2 == 1 ? -result : result;
}

BigInt permanent_exact(std::size_t dim, std::span<const std::int64_t> entries) {
  if (dim == 0) throw ValidationError("matrix dimension must be at least 1");
  if (dim > kExactPermanentMaxDim) {
    throw SizeLimitError("exact permanent", dim, kExactPermanentMaxDim);
  }
  if (entries.size() != dim * dim) throw ValidationError("entry count does not match dim");
  std::vector<BigInt> row_sums(dim);
  std::uint64_t subset = 0;
  const std::uint64_t count = std::uint64_t{1} << dim;
  BigInt total = 0;
  for (std::uint64_t g = 1; g < count; ++g) {
    const auto col = static_cast<std::size_t>(std::countr_zero(g));
    const std::uint64_t bit = std::uint64_t{1} << col;
    subset ^= bit;
    const bool added = (subset & bit) != 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (added) {
        row_sums[i] += entries[i * dim + col];
      } else {
        row_sums[i] -= entries[i * dim + col];
      }
    }
    BigInt prod = 1;
    for (const BigInt& s : row_sums) prod *= s;
    if (std::popcount(subset) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return dim % 2 == 1 ? BigInt(-total) : total;
}

namespace {

void compose(int remaining, std::size_t pos, const std::vector<int>& caps,
             std::vector<int>& current, std::vector<Composition>& out) {
  const std::size_t r = current.size();
  if (pos + 1 == r) {
    if (remaining <= caps[pos]) {
      current[pos] = remaining;
      out.push_back({current, std::accumulate(current.begin(), current.end(), 0)});
    }
    return;
  }
  // Capacity of the tail bounds how small this part may be.
  int tail_cap = 0;
  for (std::size_t j = pos + 1; j < r && tail_cap < remaining; ++j) {
    tail_cap = std::min(remaining, tail_cap + caps[j]);
  }
  for (int v = std::min(remaining, caps[pos]); v >= remaining - tail_cap && v >= 0; --v) {
    current[pos] = v;
    compose(remaining - v, pos + 1, caps, current, out);
  }
}

void check_partition(const Partition& p, std::size_t n, const char* name) {
  std::vector<bool> seen(n, false);
  for (const auto& part : p) {
    for (int id : part) {
      if (id < 0 || static_cast<std::size_t>(id) >= n || seen[id]) {
        throw ValidationError(std::string(name) + " is not a partition of 0.." +
                              std::to_string(n) + "-1");
      }
      seen[id] = true;
    }
  }
}

void biject(const Partition& sources, std::vector<std::vector<int>>& targets, std::size_t part,
            Assignment& current, const std::function<void(const Assignment&)>& visit) {
  if (part == sources.size()) {
    visit(current);
    return;
  }
  auto& perm = targets[part];
  std::sort(perm.begin(), perm.end());
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) current[sources[part][i]] = perm[i];
    biject(sources, targets, part + 1, current, visit);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<Composition> compositions(int l, int r, const std::optional<std::vector<int>>& caps) {
  if (l < 0) throw ValidationError("composition total must be non-negative");
  if (r < 1) throw ValidationError("composition needs at least one part");
  std::vector<int> bounds = caps.value_or(std::vector<int>(r, l));
  if (bounds.size() != static_cast<std::size_t>(r)) {
    throw ValidationError("caps length must equal the number of parts");
  }
  for (int& c : bounds) c = std::max(0, std::min(c, l));
  std::vector<Composition> out;
  std::vector<int> current(r, 0);
  compose(l, 0, bounds, current, out);
  return out;
}

void for_each_constrained_bijection(const Partition& sources, const Partition& targets,
                                    const std::function<void(const Assignment&)>& visit) {
  if (sources.size() != targets.size()) {
    throw ValidationError("source and target partitions have different part counts");
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i].size() != targets[i].size()) {
      throw ValidationError("part " + std::to_string(i) + " has " +
                            std::to_string(sources[i].size()) + " sources but " +
                            std::to_string(targets[i].size()) + " targets");
    }
    n += sources[i].size();
  }
  check_partition(sources, n, "sources");
  check_partition(targets, n, "targets");
  std::vector<std::vector<int>> scratch(targets.begin(), targets.end());
  Assignment current(n, -1);
  biject(sources, scratch, 0, current, visit);
}

std::vector<Assignment> constrained_bijections(const Partition& sources,
                                               const Partition& targets) {
  std::vector<Assignment> out;
  for_each_constrained_bijection(sources, targets,
                                 [&out](const Assignment& a) { out.push_back(a); });
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw ValidationError("factorial of a negative number");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt falling_factorial(int m, int i) {
  if (i < 0) throw ValidationError("falling factorial order must be non-negative");
  if (i > m) return 0;
  BigInt out = 1;
  for (int t = 0; t < i; ++t) out *= m - t;
  return out;
}

}  // namespace tempdist

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

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "tempdist/combinatorics.hpp"
#include "tempdist/errors.hpp"

namespace tempdist {

Scenario::Scenario(std::vector<Group> groups, int stray_v)
    : groups_(std::move(groups)), stray_v_(stray_v) {
  if (groups_.empty()) throw ValidationError("scenario needs at least one H group");
  for (const Group& g : groups_) {
    if (g.h < 1) throw ValidationError("every scenario group needs at least one H photon");
    if (g.v < 0) throw ValidationError("group V count must be non-negative");
  }
  if (stray_v_ < 0) throw ValidationError("stray V count must be non-negative");
  if (n() < 1) throw ValidationError("scenario needs at least one V photon");
  std::sort(groups_.begin(), groups_.end(), std::greater<>());
}

int Scenario::k() const {
  int out = 0;
  for (const Group& g : groups_) out += g.h;
  return out;
}

int Scenario::n() const {
  int out = stray_v_;
  for (const Group& g : groups_) out += g.v;
  return out;
}

std::string render(const Scenario& s) {
  std::string out;
  for (const Group& g : s.groups()) {
    if (!out.empty()) out += '+';
    out += std::to_string(g.h) + 'H';
    if (g.v > 0) out += std::to_string(g.v) + 'V';
  }
  if (s.stray_v() > 0) out += '+' + std::to_string(s.stray_v()) + 'V';
  return out;
}

namespace {

class ScenarioParser {
 public:
  explicit ScenarioParser(const std::string& text) : text_(text) {}

  Scenario parse() {
    std::vector<Group> groups;
    int stray = 0;
    skip_space();
    if (at_end()) throw ParseError("empty scenario string", pos_);
    while (true) {
      const std::size_t group_start = pos_;
      std::optional<int> first = count();
      const char c = peek();
      if (c == 'H') {
        ++pos_;
        const int h = first.value_or(1);
        int v = 0;
        std::optional<int> second = count();
        if (peek() == 'V') {
          ++pos_;
          v = second.value_or(1);
        } else if (second) {
          throw ParseError("count must be followed by 'V'", pos_);
        }
        if (h == 0) throw ValidationError("scenario group at position " +
                                          std::to_string(group_start) + " has zero H photons");
        groups.push_back({h, v});
      } else if (c == 'V') {
        ++pos_;
        const int v = first.value_or(1);
        if (v == 0) throw ValidationError("scenario group at position " +
                                          std::to_string(group_start) + " has zero photons");
        stray += v;
      } else {
        throw ParseError(at_end() ? "unexpected end of scenario" : "expected 'H' or 'V'", pos_);
      }
      skip_space();
      if (at_end()) break;
      if (peek() != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      skip_space();
    }
    return Scenario(std::move(groups), stray);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::optional<int> count() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) return std::nullopt;
    const std::size_t start = pos_;
    int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) throw ParseError("count too large", start);
      ++pos_;
    }
    return value;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

BigInt literal_falling(int m, int i) {
  if (i == 0 || i == m) return 0;
  return falling_factorial(m, i);
}

BigInt literal_choose(int k, int i) { return factorial(k + i) / (factorial(k) * factorial(i)); }

void check_size(int k, int n) {
  if (k < 1 || n < 1) throw ValidationError("scenario enumeration needs k >= 1 and n >= 1");
  if (static_cast<std::size_t>(k + n) > kNoonMaxPhotons) {
    throw SizeLimitError("scenario photon count", static_cast<std::size_t>(k + n),
                         kNoonMaxPhotons);
  }
}

// Integer partitions of n, parts in descending order.
void partitions(int n, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(n - p, p, current, out);
    current.pop_back();
  }
}

// Relabel H <-> V with the stray V photons as separate singletons. Groups
// without V photons become stray V photons of the image.
std::optional<Scenario> dual(const Scenario& s) {
  std::vector<Group> groups;
  int stray = 0;
  for (const Group& g : s.groups()) {
    if (g.v >= 1) {
      groups.push_back({g.v, g.h});
    } else {
      stray += g.h;
    }
  }
  for (int i = 0; i < s.stray_v(); ++i) groups.push_back({1, 0});
  if (groups.empty()) return std::nullopt;
  return Scenario(std::move(groups), stray);
}

// Representative preference: no V-free group of two or more H photons,
// then the largest canonical form.
bool preferred(const Scenario& a, const Scenario& b) {
  auto clean = [](const Scenario& s) {
    return std::none_of(s.groups().begin(), s.groups().end(),
                        [](const Group& g) { return g.h >= 2 && g.v == 0; });
  };
  if (clean(a) != clean(b)) return clean(a);
  return a > b;
}

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t out = 0;
  for (std::int64_t a = 1; a <= m; ++a) out += std::gcd(a, m) == 1;
  return out;
}

// Ramanujan sum c_m(r) = sum over units a mod m of exp(2 pi i a r / m).
std::int64_t ramanujan_sum(std::int64_t m, std::int64_t r) {
  auto mobius = [](std::int64_t n) {
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        sign = -sign;
      }
    }
    if (n > 1) sign = -sign;
    return sign;
  };
  const std::int64_t g = std::gcd(r, m);
  std::int64_t out = 0;
  for (std::int64_t d = 1; d <= g; ++d) {
    if (g % d == 0) out += mobius(m / d) * d;
  }
  return out;
}

// Exact coincidence for a 0/1 overlap pattern. With F(s) the total weight
// of photon permutations sending exactly s H photons onto H photons, the
// subset-pair sum collapses to
//   P = sum_s s! ((k-s)!)^2 (N-k+s)! F(s) Phi(s),
// Phi(s) the detector phase sum over subset pairs sharing s detectors
// (a rational integer, recovered exactly from Ramanujan sums).
Rational exact_coincidence(const std::vector<int>& families, int k) {
  const int m = static_cast<int>(families.size());
  const int n = m - k;

  // perm(A(x)) with x on the H-H block is a polynomial whose x^s
  // coefficient is F(s); sample it at x = 0..k and solve the Vandermonde
  // system exactly.
  std::vector<std::vector<Rational>> system(k + 1, std::vector<Rational>(k + 2));
  for (int x = 0; x <= k; ++x) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(m * m));
    for (int i = 0; i < m; ++i) {
      for (int q = 0; q < m; ++q) {
        const bool same = families[i] == families[q];
        a[i * m + q] = same ? ((i < k && q < k) ? x : 1) : 0;
      }
    }
    Rational power = 1;
    for (int s = 0; s <= k; ++s) {
      system[x][s] = power;
      power *= x;
    }
    system[x][k + 1] = Rational(permanent_exact(static_cast<std::size_t>(m), a));
  }
  for (int col = 0; col <= k; ++col) {
    int pivot = col;
    while (system[pivot][col] == 0) ++pivot;
    std::swap(system[pivot], system[col]);
    for (int row = 0; row <= k; ++row) {
      if (row == col || system[row][col] == 0) continue;
      const Rational f = system[row][col] / system[col][col];
      for (int c = col; c <= k + 1; ++c) system[row][c] -= f * system[col][c];
    }
  }

  std::vector<std::vector<std::int64_t>> counts(k + 1, std::vector<std::int64_t>(m, 0));
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) == k) subsets.push_back(s);
  }
  auto index_sum = [m](std::uint32_t s) {
    int out = 0;
    for (int j = 0; j < m; ++j) out += ((s >> j) & 1u) * j;
    return out;
  };
  for (std::uint32_t s : subsets) {
    for (std::uint32_t t : subsets) {
      const int r = ((index_sum(s) - index_sum(t)) % m + m) % m;
      ++counts[std::popcount(s & t)][r];
    }
  }
  const std::int64_t phi_m = euler_phi(m);

  Rational total = 0;
  for (int s = 0; s <= k; ++s) {
    if (k - s > n) continue;
    std::int64_t galois_sum = 0;
    for (int r = 0; r < m; ++r) galois_sum += counts[s][r] * ramanujan_sum(m, r);
    const Rational phase(galois_sum, phi_m);
    const Rational f_s = system[s][k + 1] / system[s][s];
    const BigInt weight = factorial(s) * factorial(k - s) * factorial(k - s) * factorial(n - k + s);
    total += Rational(weight) * f_s * phase;
  }
  return total;
}

std::vector<int> scenario_families(const Scenario& s, bool separate_h) {
  std::vector<int> h, v;
  const int r = s.r();
  for (int j = 0; j < r; ++j) {
    const Group& g = s.groups()[j];
    for (int i = 0; i < g.h; ++i) h.push_back(separate_h ? j + r + s.stray_v() : j);
    for (int i = 0; i < g.v; ++i) v.push_back(j);
  }
  for (int i = 0; i < s.stray_v(); ++i) v.push_back(r + i);
  h.insert(h.end(), v.begin(), v.end());
  return h;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
}

}  // namespace

Scenario parse_scenario_string(const std::string& text) { return ScenarioParser(text).parse(); }

Rational visibility_formula(const Scenario& s, FormulaConvention convention) {
  const int k = s.k();
  const int n = s.n();
  const int r = s.r();
  std::vector<int> caps(r);
  for (int j = 0; j < r; ++j) caps[j] = s.groups()[j].h;
  Rational total = 0;
  BigInt denominator = 1;
  for (int l = 1; l <= k; ++l) {
    denominator *= n + k - l;
    Rational inner = 0;
    for (const Composition& c : compositions(l, r, caps)) {
      BigInt term = factorial(l);
      BigInt parts = 1;
      for (int j = 0; j < r; ++j) {
        const int i = c.parts[j];
        const Group& g = s.groups()[j];
        parts *= factorial(i);
        if (convention == FormulaConvention::kStandard) {
          term *= binomial(g.h, i) * falling_factorial(g.v, i);
        } else {
          term *= literal_choose(g.h, i) * literal_falling(g.v, i);
        }
      }
      inner += Rational(term, parts);
    }
    const Rational contribution = inner / Rational(denominator);
    total += (l % 2 == 1) ? contribution : Rational(-contribution);
  }
  return total;
}

std::vector<Scenario> enumerate_all_scenarios(int k, int n) {
  check_size(k, n);
  std::vector<std::vector<int>> h_splits;
  std::vector<int> scratch;
  partitions(k, k, scratch, h_splits);
  std::set<Scenario> out;
  for (const auto& split : h_splits) {
    const int r = static_cast<int>(split.size());
    std::vector<int> v(r, 0);
    // Odometer over V counts per group with sum <= n.
    while (true) {
      const int used = std::accumulate(v.begin(), v.end(), 0);
      if (used <= n) {
        std::vector<Group> groups;
        for (int j = 0; j < r; ++j) groups.push_back({split[j], v[j]});
        out.insert(Scenario(std::move(groups), n - used));
      }
      int j = 0;
      while (j < r && ++v[j] > n) v[j++] = 0;
      if (j == r) break;
    }
  }
  return {out.rbegin(), out.rend()};
}

std::vector<Scenario> enumerate_scenarios(int k, int n) {
  std::vector<Scenario> candidates;
  for (Scenario& s : enumerate_all_scenarios(k, n)) {
    if (s.overlapping_v() >= 1) candidates.push_back(std::move(s));
  }
  if (k != n) return candidates;

  // Union-find over the H <-> V relabeling relation.
  std::map<Scenario, std::size_t> index;
  for (std::size_t i = 0; i < candidates.size(); ++i) index.emplace(candidates[i], i);
  std::vector<std::size_t> parent(candidates.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto d = dual(candidates[i]);
    if (!d) continue;
    const auto it = index.find(*d);
    if (it != index.end()) parent[find(i)] = find(it->second);
  }
  std::map<std::size_t, std::size_t> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t root = find(i);
    auto [it, inserted] = best.emplace(root, i);
    if (!inserted && preferred(candidates[i], candidates[it->second])) it->second = i;
  }
  std::vector<Scenario> out;
  for (const auto& [root, i] : best) out.push_back(candidates[i]);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

PhotonConfig scenario_to_config(const Scenario& s, double sigma) {
  const auto families = scenario_families(s, false);
  std::vector<TemporalMode> h, v;
  const int k = s.k();
  for (std::size_t i = 0; i < families.size(); ++i) {
    TemporalMode mode(sigma, 0.0, families[i]);
    (static_cast<int>(i) < k ? h : v).push_back(mode);
  }
  return PhotonConfig(std::move(h), std::move(v));
}

double bruteforce_visibility(const Scenario& s) {
  const PhotonConfig aligned = scenario_to_config(s);
  return visibility(aligned, baseline_config(aligned, AllH{}, BaselineMode::kFamily));
}

Rational exact_bruteforce_visibility(const Scenario& s) {
  check_size(s.k(), s.n());
  const Rational aligned = exact_coincidence(scenario_families(s, false), s.k());
  const Rational base = exact_coincidence(scenario_families(s, true), s.k());
  if (base == 0) throw ValidationError("exact visibility: zero baseline coincidence");
  return (base - aligned) / base;
}

std::vector<TableRow> make_table(int k, int n, unsigned threads, FormulaConvention convention) {
  const auto scenarios = enumerate_scenarios(k, n);
  std::vector<double> brute(scenarios.size());
  parallel_for(scenarios.size(), threads,
               [&](std::size_t i) { brute[i] = bruteforce_visibility(scenarios[i]); });
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    rows.push_back({scenarios[i], visibility_formula(scenarios[i], convention), brute[i]});
  }
  return rows;
}

std::vector<GoldenEntry> golden_table(int k, int n) {
  auto q = [](int num, int den) { return Rational(num, den); };
  if (k == 2 && n == 2) {
    return {{"2H2V", q(1, 1)}, {"2H1V+1V", q(2, 3)}, {"1HV+1HV", q(1, 3)}, {"1HV+H+V", q(1, 3)}};
  }
  if (k == 2 && n == 3) {
    return {{"2H3V", q(1, 1)},     {"2H2V+V", q(5, 6)},   {"2H1V+2V", q(1, 2)},
            {"1H3V+H", q(3, 4)},   {"1H2V+HV", q(5, 12)}, {"1H2V+H+V", q(1, 2)},
            {"HV+V+HV", q(1, 3)},  {"HV+V+H+V", q(1, 4)}};
  }
  if (k == 2 && n == 4) {
    return {{"2H4V", q(1, 1)},      {"2H3V+V", q(9, 10)},   {"2H2V+2V", q(7, 10)},
            {"2H1V+3V", q(2, 5)},   {"1H4V+H", q(4, 5)},    {"1H3V+HV", q(1, 2)},
            {"1H3V+H+V", q(3, 5)},  {"1H2V+1H2V", q(2, 5)}, {"HV+HV+2V", q(3, 10)},
            {"1H1V+1H+3V", q(1, 5)}};
  }
  if (k == 3 && n == 3) {
    return {{"3H3V", q(1, 1)},     {"3H2V+V", q(9, 10)},    {"3H1V+2V", q(3, 5)},
            {"2H2V+HV", q(3, 5)},  {"2H2V+H+V", q(7, 10)},  {"2H1V+1H2V", q(2, 5)},
            {"HV+HV+HV", q(2, 5)}, {"HV+HV+H+V", q(3, 10)}, {"HV+V+H+H+V", q(1, 5)}};
  }
  throw ValidationError("no reference table for k=" + std::to_string(k) +
                        ", n=" + std::to_string(n));
}

std::vector<GoldenCheck> check_golden(int k, int n, FormulaConvention convention) {
  const auto enumerated = enumerate_scenarios(k, n);
  std::vector<GoldenCheck> out;
  for (const auto& entry : golden_table(k, n)) {
    const Scenario s = parse_scenario_string(entry.label);
    const bool listed = std::find(enumerated.begin(), enumerated.end(), s) != enumerated.end();
    out.push_back({entry.label, entry.value, visibility_formula(s, convention), listed});
  }
  return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace tempdist

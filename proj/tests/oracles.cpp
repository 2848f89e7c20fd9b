// Copyright 2026 The Equivariant Trisection Diagrams Authors.
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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

int CountCycles(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (size_t x = s; !seen[x]; x = p[x]) seen[x] = 1;
  }
  return cycles;
}

std::array<int, 3> CountCells(const Perm& e, const Perm& r) {
  const int n = static_cast<int>(r.size());
  Perm rinv(n), phi(n);
  for (int d = 0; d < n; ++d) rinv[r[d]] = d;
  for (int d = 0; d < n; ++d) phi[d] = rinv[e[d]];
  return {CountCycles(r), CountCycles(e), CountCycles(phi)};
}

bool IsomorphicByBacktracking(const Perm& e1, const Perm& r1,
                              const std::vector<std::int64_t>& l1,
                              const Perm& e2, const Perm& r2,
                              const std::vector<std::int64_t>& l2) {
  const int n = static_cast<int>(e1.size());
  if (static_cast<int>(e2.size()) != n) return false;
  auto label = [](const std::vector<std::int64_t>& l, int d) {
    return l.empty() ? 0 : l[d];
  };
  Perm map(n, -1), used(n, 0);
  // Extends the partial bijection along E and R; false on conflict.
  std::function<bool(int, int, std::vector<int>&)> assign =
      [&](int a, int b, std::vector<int>& trail) -> bool {
    if (map[a] != -1) return map[a] == b;
    if (used[b] || label(l1, a) != label(l2, b)) return false;
    map[a] = b;
    used[b] = 1;
    trail.push_back(a);
    return assign(e1[a], e2[b], trail) && assign(r1[a], r2[b], trail);
  };
  std::function<bool()> search = [&]() -> bool {
    int a = 0;
    while (a < n && map[a] != -1) ++a;
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      std::vector<int> trail;
      if (assign(a, b, trail) && search()) return true;
      for (int x : trail) {
        used[map[x]] = 0;
        map[x] = -1;
      }
    }
    return false;
  };
  return search();
}

std::optional<int> RiemannHurwitzGenus(int n, int base_genus,
                                       const std::vector<int>& branch_orders) {
  // chi * lcm-free form: chi = n (2 - 2 g0) - sum n (1 - 1/m).
  std::int64_t chi_times = static_cast<std::int64_t>(n) * (2 - 2 * base_genus);
  for (int m : branch_orders) {
    if (n % m != 0) return std::nullopt;
    chi_times -= n - n / m;
  }
  if (chi_times % 2 != 0) return std::nullopt;
  return static_cast<int>((2 - chi_times) / 2);
}

namespace {

std::int64_t Det(std::vector<std::vector<std::int64_t>> a) {
  // Bareiss fraction-free elimination.
  const int n = static_cast<int>(a.size());
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void Subsets(int n, int k, int start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    Subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::int64_t> InvariantFactorsByMinors(
    const std::vector<std::vector<std::int64_t>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::int64_t> factors;
  std::int64_t prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    Subsets(rows, k, 0, cur, rs);
    Subsets(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        std::vector<std::vector<std::int64_t>> minor(k,
                                                     std::vector<std::int64_t>(k));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        }
        g = std::gcd(g, Det(minor));
      }
    }
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

std::vector<std::vector<std::int64_t>> RandomUnimodular(int n,
                                                         std::mt19937& rng,
                                                         int steps) {
  std::vector<std::vector<std::int64_t>> u(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  if (n < 2) return u;
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2), kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    const int i = pick(rng);
    int j = pick(rng);
    if (i == j) j = (j + 1) % n;
    switch (kind(rng)) {
      case 0: {
        const int c = coef(rng);
        for (int k = 0; k < n; ++k) u[i][k] += c * u[j][k];
        break;
      }
      case 1:
        std::swap(u[i], u[j]);
        break;
      default:
        for (int k = 0; k < n; ++k) u[i][k] = -u[i][k];
    }
  }
  return u;
}

std::vector<std::vector<std::int64_t>> MatMul(
    const std::vector<std::vector<std::int64_t>>& a,
    const std::vector<std::vector<std::int64_t>>& b) {
  const size_t n = a.size(), inner = b.size(), m = inner ? b[0].size() : 0;
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(m, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < inner; ++k) {
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

namespace {

// Levels of the cone coordinate, as closed intervals [lo, hi] in quarters.
struct LevelSpan {
  int lo, hi;
  bool interval() const { return lo != hi; }
};
constexpr LevelSpan kLevels[] = {{0, 0}, {0, 1}, {1, 1}, {1, 3}, {3, 3}, {3, 4}};

bool Inside(LevelSpan l, int lo, int hi) { return lo <= l.lo && l.hi <= hi; }

// Sector and handlebody regions from the sector descriptions: types is the
// set of face dimensions met by the chain.
bool InRegion(Region region, unsigned types, LevelSpan l) {
  auto has = [&](int dim) { return (types >> dim) & 1u; };
  const bool x1 = (has(0) && Inside(l, 0, 3)) || Inside(l, 3, 4);
  const bool x2 = ((has(2) || has(3)) && Inside(l, 0, 1)) ||
                  (has(2) && Inside(l, 1, 3));
  const bool x3 = (has(1) && Inside(l, 0, 1)) ||
                  ((has(1) || has(3)) && Inside(l, 1, 3));
  switch (region) {
    case Region::kX1: return x1;
    case Region::kX2: return x2;
    case Region::kX3: return x3;
    case Region::kH1: return x1 && x3;
    case Region::kH2: return x2 && x1;
    case Region::kH3: return x3 && x2;
    case Region::kSigma: return x1 && x2 && x3;
  }
  return false;
}

// Chains of faces of the standard d-simplex on vertices 0..d, as masks.
void ChainsOf(unsigned s, std::vector<unsigned>& chain,
              std::vector<std::vector<unsigned>>& out) {
  if (!chain.empty()) out.push_back(chain);
  for (unsigned f = 1; f <= s; ++f) {
    if ((f & s) != f) continue;
    if (!chain.empty() && ((chain.back() & f) != chain.back() || chain.back() == f)) {
      continue;
    }
    chain.push_back(f);
    ChainsOf(s, chain, out);
    chain.pop_back();
  }
}

std::int64_t Binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

std::array<std::int64_t, 5> RegionCoefficients(Region region) {
  std::array<std::int64_t, 5> out = {0, 0, 0, 0, 0};
  for (int d = 0; d < 4; ++d) {
    const unsigned s = (1u << (d + 1)) - 1;
    std::vector<std::vector<unsigned>> chains;
    std::vector<unsigned> chain;
    ChainsOf(s, chain, chains);
    std::int64_t at_boundary = 0, inside = 0;
    for (const auto& c : chains) {
      unsigned types = 0;
      for (unsigned f : c) types |= 1u << (__builtin_popcount(f) - 1);
      const int dim = d - static_cast<int>(c.size()) + 1;
      for (int li = 0; li < 6; ++li) {
        const LevelSpan l = kLevels[li];
        if (!InRegion(region, types, l)) continue;
        const int cell_dim = dim + (l.interval() ? 1 : 0);
        const std::int64_t sign = cell_dim % 2 == 0 ? 1 : -1;
        if (li == 0) {
          at_boundary += sign;
        } else {
          inside += sign;
        }
      }
    }
    // Level-0 cells are shared between pentachora and counted once per
    // d-simplex of K. Interior cells belong to one pentachoron, which has
    // C(5, d+1) faces of dimension d.
    out[d] += at_boundary;
    out[4] += Binomial(5, d + 1) * inside;
  }
  // The cone point of each pentachoron.
  if (InRegion(region, 0, LevelSpan{4, 4})) out[4] += 1;
  return out;
}

Perm RandomPerm(int n, std::mt19937& rng) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle

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

#include "etd/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "etd/error.hpp"

namespace etd {

FiniteGroup FiniteGroup::FromTable(std::vector<std::string> names,
                                   std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(names.size());
  if (n == 0 || static_cast<int>(table.size()) != n) {
    throw Error(ErrorCode::kParse, "group table has wrong shape");
  }
  std::set<std::string> distinct(names.begin(), names.end());
  if (static_cast<int>(distinct.size()) != n) {
    throw Error(ErrorCode::kParse, "group element names are not distinct");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n || !IsPermutation(row)) {
      throw Error(ErrorCode::kParse, "group table row is not a permutation");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      throw Error(ErrorCode::kParse, "element 0 is not the identity");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::kParse, "group table is not associative");
        }
      }
    }
  }
  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.table_[a][b] == 0) g.inverse_[a] = b;
    }
  }
  return g;
}

FiniteGroup FiniteGroup::FromPermutations(const std::vector<Perm>& generators,
                                          const std::vector<std::string>& names,
                                          int cap) {
  if (generators.empty()) return Trivial();
  const int degree = static_cast<int>(generators[0].size());
  std::vector<Perm> elements = {IdentityPerm(degree)};
  std::vector<std::string> words = {"e"};
  std::map<Perm, int> index = {{elements[0], 0}};
  for (size_t k = 0; k < elements.size(); ++k) {
    for (size_t i = 0; i < generators.size(); ++i) {
      Perm p = Compose(generators[i], elements[k]);
      if (index.count(p)) continue;
      if (static_cast<int>(elements.size()) >= cap) {
        throw Error(ErrorCode::kClosureCapExceeded,
                    "group exceeds " + std::to_string(cap) + " elements");
      }
      const std::string gname =
          i < names.size() ? names[i] : "g" + std::to_string(i);
      index[p] = static_cast<int>(elements.size());
      words.push_back(k == 0 ? gname : gname + "*" + words[k]);
      elements.push_back(std::move(p));
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = index.at(Compose(elements[a], elements[b]));
    }
  }
  return FromTable(std::move(words), std::move(table));
}

FiniteGroup FiniteGroup::Trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::Cyclic(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FromTable(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::Quaternion() {
  // Elements as (sign, unit) with unit in {1, i, j, k}.
  const std::vector<std::string> names = {"1", "i", "j", "k",
                                          "-1", "-i", "-j", "-k"};
  // Unit products: unit_mul[a][b] = (sign, unit).
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1},
                          {1, 1, -1, -1}};
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1},
                          {3, 2, 1, 0}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      int s = sign[ua][ub] * (a < 4 ? 1 : -1) * (b < 4 ? 1 : -1);
      table[a][b] = unit[ua][ub] + (s < 0 ? 4 : 0);
    }
  }
  return FromTable(names, std::move(table));
}

FiniteGroup FiniteGroup::Dihedral(int n) {
  // Index k < n is r^k, index n + k is s r^k, with s r = r^-1 s.
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : "r" + std::to_string(k));
  for (int k = 0; k < n; ++k) names.push_back("s" + std::to_string(k));
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      const int fa = a / n, ka = a % n, fb = b / n, kb = b % n;
      // (s^fa r^ka)(s^fb r^kb) = s^(fa+fb) r^(kb + (fb ? -ka : ka))
      const int k = ((fb ? kb - ka : kb + ka) % n + n) % n;
      table[a][b] = ((fa + fb) % 2) * n + k;
    }
  }
  return FromTable(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::Product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x) {
    names.push_back("(" + a.Name(x / nb) + "," + b.Name(x % nb) + ")");
    for (int y = 0; y < na * nb; ++y) {
      table[x][y] = a.Mul(x / nb, y / nb) * nb + b.Mul(x % nb, y % nb);
    }
  }
  return FromTable(std::move(names), std::move(table));
}

int FiniteGroup::ElementOrder(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = Mul(x, a)) ++k;
  return k;
}

std::optional<int> FiniteGroup::Find(const std::string& name) const {
  for (int a = 0; a < order(); ++a) {
    if (names_[a] == name) return a;
  }
  return std::nullopt;
}

std::vector<int> FiniteGroup::Generate(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::deque<int> queue = {0};
  in[0] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      const int y = Mul(g, x);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int a = 0; a < order(); ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

bool FiniteGroup::IsAbelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      if (Mul(a, b) != Mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::IsNormal(const std::vector<int>& subgroup) const {
  std::set<int> h(subgroup.begin(), subgroup.end());
  for (int g = 0; g < order(); ++g) {
    for (int x : subgroup) {
      if (!h.count(Mul(Mul(g, x), Inv(g)))) return false;
    }
  }
  return true;
}

GroupMap QuotientGroup(const FiniteGroup& g, const std::vector<int>& normal) {
  if (!g.IsNormal(normal)) throw Error(ErrorCode::kNotNormal, "subgroup");
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset[a] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int n : normal) coset[g.Mul(a, n)] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x) {
    names.push_back(g.Name(reps[x]) + "N");
    for (int y = 0; y < m; ++y) table[x][y] = coset[g.Mul(reps[x], reps[y])];
  }
  GroupMap out{FiniteGroup::FromTable(std::move(names), std::move(table)),
               coset};
  return out;
}

}  // namespace etd

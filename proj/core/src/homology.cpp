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

#include "etd/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

#include "etd/error.hpp"

namespace etd {

namespace {

std::int64_t Checked(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kInternal, "integer overflow in Smith normal form");
  }
  return static_cast<std::int64_t>(x);
}

// row[a] += f * row[b]
void AddRow(IntMatrix* m, int a, int b, std::int64_t f) {
  if (f == 0) return;
  auto& ra = (*m)[a];
  const auto& rb = (*m)[b];
  for (size_t c = 0; c < ra.size(); ++c) {
    if (rb[c] != 0) ra[c] = Checked(static_cast<__int128>(ra[c]) + static_cast<__int128>(f) * rb[c]);
  }
}

void AddCol(IntMatrix* m, int a, int b, std::int64_t f) {
  if (f == 0) return;
  for (auto& row : *m) {
    if (row[b] != 0) row[a] = Checked(static_cast<__int128>(row[a]) + static_cast<__int128>(f) * row[b]);
  }
}

void SwapCols(IntMatrix* m, int a, int b) {
  for (auto& row : *m) std::swap(row[a], row[b]);
}

void NegateRow(IntMatrix* m, int a) {
  for (auto& x : (*m)[a]) x = -x;
}

IntMatrix Identity(int n) {
  IntMatrix id(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Floor-free quotient so that remainders shrink in magnitude.
std::int64_t Quot(std::int64_t a, std::int64_t b) { return a / b; }

}  // namespace

SmithResult SmithNormalForm(const IntMatrix& input, int cols,
                            bool want_transforms) {
  const int rows = static_cast<int>(input.size());
  SmithResult res;
  res.d = input;
  for (auto& row : res.d) row.resize(cols, 0);
  // U is kept as row operations on an identity; V is kept as column
  // operations on an identity.
  IntMatrix u = want_transforms ? Identity(rows) : IntMatrix();
  IntMatrix v = want_transforms ? Identity(cols) : IntMatrix();
  IntMatrix& d = res.d;
  auto add_row = [&](int a, int b, std::int64_t f) {
    AddRow(&d, a, b, f);
    if (want_transforms) AddRow(&u, a, b, f);
  };
  auto add_col = [&](int a, int b, std::int64_t f) {
    AddCol(&d, a, b, f);
    if (want_transforms) AddCol(&v, a, b, f);
  };
  auto swap_rows = [&](int a, int b) {
    std::swap(d[a], d[b]);
    if (want_transforms) std::swap(u[a], u[b]);
  };
  auto swap_cols = [&](int a, int b) {
    SwapCols(&d, a, b);
    if (want_transforms) SwapCols(&v, a, b);
  };

  const int limit = std::min(rows, cols);
  for (int t = 0; t < limit; ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block.
      int pr = -1, pc = -1;
      std::int64_t best = 0;
      for (int r = t; r < rows; ++r) {
        for (int c = t; c < cols; ++c) {
          const std::int64_t x = std::llabs(d[r][c]);
          if (x != 0 && (pr < 0 || x < best)) {
            best = x;
            pr = r;
            pc = c;
          }
        }
      }
      if (pr < 0) {
        // Trailing block is zero.
        res.diagonal.clear();
        for (int i = 0; i < t; ++i) res.diagonal.push_back(d[i][i]);
        goto done;
      }
      if (pr != t) swap_rows(pr, t);
      if (pc != t) swap_cols(pc, t);
      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (d[r][t] != 0) {
          add_row(r, t, -Quot(d[r][t], d[t][t]));
          if (d[r][t] != 0) clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (d[t][c] != 0) {
          add_col(c, t, -Quot(d[t][c], d[t][t]));
          if (d[t][c] != 0) clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      int bad_row = -1;
      for (int r = t + 1; r < rows && bad_row < 0; ++r) {
        for (int c = t + 1; c < cols; ++c) {
          if (d[r][c] % d[t][t] != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row >= 0) {
        add_row(t, bad_row, 1);
        continue;
      }
      if (d[t][t] < 0) {
        NegateRow(&d, t);
        if (want_transforms) NegateRow(&u, t);
      }
      break;
    }
  }
  res.diagonal.clear();
  for (int i = 0; i < limit; ++i) {
    if (d[i][i] != 0) res.diagonal.push_back(d[i][i]);
  }
done:
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

IntMatrix Multiply(const IntMatrix& a, const IntMatrix& b, int inner,
                   int cols) {
  IntMatrix c(a.size(), std::vector<std::int64_t>(cols, 0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) {
        c[i][j] = Checked(static_cast<__int128>(c[i][j]) +
                          static_cast<__int128>(a[i][k]) * b[k][j]);
      }
    }
  }
  return c;
}

std::string AbelianGroup::ToString() const {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (rank == 1) append("Z");
  if (rank > 1) append("Z^" + std::to_string(rank));
  for (std::int64_t t : torsion) append("Z/" + std::to_string(t));
  return out.empty() ? "0" : out;
}

AbelianGroup Cokernel(const IntMatrix& rows, int cols) {
  AbelianGroup g;
  if (rows.empty()) {
    g.rank = cols;
    return g;
  }
  SmithResult s = SmithNormalForm(rows, cols, /*want_transforms=*/false);
  g.rank = cols - static_cast<int>(s.diagonal.size());
  for (std::int64_t x : s.diagonal) {
    if (x > 1) g.torsion.push_back(x);
  }
  return g;
}

std::vector<std::int64_t> ChainOfDarts(const CombMap& map,
                                       const std::vector<Dart>& darts) {
  std::vector<std::int64_t> chain(map.num_edges(), 0);
  for (Dart d : darts) {
    const int e = map.edge_index(d);
    chain[e] += (map.edge_orbits()[e][0] == d) ? 1 : -1;
  }
  return chain;
}

SurfaceHomology::SurfaceHomology(const CombMap& map) : map_(&map) {
  if (!map.is_closed()) throw Error(ErrorCode::kNotClosed, "homology");
  if (!map.is_connected()) throw Error(ErrorCode::kNotConnected, "homology");
  const int ne = map.num_edges();
  std::vector<char> in_tree(ne, 0), in_cotree(ne, 0);
  // Primal spanning tree.
  std::vector<char> seen_v(map.num_vertices(), 0);
  std::deque<int> queue = {0};
  seen_v[0] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (Dart d : map.vertex_orbits()[v]) {
      const int w = map.vertex_index(map.E(d));
      if (!seen_v[w]) {
        seen_v[w] = 1;
        in_tree[map.edge_index(d)] = 1;
        queue.push_back(w);
      }
    }
  }
  // Dual spanning tree avoiding primal tree edges.
  const int nf = map.num_face_orbits();
  std::vector<char> seen_f(nf, 0);
  parent_edge_.assign(nf, -1);
  parent_sign_.assign(nf, 0);
  face_order_.clear();
  queue = {0};
  seen_f[0] = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    face_order_.push_back(f);
    for (Dart d : map.face_orbits()[f]) {
      const int e = map.edge_index(d);
      if (in_tree[e]) continue;
      const Dart other = map.E(d);
      const int g = map.face_index(other);
      if (!seen_f[g]) {
        seen_f[g] = 1;
        in_cotree[e] = 1;
        parent_edge_[g] = e;
        parent_sign_[g] = (map.edge_orbits()[e][0] == other) ? 1 : -1;
        queue.push_back(g);
      }
    }
  }
  for (int e = 0; e < ne; ++e) {
    if (!in_tree[e] && !in_cotree[e]) generators_.push_back(e);
  }
}

std::vector<std::int64_t> SurfaceHomology::ClassOf(
    std::vector<std::int64_t> chain) const {
  const CombMap& map = *map_;
  // Root-to-leaf elimination: subtracting a face boundary only touches its
  // parent edge, the edges to its children, and non-cotree edges.
  for (int f : face_order_) {
    const int e = parent_edge_[f];
    if (e < 0 || chain[e] == 0) continue;
    const std::int64_t factor = chain[e] * parent_sign_[f];
    for (Dart d : map.face_orbits()[f]) {
      const int x = map.edge_index(d);
      const std::int64_t s = (map.edge_orbits()[x][0] == d) ? 1 : -1;
      chain[x] -= factor * s;
    }
  }
  std::vector<std::int64_t> coords;
  coords.reserve(generators_.size());
  for (int e : generators_) coords.push_back(chain[e]);
  return coords;
}

std::vector<std::int64_t> SurfaceHomology::ClassOfDarts(
    const std::vector<Dart>& darts) const {
  return ClassOf(ChainOfDarts(*map_, darts));
}

AbelianGroup HomologyOfMap(const CombMap& map) {
  const int nv = map.num_vertices();
  const int ne = map.num_edges();
  // Boundary of edges: rows are edges, columns vertices.
  IntMatrix d1(ne, std::vector<std::int64_t>(nv, 0));
  for (int e = 0; e < ne; ++e) {
    const Dart d = map.edge_orbits()[e][0];
    d1[e][map.vertex_index(map.E(d))] += 1;
    d1[e][map.vertex_index(d)] -= 1;
  }
  IntMatrix d2;
  for (int f = 0; f < map.num_face_orbits(); ++f) {
    if (map.is_hole_face(f)) continue;
    d2.push_back(ChainOfDarts(map, map.face_orbits()[f]));
  }
  const int rank1 = static_cast<int>(
      SmithNormalForm(d1, nv, /*want_transforms=*/false).diagonal.size());
  AbelianGroup g;
  std::vector<std::int64_t> diag;
  if (!d2.empty()) {
    diag = SmithNormalForm(d2, ne, /*want_transforms=*/false).diagonal;
  }
  g.rank = (ne - rank1) - static_cast<int>(diag.size());
  for (std::int64_t x : diag) {
    if (x > 1) g.torsion.push_back(x);
  }
  return g;
}

}  // namespace etd

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

#include "etd/cmap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "etd/error.hpp"

namespace etd {

std::string ToString(const CellId& cell) {
  static const char* kNames[] = {"vertex", "edge", "face"};
  return std::string(kNames[static_cast<int>(cell.kind)]) + "@" +
         std::to_string(cell.rep);
}

bool IsPermutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm Inverse(const Perm& p) {
  Perm q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
  return q;
}

Perm Compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (int i = 0; i < static_cast<int>(b.size()); ++i) c[i] = a[b[i]];
  return c;
}

Perm IdentityPerm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

namespace {

// Fills orbit tables of a permutation, orbits sorted by smallest element.
void OrbitTable(const Perm& p, std::vector<int>* index,
                std::vector<std::vector<int>>* orbits) {
  const int n = static_cast<int>(p.size());
  index->assign(n, -1);
  orbits->clear();
  for (int s = 0; s < n; ++s) {
    if ((*index)[s] >= 0) continue;
    std::vector<int> orbit;
    int x = s;
    do {
      (*index)[x] = static_cast<int>(orbits->size());
      orbit.push_back(x);
      x = p[x];
    } while (x != s);
    orbits->push_back(std::move(orbit));
  }
}

}  // namespace

CombMap CombMap::Build(Perm edge_pairing, Perm rotation) {
  if (edge_pairing.size() != rotation.size()) {
    throw Error(ErrorCode::kNotPermutation,
                "edge_pairing and rotation act on different dart sets");
  }
  if (!IsPermutation(edge_pairing) || !IsPermutation(rotation)) {
    throw Error(ErrorCode::kNotPermutation, "input is not a permutation");
  }
  for (int d = 0; d < static_cast<int>(edge_pairing.size()); ++d) {
    if (edge_pairing[edge_pairing[d]] != d) {
      throw Error(ErrorCode::kNotInvolution,
                  "edge_pairing is not an involution at dart " +
                      std::to_string(d));
    }
    if (edge_pairing[d] == d) {
      throw Error(ErrorCode::kDanglingDart,
                  "dart " + std::to_string(d) + " is fixed by edge_pairing");
    }
  }
  CombMap m;
  m.e_ = std::move(edge_pairing);
  m.r_ = std::move(rotation);
  m.rinv_ = Inverse(m.r_);
  m.ComputeTables();
  return m;
}

void CombMap::ComputeTables() {
  const int n = num_darts();
  OrbitTable(r_, &vertex_of_, &vertices_);
  OrbitTable(e_, &edge_of_, &edges_);
  Perm phi(n);
  for (int d = 0; d < n; ++d) phi[d] = rinv_[e_[d]];
  OrbitTable(phi, &face_of_, &faces_);
  hole_.assign(faces_.size(), 0);
  num_holes_ = 0;
  for (Dart d : hole_darts_) {
    if (!hole_[face_of_[d]]) {
      hole_[face_of_[d]] = 1;
      ++num_holes_;
    }
  }
  // Components through E and R.
  component_of_.assign(n, -1);
  num_components_ = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (component_of_[s] >= 0) continue;
    component_of_[s] = num_components_;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : {e_[x], r_[x]}) {
        if (component_of_[y] < 0) {
          component_of_[y] = num_components_;
          stack.push_back(y);
        }
      }
    }
    ++num_components_;
  }
}

CombMap CombMap::WithHoles(const std::vector<Dart>& hole_darts) const {
  CombMap m = *this;
  std::set<Dart> reps(hole_darts_.begin(), hole_darts_.end());
  for (Dart d : hole_darts) {
    if (d < 0 || d >= num_darts()) {
      throw Error(ErrorCode::kUnknownCell, "hole dart out of range");
    }
    reps.insert(faces_[face_of_[d]][0]);
  }
  m.hole_darts_.assign(reps.begin(), reps.end());
  m.ComputeTables();
  return m;
}

CellId CombMap::Cell(CellKind kind, Dart d) const {
  switch (kind) {
    case CellKind::kVertex: return {kind, vertices_[vertex_of_[d]][0]};
    case CellKind::kEdge: return {kind, edges_[edge_of_[d]][0]};
    case CellKind::kFace: return {kind, faces_[face_of_[d]][0]};
  }
  return {kind, d};
}

void CombMap::CheckCell(const CellId& cell) const {
  if (cell.rep < 0 || cell.rep >= num_darts() ||
      Cell(cell.kind, cell.rep) != cell) {
    throw Error(ErrorCode::kUnknownCell, ToString(cell));
  }
}

std::vector<Dart> CombMap::Orbit(const CellId& cell) const {
  CheckCell(cell);
  switch (cell.kind) {
    case CellKind::kVertex: return vertices_[vertex_of_[cell.rep]];
    case CellKind::kEdge: return edges_[edge_of_[cell.rep]];
    case CellKind::kFace: return faces_[face_of_[cell.rep]];
  }
  return {};
}

int CombMap::Genus() const {
  if (!is_closed()) throw Error(ErrorCode::kNotClosed, "map has boundary");
  if (!is_connected()) {
    throw Error(ErrorCode::kNotConnected,
                std::to_string(num_components_) + " components");
  }
  return (2 - EulerCharacteristic()) / 2;
}

std::vector<ComponentSummary> Components(const CombMap& map) {
  std::vector<ComponentSummary> out(map.num_components());
  std::vector<int> v(out.size()), e(out.size()), f(out.size()), h(out.size());
  for (const auto& orbit : map.vertex_orbits()) ++v[map.component_of(orbit[0])];
  for (const auto& orbit : map.edge_orbits()) ++e[map.component_of(orbit[0])];
  for (int i = 0; i < map.num_face_orbits(); ++i) {
    int c = map.component_of(map.face_orbits()[i][0]);
    if (map.is_hole_face(i)) {
      ++h[c];
    } else {
      ++f[c];
    }
  }
  for (int d = 0; d < map.num_darts(); ++d) {
    out[map.component_of(d)].darts.push_back(d);
  }
  for (size_t c = 0; c < out.size(); ++c) {
    out[c].euler = v[c] - e[c] + f[c];
    out[c].boundary_circles = h[c];
    out[c].genus = (2 - out[c].euler - h[c]) / 2;
  }
  return out;
}

CutResult CutAlong(const CombMap& map, const std::vector<CellId>& edges) {
  const int n = map.num_darts();
  std::vector<int> copy_index(n, -1);
  std::vector<Dart> cut_darts;
  for (const CellId& cell : edges) {
    if (cell.kind != CellKind::kEdge) {
      throw Error(ErrorCode::kUnknownCell, "not an edge: " + ToString(cell));
    }
    map.CheckCell(cell);
    for (Dart d : {cell.rep, map.E(cell.rep)}) {
      if (copy_index[d] < 0) {
        copy_index[d] = 0;
        cut_darts.push_back(d);
      }
    }
  }
  std::sort(cut_darts.begin(), cut_darts.end());
  for (size_t i = 0; i < cut_darts.size(); ++i) {
    copy_index[cut_darts[i]] = n + static_cast<int>(i);
  }
  const int total = n + static_cast<int>(cut_darts.size());
  Perm e(total), r(total);
  std::vector<Dart> origin(total);
  for (Dart d = 0; d < n; ++d) {
    origin[d] = d;
    const Dart mate = map.E(d);
    e[d] = copy_index[d] >= 0 ? copy_index[mate] : mate;
    const Dart next = map.R(d);
    r[d] = copy_index[next] >= 0 ? copy_index[next] : next;
  }
  std::vector<Dart> holes;
  for (Dart c : cut_darts) {
    const Dart copy = copy_index[c];
    origin[copy] = c;
    e[copy] = map.E(c);
    Dart z = c;
    do {
      z = map.Rinv(z);
    } while (copy_index[z] < 0);
    r[copy] = z;
    holes.push_back(copy);
  }
  for (Dart h : map.hole_reps()) holes.push_back(h);
  CutResult out;
  out.surface = CombMap::Build(std::move(e), std::move(r)).WithHoles(holes);
  out.num_original_darts = n;
  out.origin = std::move(origin);
  out.components = Components(out.surface);
  return out;
}

CombMap Reglue(const CutResult& cut) {
  const int n = cut.num_original_darts;
  Perm e(n), r(n);
  for (Dart d = 0; d < n; ++d) {
    e[d] = cut.origin[cut.surface.E(d)];
    r[d] = cut.origin[cut.surface.R(d)];
  }
  std::vector<Dart> holes;
  for (Dart h : cut.surface.hole_reps()) {
    if (h < n) holes.push_back(h);
  }
  return CombMap::Build(std::move(e), std::move(r)).WithHoles(holes);
}

Subdivision SubdivideEdges(const CombMap& map,
                           const std::vector<CellId>& edges) {
  const int n = map.num_darts();
  std::vector<Dart> mid(n, -1);
  std::vector<Dart> listed;
  for (const CellId& cell : edges) {
    if (cell.kind != CellKind::kEdge) {
      throw Error(ErrorCode::kUnknownCell, "not an edge: " + ToString(cell));
    }
    map.CheckCell(cell);
    if (mid[cell.rep] < 0) {
      mid[cell.rep] = 0;
      listed.push_back(cell.rep);
    }
  }
  std::sort(listed.begin(), listed.end());
  int next = n;
  for (Dart d : listed) {
    mid[d] = next++;
    mid[map.E(d)] = next++;
  }
  Perm e(next), r(next);
  std::vector<Dart> origin(next);
  for (Dart d = 0; d < n; ++d) {
    origin[d] = d;
    r[d] = map.R(d);
    e[d] = mid[d] >= 0 ? mid[d] : map.E(d);
  }
  for (Dart d = 0; d < n; ++d) {
    if (mid[d] < 0) continue;
    const Dart m = mid[d];
    origin[m] = d;
    e[m] = d;
    r[m] = mid[map.E(d)];
  }
  Subdivision out;
  out.map = CombMap::Build(std::move(e), std::move(r)).WithHoles(map.hole_reps());
  out.origin = std::move(origin);
  out.num_original_darts = n;
  out.midpoint_dart = std::move(mid);
  return out;
}

CombMap Relabel(const CombMap& map, const Perm& pi) {
  const int n = map.num_darts();
  Perm e(n), r(n);
  for (Dart d = 0; d < n; ++d) {
    e[pi[d]] = pi[map.E(d)];
    r[pi[d]] = pi[map.R(d)];
  }
  std::vector<Dart> holes;
  for (Dart h : map.hole_reps()) holes.push_back(pi[h]);
  return CombMap::Build(std::move(e), std::move(r)).WithHoles(holes);
}

namespace {

constexpr int kCodeWidth = 4;

// Breadth-first labeling of the component of `start`. Emits the code while
// labeling and abandons the run as soon as it exceeds `best`. Returns -1, 0
// or 1 comparing the produced code with best (an empty best compares as 1).
int RunBfs(const CombMap& map, const std::vector<std::int64_t>& labels,
           Dart start, const std::vector<std::int64_t>& best,
           std::vector<std::int64_t>* code, std::vector<Dart>* order,
           std::vector<int>* mark, int stamp, std::vector<int>* label_of) {
  code->clear();
  order->clear();
  order->push_back(start);
  (*mark)[start] = stamp;
  (*label_of)[start] = 0;
  int state = best.empty() ? -1 : 0;  // -1 smaller, 0 equal so far, 1 larger
  for (size_t head = 0; head < order->size(); ++head) {
    const Dart x = (*order)[head];
    std::int64_t entry[kCodeWidth];
    int k = 0;
    for (Dart y : {map.R(x), map.E(x)}) {
      if ((*mark)[y] != stamp) {
        (*mark)[y] = stamp;
        (*label_of)[y] = static_cast<int>(order->size());
        order->push_back(y);
      }
      entry[k++] = (*label_of)[y];
    }
    entry[k++] = labels.empty() ? 0 : labels[x];
    entry[k++] = map.is_hole_dart(x) ? 1 : 0;
    for (int i = 0; i < kCodeWidth; ++i) {
      if (state == 0) {
        const std::int64_t b = best[code->size()];
        if (entry[i] < b) {
          state = -1;
        } else if (entry[i] > b) {
          return 1;
        }
      }
      code->push_back(entry[i]);
    }
  }
  return state;
}

}  // namespace

CanonicalForm Canonicalize(const CombMap& map,
                           const std::vector<std::int64_t>& labels) {
  const int n = map.num_darts();
  std::vector<int> mark(n, -1), label_of(n, 0);
  int stamp = 0;
  // Restrict starts to darts minimizing an isomorphism-invariant key.
  auto key = [&](Dart d) {
    return std::make_tuple(labels.empty() ? 0 : labels[d],
                           map.is_hole_dart(d) ? 1 : 0,
                           map.vertex_orbits()[map.vertex_index(d)].size(),
                           map.face_orbits()[map.face_index(d)].size());
  };
  struct Part {
    std::vector<std::int64_t> code;
    std::vector<Dart> order;
  };
  std::vector<Part> parts;
  for (const ComponentSummary& comp : Components(map)) {
    auto best_key = key(comp.darts[0]);
    for (Dart d : comp.darts) best_key = std::min(best_key, key(d));
    Part best;
    std::vector<std::int64_t> code;
    std::vector<Dart> order;
    for (Dart d : comp.darts) {
      if (key(d) != best_key) continue;
      int cmp = RunBfs(map, labels, d, best.code, &code, &order, &mark,
                       stamp++, &label_of);
      if (cmp < 0) {
        best.code = code;
        best.order = order;
      }
    }
    parts.push_back(std::move(best));
  }
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.code < b.code; });
  CanonicalForm out;
  out.canonical_index.assign(n, -1);
  int offset = 0;
  for (const Part& part : parts) {
    out.code.push_back(-1);
    out.code.push_back(static_cast<std::int64_t>(part.order.size()));
    for (size_t i = 0; i < part.code.size(); ++i) {
      // Dart references are shifted by the component offset.
      const bool is_ref = (i % kCodeWidth) < 2;
      out.code.push_back(is_ref ? part.code[i] + offset : part.code[i]);
    }
    for (size_t i = 0; i < part.order.size(); ++i) {
      out.canonical_index[part.order[i]] = offset + static_cast<int>(i);
    }
    offset += static_cast<int>(part.order.size());
  }
  return out;
}

std::optional<Perm> FindIsomorphism(const CombMap& m1,
                                    const std::vector<std::int64_t>& labels1,
                                    const CombMap& m2,
                                    const std::vector<std::int64_t>& labels2) {
  if (m1.num_darts() != m2.num_darts()) return std::nullopt;
  CanonicalForm c1 = Canonicalize(m1, labels1);
  CanonicalForm c2 = Canonicalize(m2, labels2);
  if (c1.code != c2.code) return std::nullopt;
  Perm from_canonical2 = Inverse(c2.canonical_index);
  Perm pi(m1.num_darts());
  for (Dart d = 0; d < m1.num_darts(); ++d) {
    pi[d] = from_canonical2[c1.canonical_index[d]];
  }
  return pi;
}

bool IsIsomorphic(const CombMap& m1, const std::vector<std::int64_t>& labels1,
                  const CombMap& m2, const std::vector<std::int64_t>& labels2) {
  return FindIsomorphism(m1, labels1, m2, labels2).has_value();
}

std::optional<Perm> AutomorphismFrom(const CombMap& map, Dart from, Dart to) {
  const int n = map.num_darts();
  Perm f(n, -1);
  std::vector<char> used(n, 0);
  f[from] = to;
  used[to] = 1;
  std::vector<Dart> stack = {from};
  while (!stack.empty()) {
    const Dart x = stack.back();
    stack.pop_back();
    const std::pair<Dart, Dart> moves[2] = {{map.E(x), map.E(f[x])},
                                            {map.R(x), map.R(f[x])}};
    for (const auto& [y, image] : moves) {
      if (f[y] < 0) {
        if (used[image]) return std::nullopt;
        f[y] = image;
        used[image] = 1;
        stack.push_back(y);
      } else if (f[y] != image) {
        return std::nullopt;
      }
    }
  }
  if (std::find(f.begin(), f.end(), -1) != f.end()) return std::nullopt;
  return f;
}

}  // namespace etd

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

#include "etd/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace etd {

size_t PermHash::operator()(const Perm& p) const {
  size_t h = p.size();
  for (int x : p) h = h * 1000003u ^ static_cast<size_t>(x);
  return h;
}

GroupClosure::GroupClosure(const DiagramAction& action, int degree, int cap) {
  elements_.push_back(IdentityPerm(degree));
  words_.push_back("e");
  index_[elements_[0]] = 0;
  for (const Perm& g : action.generators) {
    if (static_cast<int>(g.size()) != degree || !IsPermutation(g)) {
      throw Error(ErrorCode::kNotAutomorphism,
                  "generator is not a permutation of the darts");
    }
  }
  for (size_t k = 0; k < elements_.size(); ++k) {
    for (size_t i = 0; i < action.generators.size(); ++i) {
      Perm p = Compose(action.generators[i], elements_[k]);
      if (index_.count(p)) continue;
      if (static_cast<int>(elements_.size()) >= cap) {
        throw Error(ErrorCode::kClosureCapExceeded,
                    "closure exceeds " + std::to_string(cap) + " elements");
      }
      index_[p] = static_cast<int>(elements_.size());
      words_.push_back(k == 0 ? action.NameOf(i)
                              : action.NameOf(i) + "*" + words_[k]);
      elements_.push_back(std::move(p));
    }
  }
}

int GroupClosure::IndexOf(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int GroupClosure::Mul(int a, int b) const {
  return IndexOf(Compose(elements_[a], elements_[b]));
}

int GroupClosure::Inv(int a) const { return IndexOf(Inverse(elements_[a])); }

int GroupClosure::ElementOrder(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = Mul(x, a)) ++k;
  return k;
}

std::vector<int> GroupClosure::Generate(const std::vector<int>& gens) const {
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

std::vector<std::vector<int>> GroupClosure::ConjugacyClasses() const {
  std::vector<int> cls(order(), -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < order(); ++x) {
    if (cls[x] >= 0) continue;
    std::set<int> members;
    for (int g = 0; g < order(); ++g) members.insert(Mul(Mul(g, x), Inv(g)));
    for (int y : members) cls[y] = static_cast<int>(out.size());
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

bool GroupClosure::IsNormal(const std::vector<int>& subgroup) const {
  std::set<int> h(subgroup.begin(), subgroup.end());
  for (int g = 0; g < order(); ++g) {
    const int gi = Inv(g);
    for (int x : subgroup) {
      if (!h.count(Mul(Mul(g, x), gi))) return false;
    }
  }
  return true;
}

std::string StructureHint(const GroupClosure& g) {
  const int n = g.order();
  if (n == 1) return "trivial";
  std::map<int, int> orders;
  for (int a = 0; a < n; ++a) ++orders[g.ElementOrder(a)];
  if (orders.count(n)) return "cyclic";
  bool abelian = true;
  for (int a = 0; a < n && abelian; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.Mul(a, b) != g.Mul(b, a)) {
        abelian = false;
        break;
      }
    }
  }
  if (abelian) return "abelian";
  if (n == 8 && orders[2] == 1) return "quaternion";
  // Dihedral of order 2m: a cyclic subgroup of index two and at least m
  // involutions outside it.
  if (n % 2 == 0 && orders.count(n / 2) && orders[2] >= n / 2) {
    return "dihedral";
  }
  return "other";
}

ActionCheck CheckAction(const ShadowDiagram& d, const DiagramAction& action,
                        int cap) {
  ActionCheck out;
  try {
    const GroupClosure g = RequireValidAction(d, action, cap);
    out.valid = true;
    out.order = g.order();
    out.structure = StructureHint(g);
    for (int a = 0; a < g.order(); ++a) ++out.element_orders[g.ElementOrder(a)];
  } catch (const Error& e) {
    out.code = e.code();
    out.violation = e.what();
  }
  return out;
}

GroupClosure RequireValidAction(const ShadowDiagram& d,
                                const DiagramAction& action, int cap) {
  const CombMap& m = d.surface();
  const int n = m.num_darts();
  for (size_t i = 0; i < action.generators.size(); ++i) {
    const Perm& g = action.generators[i];
    const std::string name = action.NameOf(i);
    if (static_cast<int>(g.size()) != n || !IsPermutation(g)) {
      throw Error(ErrorCode::kNotAutomorphism,
                  name + " is not a permutation of the darts");
    }
    for (Dart x = 0; x < n; ++x) {
      if (g[m.E(x)] != m.E(g[x]) || g[m.R(x)] != m.R(g[x])) {
        throw Error(ErrorCode::kNotAutomorphism,
                    name + " at dart " + std::to_string(x));
      }
      if (d.color(g[x]) != d.color(x)) {
        throw Error(ErrorCode::kColorBroken,
                    name + " moves family " + d.color(x).Tag() + " at dart " +
                        std::to_string(x));
      }
      if (d.is_marked_dart(g[x]) != d.is_marked_dart(x)) {
        throw Error(ErrorCode::kColorBroken,
                    name + " does not preserve the marked set");
      }
    }
  }
  GroupClosure g(action, n, cap);
  for (int a = 1; a < g.order(); ++a) {
    const Perm& p = g.element(a);
    for (Dart x = 0; x < n; ++x) {
      if (p[x] == x) {
        throw Error(ErrorCode::kNonFaithful,
                    "element " + g.word(a) + " fixes dart " +
                        std::to_string(x));
      }
    }
  }
  return g;
}

CellId ApplyToCell(const Perm& element, const CombMap& map, const CellId& c) {
  return map.Cell(c.kind, element[c.rep]);
}

std::vector<std::vector<CellId>> Orbits(const GroupClosure& g,
                                        const CombMap& map, CellKind kind) {
  const std::vector<std::vector<Dart>>* cells = nullptr;
  switch (kind) {
    case CellKind::kVertex: cells = &map.vertex_orbits(); break;
    case CellKind::kEdge: cells = &map.edge_orbits(); break;
    case CellKind::kFace: cells = &map.face_orbits(); break;
  }
  std::set<CellId> seen;
  std::vector<std::vector<CellId>> out;
  for (const auto& orbit : *cells) {
    const CellId c{kind, orbit[0]};
    if (seen.count(c)) continue;
    std::set<CellId> members;
    for (int a = 0; a < g.order(); ++a) {
      members.insert(ApplyToCell(g.element(a), map, c));
    }
    seen.insert(members.begin(), members.end());
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

std::vector<int> Stabilizer(const GroupClosure& g, const CombMap& map,
                            const CellId& cell) {
  map.CheckCell(cell);
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    if (ApplyToCell(g.element(a), map, cell) == cell) out.push_back(a);
  }
  return out;
}

SingularReport SingularLocus(const ShadowDiagram& d, const GroupClosure& g) {
  const CombMap& m = d.surface();
  SingularReport out;
  for (int a = 1; a < g.order(); ++a) {
    const Perm& p = g.element(a);
    ElementSingularity s;
    s.element = a;
    s.order = g.ElementOrder(a);
    for (const auto& orbit : m.vertex_orbits()) {
      if (m.vertex_index(p[orbit[0]]) == m.vertex_index(orbit[0])) {
        s.vertices.push_back({{CellKind::kVertex, orbit[0]}, s.order});
      }
    }
    for (const auto& orbit : m.edge_orbits()) {
      if (p[orbit[0]] == m.E(orbit[0])) {
        s.edge_midpoints.push_back({{CellKind::kEdge, orbit[0]}, 2});
      }
    }
    for (const auto& orbit : m.face_orbits()) {
      if (m.face_index(p[orbit[0]]) == m.face_index(orbit[0])) {
        s.faces.push_back({{CellKind::kFace, orbit[0]}, s.order});
      }
    }
    out.elements.push_back(std::move(s));
  }
  out.conjugacy_classes = g.ConjugacyClasses();
  for (const auto& cls : out.conjugacy_classes) {
    out.class_fixed_points.push_back(
        cls[0] == 0 ? 0 : out.elements[cls[0] - 1].fixed_points());
  }
  for (CellKind kind :
       {CellKind::kVertex, CellKind::kEdge, CellKind::kFace}) {
    const auto& cells = kind == CellKind::kVertex ? m.vertex_orbits()
                        : kind == CellKind::kEdge ? m.edge_orbits()
                                                  : m.face_orbits();
    for (const auto& orbit : cells) {
      const CellId c{kind, orbit[0]};
      const int order = static_cast<int>(Stabilizer(g, m, c).size());
      if (order > 1) out.singular_cells.push_back({c, order});
    }
  }
  if (m.is_connected()) {
    const int genus = m.Genus();
    for (const auto& s : out.elements) {
      if (s.order == 2 && s.fixed_points() == 2 * genus + 2) {
        out.hyperelliptic.push_back(s.element);
      }
    }
  }
  return out;
}

}  // namespace etd

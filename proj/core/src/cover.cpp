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

#include "etd/cover.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "etd/error.hpp"

namespace etd {

VoltageAssignment VoltageAssignment::FromEdges(const ShadowDiagram& d,
                                               FiniteGroup group,
                                               std::vector<int> edge,
                                               std::map<Dart, int> meridians) {
  VoltageAssignment v;
  v.group = std::move(group);
  v.edge = std::move(edge);
  v.corner.assign(d.surface().num_darts(), 0);
  for (const auto& [dart, element] : meridians) {
    if (dart < 0 || dart >= d.surface().num_darts()) {
      throw Error(ErrorCode::kVoltageIncompatible,
                  "meridian at unknown dart " + std::to_string(dart));
    }
    v.corner[dart] = element;
  }
  v.meridians = std::move(meridians);
  return v;
}

int VertexVoltage(const CombMap& m, const VoltageAssignment& v, Dart rep) {
  int prod = 0;
  Dart x = rep;
  do {
    prod = v.group.Mul(prod, v.CornerAt(x));
    x = m.R(x);
  } while (x != rep);
  return prod;
}

int FaceVoltage(const CombMap& m, const VoltageAssignment& v, Dart d) {
  const FiniteGroup& g = v.group;
  int prod = 0;
  Dart x = d;
  do {
    const Dart y = m.Phi(x);
    prod = g.Mul(g.Mul(prod, v.edge[x]), g.Inv(v.CornerAt(y)));
    x = y;
  } while (x != d);
  return prod;
}

void CheckVoltages(const ShadowDiagram& d, const VoltageAssignment& v) {
  const CombMap& m = d.surface();
  const FiniteGroup& g = v.group;
  const int n = m.num_darts();
  auto in_range = [&](int a) { return a >= 0 && a < g.order(); };
  if (static_cast<int>(v.edge.size()) != n ||
      (!v.corner.empty() && static_cast<int>(v.corner.size()) != n)) {
    throw Error(ErrorCode::kVoltageIncompatible,
                "voltage table does not cover every dart");
  }
  for (Dart x = 0; x < n; ++x) {
    if (!in_range(v.edge[x]) || !in_range(v.CornerAt(x))) {
      throw Error(ErrorCode::kVoltageIncompatible,
                  "unknown group element at dart " + std::to_string(x));
    }
    if (v.edge[m.E(x)] != g.Inv(v.edge[x])) {
      throw Error(ErrorCode::kVoltageIncompatible,
                  "edge voltage is not inverted across dart " +
                      std::to_string(x));
    }
  }
  const std::set<Dart> cones(v.cones.begin(), v.cones.end());
  std::set<int> declared_vertices;
  for (const auto& [dart, element] : v.meridians) {
    if (dart < 0 || dart >= n || !in_range(element)) {
      throw Error(ErrorCode::kMeridianMismatch,
                  "meridian entry out of range at dart " + std::to_string(dart));
    }
    const int vertex = m.vertex_index(dart);
    if (!declared_vertices.insert(vertex).second) {
      throw Error(ErrorCode::kMeridianMismatch,
                  "two meridians declared at the vertex of dart " +
                      std::to_string(dart));
    }
    if (VertexVoltage(m, v, dart) != element) {
      throw Error(ErrorCode::kMeridianMismatch,
                  "declared meridian " + g.Name(element) + " at dart " +
                      std::to_string(dart) + " differs from corner product " +
                      g.Name(VertexVoltage(m, v, dart)));
    }
  }
  for (int vertex = 0; vertex < m.num_vertices(); ++vertex) {
    const Dart rep = m.vertex_orbits()[vertex][0];
    if (d.is_marked_vertex(vertex) || cones.count(rep)) continue;
    if (VertexVoltage(m, v, rep) != 0) {
      throw Error(ErrorCode::kMeridianMismatch,
                  "unmarked vertex " + std::to_string(rep) +
                      " has nontrivial meridian " +
                      g.Name(VertexVoltage(m, v, rep)));
    }
  }
  for (const auto& face : m.face_orbits()) {
    const int net = FaceVoltage(m, v, face[0]);
    if (net != 0) {
      throw Error(ErrorCode::kVoltageIncompatible,
                  "face at dart " + std::to_string(face[0]) +
                      " has net voltage " + g.Name(net));
    }
  }
}

namespace {

// Mutable dart arrays used while thickening.
struct Work {
  Perm e, r;
  std::vector<Color> color;
  std::vector<int> psi, rho;  // empty when voltages are not tracked
  const FiniteGroup* group = nullptr;

  int size() const { return static_cast<int>(e.size()); }
  bool tracked() const { return group != nullptr; }

  Dart Add(Color c) {
    const Dart x = size();
    e.push_back(x);
    r.push_back(x);
    color.push_back(c);
    if (tracked()) {
      psi.push_back(0);
      rho.push_back(0);
    }
    return x;
  }
  CombMap Map() const { return CombMap::Build(e, r); }
};

void SubdivideInPlace(Work* w, const std::vector<Dart>& reps) {
  for (Dart d : reps) {
    const Dart f = w->e[d];
    const Color c = w->color[d];
    const Dart a = w->Add(c);
    const Dart b = w->Add(c);
    w->e[d] = a;
    w->e[a] = d;
    w->e[f] = b;
    w->e[b] = f;
    w->r[a] = b;
    w->r[b] = a;
    if (w->tracked()) {
      // The half at d carries the old voltage, the half at f carries none.
      w->psi[a] = w->group->Inv(w->psi[d]);
      w->psi[f] = 0;
      w->psi[b] = 0;
    }
  }
}

Dart RotationPredecessor(const Work& w, Dart x) {
  Dart y = x;
  while (w.r[y] != x) y = w.r[y];
  return y;
}

int FaceNet(const Work& w, const Perm& rinv, Dart start) {
  const FiniteGroup& g = *w.group;
  int prod = 0;
  Dart x = start;
  do {
    const Dart y = rinv[w.e[x]];
    prod = g.Mul(g.Mul(prod, w.psi[x]), g.Inv(w.rho[y]));
    x = y;
  } while (x != start);
  return prod;
}

void ThickenFamily(Work* w, int family) {
  const Color shadow = Color::Shadow(family);
  const Color curve = Color::Alpha(family);
  auto is_c = [&](Dart x) { return w->color[x] == shadow; };
  auto c_vertices = [&](const CombMap& m) {
    std::vector<char> cv(m.num_vertices(), 0);
    for (Dart x = 0; x < m.num_darts(); ++x) {
      if (is_c(x)) cv[m.vertex_index(x)] = 1;
    }
    return cv;
  };
  // Round one: non-shadow edges with both ends on the shadow graph.
  // Round two: non-shadow edges with at least one end on it. Afterwards
  // every such edge ends at a private valence-two vertex.
  for (int round = 0; round < 2; ++round) {
    const CombMap m = w->Map();
    const std::vector<char> cv = c_vertices(m);
    std::vector<Dart> reps;
    for (const auto& orbit : m.edge_orbits()) {
      const Dart d = orbit[0];
      if (is_c(d)) continue;
      const bool a = cv[m.vertex_index(d)] != 0;
      const bool b = cv[m.vertex_index(m.E(d))] != 0;
      if (round == 0 ? (a && b) : (a || b)) reps.push_back(d);
    }
    SubdivideInPlace(w, reps);
  }
  const CombMap m = w->Map();
  const std::vector<char> cv = c_vertices(m);
  if (std::none_of(cv.begin(), cv.end(), [](char c) { return c != 0; })) {
    return;
  }
  struct Run {
    Dart start, end;
  };
  std::vector<Run> runs;
  std::vector<std::vector<Dart>> closed_faces;
  for (const auto& face : m.face_orbits()) {
    if (std::all_of(face.begin(), face.end(), is_c)) {
      closed_faces.push_back(face);
      continue;
    }
    for (Dart s : face) {
      if (is_c(s) || cv[m.vertex_index(s)] || !cv[m.vertex_index(m.E(s))]) {
        continue;
      }
      Dart x = m.Phi(s);
      while (is_c(x)) x = m.Phi(x);
      runs.push_back({s, x});
    }
  }
  std::vector<Dart> unknown;
  for (const Run& run : runs) {
    const Dart cs = w->Add(curve);
    const Dart ce = w->Add(curve);
    w->e[cs] = ce;
    w->e[ce] = cs;
    // Chord start in the corner after run.start at its origin.
    w->r[cs] = w->r[run.start];
    w->r[run.start] = cs;
    // Chord end in the corner before the dart entering the last vertex.
    const Dart t = w->e[run.end];
    const Dart a = RotationPredecessor(*w, t);
    w->r[a] = ce;
    w->r[ce] = t;
    unknown.push_back(ce);
  }
  for (const auto& face : closed_faces) {
    const int len = static_cast<int>(face.size());
    std::vector<Dart> rung(len), inner(len), out(len), in(len);
    for (int k = 0; k < len; ++k) {
      rung[k] = w->Add(Color::Scaffold());
      inner[k] = w->Add(Color::Scaffold());
      out[k] = w->Add(curve);
      in[k] = w->Add(curve);
      w->e[rung[k]] = inner[k];
      w->e[inner[k]] = rung[k];
    }
    for (int k = 0; k < len; ++k) {
      const int next = (k + 1) % len;
      w->e[out[k]] = in[next];
      w->e[in[next]] = out[k];
      w->r[rung[k]] = w->r[face[k]];
      w->r[face[k]] = rung[k];
      w->r[inner[k]] = out[k];
      w->r[out[k]] = in[k];
      w->r[in[k]] = inner[k];
      unknown.push_back(in[next]);
    }
  }
  if (!w->tracked()) return;
  const Perm rinv = Inverse(w->r);
  for (Dart u : unknown) {
    w->psi[u] = 0;
    w->psi[w->e[u]] = 0;
    const int net = FaceNet(*w, rinv, u);
    w->psi[u] = w->group->Inv(net);
    w->psi[w->e[u]] = net;
  }
}

}  // namespace

Thickening ThickenShadows(const ShadowDiagram& d, VoltageAssignment* v) {
  Thickening out;
  out.num_original_darts = d.surface().num_darts();
  if (!d.HasShadows()) {
    out.diagram = d;
    return out;
  }
  Work w;
  w.e = d.surface().edge_pairing();
  w.r = d.surface().rotation();
  w.color = d.colors();
  if (v != nullptr) {
    w.group = &v->group;
    w.psi = v->edge;
    w.rho = v->corner.empty() ? std::vector<int>(w.size(), 0) : v->corner;
  }
  for (int i = 1; i <= 3; ++i) ThickenFamily(&w, i);
  out.diagram = ShadowDiagram(w.Map(), w.color, d.marked());
  if (v != nullptr) {
    v->edge = std::move(w.psi);
    v->corner = std::move(w.rho);
  }
  return out;
}

namespace {

// Elements of the subgroup generated by closed-walk voltages at dart 0.
std::vector<int> ClosedWalkSubgroup(const CombMap& m,
                                    const VoltageAssignment& v) {
  const FiniteGroup& g = v.group;
  const int n = m.num_darts();
  std::vector<int> p(n, -1);
  std::set<int> gens;
  p[0] = 0;
  std::deque<Dart> queue = {0};
  while (!queue.empty()) {
    const Dart d = queue.front();
    queue.pop_front();
    const std::pair<Dart, int> moves[2] = {{m.E(d), v.edge[d]},
                                           {m.R(d), v.CornerAt(d)}};
    for (const auto& [y, label] : moves) {
      const int reached = g.Mul(p[d], label);
      if (p[y] < 0) {
        p[y] = reached;
        queue.push_back(y);
      } else {
        gens.insert(g.Mul(reached, g.Inv(p[y])));
      }
    }
  }
  return g.Generate(std::vector<int>(gens.begin(), gens.end()));
}

}  // namespace

ExpectedLift ExpectedLiftParameters(const ShadowDiagram& d,
                                    const VoltageAssignment& v) {
  CheckVoltages(d, v);
  const CombMap& m = d.surface();
  const int order = v.group.order();
  ExpectedLift out;
  int correction = 0;
  for (int vertex = 0; vertex < m.num_vertices(); ++vertex) {
    const Dart rep = m.vertex_orbits()[vertex][0];
    const int mu = VertexVoltage(m, v, rep);
    if (mu == 0) continue;
    BranchLift b;
    b.base_vertex = rep;
    b.marked = d.is_marked_vertex(vertex);
    b.order = v.group.ElementOrder(mu);
    b.lifted_count = order / b.order;
    correction += order - b.lifted_count;
    out.branches.push_back(b);
  }
  out.euler = order * m.EulerCharacteristic() - correction;
  if (!m.is_connected()) {
    throw Error(ErrorCode::kNotConnected, "base surface is disconnected");
  }
  out.components = order / static_cast<int>(ClosedWalkSubgroup(m, v).size());
  out.genus = (2 - out.euler / out.components) / 2;
  return out;
}

std::vector<int> GreedyGenerators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span = g.Generate(gens);
  for (int a = 1; a < g.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = g.Generate(gens);
  }
  return gens;
}

CoverResult DerivedCover(const ShadowDiagram& d, const VoltageAssignment& v) {
  if (!d.surface().is_connected()) {
    throw Error(ErrorCode::kNotConnected, "base surface is disconnected");
  }
  CheckVoltages(d, v);
  CoverResult out;
  out.base_voltages = v;
  out.base = ThickenShadows(d, &out.base_voltages).diagram;
  CheckVoltages(out.base, out.base_voltages);
  const VoltageAssignment& bv = out.base_voltages;
  const FiniteGroup& g = bv.group;
  const CombMap& m = out.base.surface();
  const int order = g.order();
  const int n = m.num_darts();
  Perm e(n * order), r(n * order);
  std::vector<Color> colors(n * order);
  out.projection.resize(n * order);
  for (Dart x = 0; x < n; ++x) {
    for (int a = 0; a < order; ++a) {
      const int idx = x * order + a;
      e[idx] = m.E(x) * order + g.Mul(a, bv.edge[x]);
      r[idx] = m.R(x) * order + g.Mul(a, bv.CornerAt(x));
      colors[idx] = out.base.color(x);
      out.projection[idx] = {x, a};
    }
  }
  std::vector<Dart> marked;
  for (Dart rep : out.base.marked()) {
    for (int a = 0; a < order; ++a) marked.push_back(rep * order + a);
  }
  CombMap lifted_map = CombMap::Build(std::move(e), std::move(r));
  out.expected = ExpectedLiftParameters(out.base, bv);
  if (lifted_map.EulerCharacteristic() != out.expected.euler ||
      lifted_map.num_components() != out.expected.components) {
    throw Error(ErrorCode::kInternal,
                "derived cover disagrees with the Riemann-Hurwitz count");
  }
  out.branches = out.expected.branches;
  out.lifted = ShadowDiagram(lifted_map, colors, marked);
  for (int k : GreedyGenerators(g)) {
    Perm p(n * order);
    for (Dart x = 0; x < n; ++x) {
      for (int a = 0; a < order; ++a) {
        p[x * order + a] = x * order + g.Mul(k, a);
      }
    }
    out.deck.generators.push_back(std::move(p));
    out.deck.names.push_back(g.Name(k));
  }
  out.deck_check = CheckAction(out.lifted, out.deck);
  if (!out.deck_check.valid) {
    throw Error(ErrorCode::kInternal,
                "deck action is invalid: " + out.deck_check.violation);
  }
  if (lifted_map.num_components() > 1) {
    out.disconnected = true;
    const CombMap& lm = out.lifted.surface();
    for (int c = 0; c < lm.num_components(); ++c) {
      std::vector<Dart> darts;
      std::vector<Dart> index(lm.num_darts(), -1);
      for (Dart x = 0; x < lm.num_darts(); ++x) {
        if (lm.component_of(x) == c) {
          index[x] = static_cast<int>(darts.size());
          darts.push_back(x);
        }
      }
      const int k = static_cast<int>(darts.size());
      Perm ce(k), cr(k);
      std::vector<Color> cc(k);
      std::vector<Dart> cm;
      for (int i = 0; i < k; ++i) {
        ce[i] = index[lm.E(darts[i])];
        cr[i] = index[lm.R(darts[i])];
        cc[i] = out.lifted.color(darts[i]);
        if (out.lifted.is_marked_dart(darts[i])) cm.push_back(i);
      }
      out.components.emplace_back(CombMap::Build(std::move(ce), std::move(cr)),
                                  std::move(cc), cm);
    }
  }
  return out;
}

VoltageAssignment GaugeFix(const ShadowDiagram& d, const VoltageAssignment& v) {
  const CombMap& m = d.surface();
  const FiniteGroup& g = v.group;
  const int n = m.num_darts();
  std::vector<int> gamma(n, -1);
  for (Dart s = 0; s < n; ++s) {
    if (gamma[s] >= 0) continue;
    gamma[s] = 0;
    std::deque<Dart> queue = {s};
    while (!queue.empty()) {
      const Dart x = queue.front();
      queue.pop_front();
      if (gamma[m.E(x)] < 0) {
        gamma[m.E(x)] = g.Mul(g.Inv(v.edge[x]), gamma[x]);
        queue.push_back(m.E(x));
      }
      if (gamma[m.R(x)] < 0) {
        gamma[m.R(x)] = g.Mul(g.Inv(v.CornerAt(x)), gamma[x]);
        queue.push_back(m.R(x));
      }
    }
  }
  VoltageAssignment out = v;
  out.corner.assign(n, 0);
  for (Dart x = 0; x < n; ++x) {
    out.edge[x] = g.Mul(g.Mul(g.Inv(gamma[x]), v.edge[x]), gamma[m.E(x)]);
    out.corner[x] =
        g.Mul(g.Mul(g.Inv(gamma[x]), v.CornerAt(x)), gamma[m.R(x)]);
  }
  for (auto& [dart, element] : out.meridians) {
    element = g.Mul(g.Mul(g.Inv(gamma[dart]), element), gamma[dart]);
  }
  return out;
}

VoltageAssignment PushForward(const VoltageAssignment& v,
                              const FiniteGroup& target,
                              const std::vector<int>& image) {
  VoltageAssignment out;
  out.group = target;
  out.cones = v.cones;
  out.edge.reserve(v.edge.size());
  for (int a : v.edge) out.edge.push_back(image[a]);
  for (int a : v.corner) out.corner.push_back(image[a]);
  for (const auto& [dart, element] : v.meridians) {
    out.meridians[dart] = image[element];
  }
  return out;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

VoltageAssignment SolveEdgeVoltages(const ShadowDiagram& d,
                                    const FiniteGroup& group,
                                    const std::map<Dart, int>& meridians,
                                    const std::map<Dart, int>& fixed,
                                    const std::vector<Dart>& cones) {
  const CombMap& m = d.surface();
  const int n = m.num_darts();
  VoltageAssignment v = VoltageAssignment::FromEdges(
      d, group, std::vector<int>(n, 0), meridians);
  v.cones = cones;
  std::vector<char> known(m.num_edges(), 0);
  for (const auto& [dart, element] : fixed) {
    if (dart < 0 || dart >= n || element < 0 || element >= group.order()) {
      throw Error(ErrorCode::kVoltageIncompatible,
                  "fixed voltage out of range at dart " + std::to_string(dart));
    }
    v.edge[dart] = element;
    v.edge[m.E(dart)] = group.Inv(element);
    known[m.edge_index(dart)] = 1;
  }
  DisjointSets vertices(m.num_vertices());
  for (int e = 0; e < m.num_edges(); ++e) {
    const Dart x = m.edge_orbits()[e][0];
    if (known[e]) vertices.Union(m.vertex_index(x), m.vertex_index(m.E(x)));
  }
  for (int e = 0; e < m.num_edges(); ++e) {
    const Dart x = m.edge_orbits()[e][0];
    if (!known[e] &&
        vertices.Union(m.vertex_index(x), m.vertex_index(m.E(x)))) {
      known[e] = 1;  // tree edge, identity
    }
  }
  DisjointSets faces(m.num_face_orbits());
  for (int e = 0; e < m.num_edges(); ++e) {
    const Dart x = m.edge_orbits()[e][0];
    if (!known[e] && !faces.Union(m.face_index(x), m.face_index(m.E(x)))) {
      known[e] = 1;  // outside the dual tree, identity
    }
  }
  // Peel the dual forest: a face with one unknown edge determines it.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& face : m.face_orbits()) {
      Dart u = -1;
      int unknown = 0;
      for (Dart x : face) {
        if (!known[m.edge_index(x)]) {
          ++unknown;
          u = x;
        }
      }
      if (unknown != 1) continue;
      v.edge[u] = 0;
      v.edge[m.E(u)] = 0;
      const int net = FaceVoltage(m, v, u);
      v.edge[u] = group.Inv(net);
      v.edge[m.E(u)] = net;
      known[m.edge_index(u)] = 1;
      progress = true;
    }
  }
  CheckVoltages(d, v);
  return v;
}

int CurveHolonomy(const CombMap& m, const VoltageAssignment& v,
                  const std::vector<Dart>& darts) {
  const FiniteGroup& g = v.group;
  int prod = 0;
  const int len = static_cast<int>(darts.size());
  for (int k = 0; k < len; ++k) {
    prod = g.Mul(prod, v.edge[darts[k]]);
    const Dart target = darts[(k + 1) % len];
    Dart y = m.E(darts[k]);
    int guard = 0;
    while (y != target) {
      prod = g.Mul(prod, v.CornerAt(y));
      y = m.R(y);
      if (++guard > m.num_darts()) {
        throw Error(ErrorCode::kMalformedColoring,
                    "walk is not closed at dart " + std::to_string(target));
      }
    }
  }
  return prod;
}

std::optional<Perm> LiftAutomorphism(const CombMap& base,
                                     const VoltageAssignment& v,
                                     const Perm& f) {
  const FiniteGroup& g = v.group;
  const int order = g.order();
  const int n = base.num_darts();
  for (int h0 = 0; h0 < order; ++h0) {
    std::vector<int> h(n, -1);
    h[0] = h0;
    std::vector<Dart> stack = {0};
    bool ok = true;
    while (ok && !stack.empty()) {
      const Dart x = stack.back();
      stack.pop_back();
      // h(E x) = psi(x)^-1 h(x) psi(f x) and h(R x) likewise with rho.
      const std::pair<Dart, int> moves[2] = {
          {base.E(x),
           g.Mul(g.Mul(g.Inv(v.edge[x]), h[x]), v.edge[f[x]])},
          {base.R(x),
           g.Mul(g.Mul(g.Inv(v.CornerAt(x)), h[x]), v.CornerAt(f[x]))}};
      for (const auto& [y, value] : moves) {
        if (h[y] < 0) {
          h[y] = value;
          stack.push_back(y);
        } else if (h[y] != value) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || std::find(h.begin(), h.end(), -1) != h.end()) continue;
    Perm lifted(n * order);
    for (Dart x = 0; x < n; ++x) {
      for (int a = 0; a < order; ++a) {
        lifted[x * order + a] = f[x] * order + g.Mul(a, h[x]);
      }
    }
    return lifted;
  }
  return std::nullopt;
}

}  // namespace etd

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

#include "etd/quotient.hpp"

#include <algorithm>
#include <set>

#include "etd/error.hpp"

namespace etd {

namespace {

// Extends a map automorphism to the subdivided map: the midpoint dart paired
// with x goes to the midpoint dart paired with g(x).
Perm ExtendToSubdivision(const Perm& g, const Subdivision& s) {
  const int total = s.map.num_darts();
  Perm out(total);
  for (Dart x = 0; x < total; ++x) {
    if (x < s.num_original_darts) {
      out[x] = g[x];
    } else {
      out[x] = s.midpoint_dart[g[s.origin[x]]];
    }
  }
  return out;
}

}  // namespace

QuotientResult Quotient(const ShadowDiagram& d, const DiagramAction& action,
                        const std::vector<Perm>& subgroup_generators) {
  GroupClosure g = [&] {
    try {
      return RequireValidAction(d, action);
    } catch (const Error& e) {
      throw Error(ErrorCode::kNotValidAction, e.what());
    }
  }();
  std::vector<int> gens;
  for (const Perm& p : subgroup_generators) {
    const int idx = g.IndexOf(p);
    if (idx < 0) {
      throw Error(ErrorCode::kNotValidAction,
                  "subgroup generator is not an element of the action");
    }
    gens.push_back(idx);
  }
  const std::vector<int> normal = g.Generate(gens);
  if (!g.IsNormal(normal)) {
    throw Error(ErrorCode::kNotNormal, "subgroup is not normal");
  }
  const CombMap& m = d.surface();

  // Equivariant subdivision of inverted edges.
  QuotientResult out;
  std::set<CellId> inverted;
  for (int a : normal) {
    const Perm& p = g.element(a);
    for (const auto& orbit : m.edge_orbits()) {
      if (p[orbit[0]] == m.E(orbit[0])) {
        inverted.insert({CellKind::kEdge, orbit[0]});
      }
    }
  }
  out.subdivided_edges.assign(inverted.begin(), inverted.end());
  const Subdivision sub = SubdivideEdges(m, out.subdivided_edges);
  const int n = sub.map.num_darts();
  std::vector<Color> colors(n);
  for (Dart x = 0; x < n; ++x) colors[x] = d.color(sub.origin[x]);
  out.subdivided = ShadowDiagram(sub.map, colors, d.marked());
  out.subdivided_action.names = action.names;
  for (const Perm& p : action.generators) {
    out.subdivided_action.generators.push_back(ExtendToSubdivision(p, sub));
  }
  std::vector<Perm> n_elements;
  for (int a : normal) n_elements.push_back(ExtendToSubdivision(g.element(a), sub));
  out.subgroup_order = static_cast<int>(n_elements.size());

  // Quotient darts are N-orbits, numbered by smallest member.
  std::vector<Dart> proj(n, -1);
  int count = 0;
  for (Dart x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    std::set<Dart> orbit;
    for (const Perm& p : n_elements) orbit.insert(p[x]);
    if (static_cast<int>(orbit.size()) != out.subgroup_order) {
      throw Error(ErrorCode::kNotValidAction,
                  "subgroup does not act freely on darts");
    }
    for (Dart y : orbit) proj[y] = count;
    ++count;
  }
  std::vector<Dart> rep(count);
  for (Dart x = n - 1; x >= 0; --x) rep[proj[x]] = x;
  Perm e(count), r(count);
  std::vector<Color> qcolors(count);
  for (int q = 0; q < count; ++q) {
    e[q] = proj[sub.map.E(rep[q])];
    r[q] = proj[sub.map.R(rep[q])];
    qcolors[q] = colors[rep[q]];
  }
  std::vector<Dart> qmarked;
  for (Dart x : d.marked()) qmarked.push_back(proj[x]);
  CombMap qmap = CombMap::Build(std::move(e), std::move(r));
  out.diagram = ShadowDiagram(qmap, std::move(qcolors), qmarked);
  out.projection = proj;

  // Cone points: ratio of upstairs to downstairs cell size.
  int correction = 0;
  for (const auto& orbit : qmap.vertex_orbits()) {
    const int up = static_cast<int>(
        sub.map.vertex_orbits()[sub.map.vertex_index(rep[orbit[0]])].size());
    const int ratio = up / static_cast<int>(orbit.size());
    if (ratio > 1) {
      out.cones.push_back({{CellKind::kVertex, orbit[0]}, ratio});
      correction += (out.subgroup_order / ratio) * (ratio - 1);
    }
  }
  for (const auto& orbit : qmap.face_orbits()) {
    const int up = static_cast<int>(
        sub.map.face_orbits()[sub.map.face_index(rep[orbit[0]])].size());
    const int ratio = up / static_cast<int>(orbit.size());
    if (ratio > 1) {
      out.cones.push_back({{CellKind::kFace, orbit[0]}, ratio});
      correction += (out.subgroup_order / ratio) * (ratio - 1);
    }
  }
  out.euler_upstairs = sub.map.EulerCharacteristic();
  out.euler_predicted =
      out.subgroup_order * qmap.EulerCharacteristic() - correction;
  if (!out.riemann_hurwitz_ok()) {
    throw Error(ErrorCode::kInternal, "Riemann-Hurwitz check failed");
  }

  out.induced.names = action.names;
  for (const Perm& p : out.subdivided_action.generators) {
    Perm q(count);
    for (int x = 0; x < count; ++x) q[x] = proj[p[rep[x]]];
    out.induced.generators.push_back(std::move(q));
  }
  out.induced_check = CheckAction(out.diagram, out.induced);
  return out;
}

std::string ToString(ManifoldVerdict v) {
  switch (v) {
    case ManifoldVerdict::kYes: return "Yes";
    case ManifoldVerdict::kCertified: return "Certified";
    case ManifoldVerdict::kNo: return "No";
  }
  return "No";
}

QuotientVerdict QuotientIsTrisection(const QuotientResult& q,
                                     const ValidationOptions& options) {
  QuotientVerdict out;
  out.report = ValidateTrisection(q.diagram, options);
  if (!out.report.valid()) {
    out.verdict = ManifoldVerdict::kNo;
  } else if (out.report.weakest() == HeegaardVerdict::kVerified) {
    out.verdict = ManifoldVerdict::kYes;
  } else {
    out.verdict = ManifoldVerdict::kCertified;
  }
  return out;
}

}  // namespace etd

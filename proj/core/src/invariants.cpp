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

#include "etd/invariants.hpp"

#include <set>

#include "etd/error.hpp"

namespace etd {

AbelianGroup H1ModCurves(const ShadowDiagram& d,
                         const std::vector<int>& families) {
  for (int i : families) {
    const CutSystemVerdict v = ValidateCutSystem(d, i);
    if (!v.valid) {
      throw Error(ErrorCode::kMalformedColoring,
                  "family " + std::to_string(i) + ": " + v.reason);
    }
  }
  if (d.genus() == 0) return AbelianGroup{};
  const SurfaceHomology homology(d.surface());
  IntMatrix rows;
  for (int i : families) {
    for (const CurvePath& c : CurvesOf(d, i)) {
      rows.push_back(homology.ClassOfDarts(c.darts));
    }
  }
  return Cokernel(rows, homology.rank());
}

Pu3Parameters PU3Parameters(const PolyhedralGraphData& p) {
  const CombMap& m = p.graph;
  if (!m.is_closed() || !m.is_connected() || m.Genus() != 0) {
    throw Error(ErrorCode::kNotSphere, "graph is not embedded in the sphere");
  }
  const ShadowDiagram plain(m, std::vector<Color>(m.num_darts()), {});
  const GroupClosure g = RequireValidAction(plain, p.action);
  std::set<int> inverted_edges;
  for (int a = 1; a < g.order(); ++a) {
    for (const auto& orbit : m.edge_orbits()) {
      if (g.element(a)[orbit[0]] == m.E(orbit[0])) {
        inverted_edges.insert(m.edge_index(orbit[0]));
      }
    }
  }
  if (!inverted_edges.empty() && !p.bigons_for_inversions) {
    throw Error(ErrorCode::kEdgeInversionUnresolved,
                std::to_string(inverted_edges.size()) + " edges are inverted");
  }
  Pu3Parameters out;
  out.group_order = g.order();
  out.extension_order = g.order() * p.center_order;
  out.vertices = m.num_vertices();
  out.edge_orbits = static_cast<int>(Orbits(g, m, CellKind::kEdge).size());
  out.genus = out.extension_order * out.edge_orbits + 1;
  out.k = {0, out.vertices - 1, out.genus - out.vertices};
  if (out.euler() != 3) {
    throw Error(ErrorCode::kInternal, "Euler characteristic is not 3");
  }
  return out;
}

GenusBound FreeActionGenusBound(int group_order, int genus) {
  GenusBound out;
  if (group_order <= 0) return out;
  const int shifted = genus - 1;
  if (shifted % group_order != 0) return out;
  const int mu = shifted / group_order + 1;
  if (mu < 0) return out;
  out.holds = true;
  out.quotient_genus = mu;
  return out;
}

}  // namespace etd

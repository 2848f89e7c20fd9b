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

// Closed 4-dimensional triangulations with a simplicial group action, and the
// parameters of the trisection and bridge trisections they induce.
//
// Simplices are identified by their vertex sets, so every face of K is named
// by the sorted list of its vertices. Two pentachora may share a vertex set
// (the double of a 4-simplex is allowed), but facet gluings must identify
// facets with equal vertex labels.

#ifndef ETD_TRIANG_HPP_
#define ETD_TRIANG_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etd/cmap.hpp"
#include "etd/error.hpp"

namespace etd {

using Triangle = std::array<int, 3>;

struct TriSurface {
  std::string name;
  std::vector<Triangle> triangles;
};

struct GTriangulation {
  int num_vertices = 0;
  std::vector<std::array<int, 5>> pentachora;
  // Facet f of a pentachoron omits its f-th vertex. When empty, gluings are
  // derived from the vertex labels.
  struct Gluing {
    int p = 0, f = 0, q = 0, g = 0;
  };
  std::vector<Gluing> gluings;
  std::vector<Perm> generators;  // permutations of the vertices
  std::vector<std::string> generator_names;
  std::vector<TriSurface> surfaces;
  std::string name;
};

// Numbers of distinct vertices, edges, triangles and tetrahedra, and the
// number of pentachora.
struct SimplexCounts {
  std::int64_t v = 0, e = 0, f = 0, t = 0, p = 0;
  std::int64_t euler() const { return v - e + f - t + p; }
};

SimplexCounts CountSimplices(const GTriangulation& k);

struct TriangulationCheck {
  bool valid = false;
  ErrorCode code = ErrorCode::kInternal;
  std::string violation;
  int group_order = 1;
  std::vector<int> fixed_vertices;  // fixed by some nonidentity element
  std::vector<std::string> notes;
};

// Checks the closed pseudo-manifold condition, connectedness, the simplicial
// action and every surface. Vertex links are not checked. Never throws.
TriangulationCheck CheckTriangulation(const GTriangulation& k);

// As CheckTriangulation but throws the first violation: Error(kOpenFacet),
// Error(kNotConnected), Error(kNonSimplicialAction),
// Error(kNotClosedSurface), Error(kSurfaceNotInvariant) or Error(kParse).
TriangulationCheck ValidateTriangulation(const GTriangulation& k);

struct SurfaceBridge {
  std::string name;
  int b = 0;
  std::array<int, 3> p = {0, 0, 0};
  int euler = 0;  // V - E + F of the surface
  int euler_loops() const { return p[0] + p[1] + p[2] - b; }
};

// b = 2|E|, p = (|V|, |F|, |E|) for a closed triangulated surface. Throws
// Error(kNotClosedSurface).
SurfaceBridge BridgeParameters(const std::vector<Triangle>& triangles,
                               const std::string& name = "");
// The surface must be one of k.surfaces; k is validated first.
SurfaceBridge BridgeParameters(const GTriangulation& k, int surface);

struct TriParamReport {
  int genus = 0;
  std::array<int, 3> k = {0, 0, 0};
  // Genus of the central surface as seen from each of the three handlebodies.
  std::array<int, 3> handlebody_genus = {0, 0, 0};
  SimplexCounts counts;
  std::int64_t euler_simplices = 0;
  std::int64_t euler_trisection = 0;  // 2 + g - (k1 + k2 + k3)
  std::vector<SurfaceBridge> surfaces;
  std::optional<int> oracle_genus;
  int group_order = 1;
  std::vector<std::string> notes;
  // "(g; k1,k2,k3)".
  std::string Parameters() const;
};

// Counts the sector graphs and handlebody spines from global incidence data.
// With x = (V, E, F, T, P):
//   chi(Gamma_1) = V - 4P,         chi(Gamma_2) = F - 3T,
//   chi(Gamma_3) = E - 25P,        chi(gamma_1) = 2E - 35P,
//   chi(gamma_2) = 3F - 8T - 20P,  chi(gamma_3) = 3F - 6T - 25P,
// and k_i = 1 - chi(Gamma_i), g = 1 - chi(gamma_i). Validates K first and
// throws Error(kGenusMismatch) when the three genera disagree. When
// with_oracle is set, the central surface is also assembled by SigmaOracle.
TriParamReport TrisectionParameters(const GTriangulation& k,
                                    bool with_oracle = false);

// The central surface assembled cell by cell. Each pentachoron P is the cone
// on its boundary, cut into the levels 0, (0,1/4), 1/4, (1/4,3/4), 3/4 and
// (3/4,1) of the cone coordinate; each face s of P carries the dual cells
// indexed by chains of faces of s. The cells of the central surface are
// selected by the face types of the chain and the level, cells at level 0 are
// shared between pentachora, and the result is glued into a CombMap.
CombMap SigmaSurface(const GTriangulation& k);
// Genus of SigmaSurface. Throws Error(kGenusMismatch) when the assembled
// surface is not orientable.
int SigmaOracle(const GTriangulation& k);

// Standard inputs.
// The boundary of the 5-simplex with the symmetric group on its 6 vertices.
GTriangulation BoundaryOfSimplex5();
// Two 4-simplices glued along their boundaries, with the cyclic rotation of
// the 5 vertices.
GTriangulation DoublePentachoron();
// The boundary of a tetrahedron on vertices 0..3.
std::vector<Triangle> TetrahedralSphere();
// The 7-vertex torus with triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
std::vector<Triangle> SevenVertexTorus();
// The boundary of the 5-simplex carrying the tetrahedral sphere on vertices
// 0..3, with the action of S_4 x Z_2 preserving it.
GTriangulation BoundaryOfSimplex5WithSphere();

// boundary_simplex5, boundary_simplex5_sphere, double_pentachoron.
std::vector<std::string> StandardTriangulationNames();
// Throws Error(kUnknownName).
GTriangulation StandardTriangulation(const std::string& name);

}  // namespace etd

#endif  // ETD_TRIANG_HPP_

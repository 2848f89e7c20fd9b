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

#include <gtest/gtest.h>

#include <random>

#include "etd/catalog.hpp"
#include "etd/cmap.hpp"
#include "etd/diagram.hpp"
#include "etd/error.hpp"
#include "oracles.hpp"

namespace etd {
namespace {

// The one-face map of the 4g-gon with word a1 b1 a1^-1 b1^-1 ...
CombMap Polygon4g(int g) {
  const int n = 4 * g;
  Perm e(n), phi(n);
  for (int d = 0; d < n; ++d) phi[d] = (d + 1) % n;
  for (int j = 0; j < g; ++j) {
    e[4 * j] = 4 * j + 2;
    e[4 * j + 2] = 4 * j;
    e[4 * j + 1] = 4 * j + 3;
    e[4 * j + 3] = 4 * j + 1;
  }
  // phi = R^-1 E, so R = E phi^-1.
  const Perm phi_inv = Inverse(phi);
  Perm r(n);
  for (int d = 0; d < n; ++d) r[d] = e[phi_inv[d]];
  return CombMap::Build(e, r);
}

TEST(CombMap, SingleLoopOnSphere) {
  const CombMap m = CombMap::Build({1, 0}, {1, 0});
  EXPECT_EQ(m.num_vertices(), 1);
  EXPECT_EQ(m.num_edges(), 1);
  EXPECT_EQ(m.num_faces(), 2);
  EXPECT_EQ(m.EulerCharacteristic(), 2);
  EXPECT_EQ(m.Genus(), 0);
}

TEST(CombMap, SquareTorus) {
  const CombMap m = Polygon4g(1);
  EXPECT_EQ(m.num_vertices(), 1);
  EXPECT_EQ(m.num_edges(), 2);
  EXPECT_EQ(m.num_faces(), 1);
  EXPECT_EQ(m.Genus(), 1);
}

TEST(CombMap, PolygonGenus) {
  for (int g = 1; g <= 6; ++g) {
    const CombMap m = Polygon4g(g);
    EXPECT_EQ(m.Genus(), g);
    const auto cells = oracle::CountCells(m.edge_pairing(), m.rotation());
    EXPECT_EQ(cells[0] - cells[1] + cells[2], 2 - 2 * g);
  }
}

TEST(CombMap, OctahedronMatchesOrbitCount) {
  const CombMap m = OctahedronTetrahedral().graph;
  const auto cells = oracle::CountCells(m.edge_pairing(), m.rotation());
  EXPECT_EQ(cells, (std::array<int, 3>{6, 12, 8}));
  EXPECT_EQ(m.num_vertices(), 6);
  EXPECT_EQ(m.num_edges(), 12);
  EXPECT_EQ(m.num_faces(), 8);
  EXPECT_EQ(m.Genus(), 0);
}

TEST(CombMap, RejectsBadPermutations) {
  try {
    CombMap::Build({1, 2, 0}, {0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInvolution);
  }
  try {
    CombMap::Build({0, 1}, {1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDanglingDart);
  }
  try {
    CombMap::Build({1, 0}, {0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPermutation);
  }
}

TEST(CombMap, ValenceAndFaceLengthSums) {
  const CombMap m = Polygon4g(3);
  size_t face_sum = 0, vertex_sum = 0;
  for (const auto& f : m.face_orbits()) face_sum += f.size();
  for (const auto& v : m.vertex_orbits()) vertex_sum += v.size();
  EXPECT_EQ(face_sum, static_cast<size_t>(m.num_darts()));
  EXPECT_EQ(vertex_sum, static_cast<size_t>(m.num_darts()));
}

TEST(CutAlong, TorusLoopGivesAnnulus) {
  const CombMap m = Polygon4g(1);
  const CutResult cut = CutAlong(m, {m.Cell(CellKind::kEdge, 0)});
  ASSERT_EQ(cut.components.size(), 1u);
  EXPECT_EQ(cut.components[0].euler, 0);
  EXPECT_EQ(cut.components[0].boundary_circles, 2);
}

TEST(CutAlong, Genus2CutSystemGivesFourHoledSphere) {
  // Two disjoint curves with connected complement, taken from a family of
  // three parallel-free curves on a genus-2 catalog surface.
  const CatalogEntry entry = ByName("d6_s4");
  const ShadowDiagram& d = entry.diagram;
  const CombMap& m = d.surface();
  ASSERT_EQ(d.genus(), 2);
  const std::vector<CurvePath> curves = CurvesOf(d, 1);
  ASSERT_GE(curves.size(), 2u);
  int connected_pairs = 0;
  for (size_t a = 0; a < curves.size(); ++a) {
    for (size_t b = a + 1; b < curves.size(); ++b) {
      std::vector<CellId> edges;
      for (const CurvePath* c : {&curves[a], &curves[b]}) {
        for (Dart x : c->darts) edges.push_back(m.Cell(CellKind::kEdge, x));
      }
      const CutResult cut = CutAlong(m, edges);
      if (cut.components.size() != 1) continue;
      ++connected_pairs;
      EXPECT_EQ(cut.components[0].euler, -2);
      EXPECT_EQ(cut.components[0].boundary_circles, 4);
      EXPECT_EQ(cut.components[0].genus, 0);
      // Oracle: recount orbits of the cut surface permutations.
      const auto cells = oracle::CountCells(cut.surface.edge_pairing(),
                                            cut.surface.rotation());
      EXPECT_EQ(cells[0] - cells[1] + cells[2] - cut.surface.num_holes(), -2);
      EXPECT_EQ(cut.surface.num_holes(), 4);
    }
  }
  EXPECT_GT(connected_pairs, 0);
}

TEST(CutAlong, ContractibleLoopSplitsSphere) {
  const CombMap m = CombMap::Build({1, 0}, {1, 0});
  const CutResult cut = CutAlong(m, {m.Cell(CellKind::kEdge, 0)});
  ASSERT_EQ(cut.components.size(), 2u);
  for (const auto& c : cut.components) {
    EXPECT_EQ(c.euler, 1);
    EXPECT_EQ(c.boundary_circles, 1);
  }
}

TEST(CutAlong, UnknownCell) {
  const CombMap m = Polygon4g(1);
  EXPECT_THROW(CutAlong(m, {CellId{CellKind::kEdge, 3}}), Error);
}

TEST(CutAlong, RegluingRestoresTheMap) {
  const CombMap m = Polygon4g(2);
  const CutResult cut =
      CutAlong(m, {m.Cell(CellKind::kEdge, 0), m.Cell(CellKind::kEdge, 1)});
  const CombMap back = Reglue(cut);
  EXPECT_TRUE(IsIsomorphic(back, {}, m, {}));
}

TEST(Subdivide, PreservesEulerAndRoundTrips) {
  const CombMap m = Polygon4g(1);
  std::vector<CellId> all;
  for (const auto& e : m.edge_orbits()) all.push_back(m.Cell(CellKind::kEdge, e[0]));
  const Subdivision s = SubdivideEdges(m, all);
  EXPECT_EQ(s.map.EulerCharacteristic(), m.EulerCharacteristic());
  EXPECT_EQ(s.map.num_edges(), 2 * m.num_edges());
  EXPECT_EQ(s.map.num_vertices(), m.num_vertices() + m.num_edges());
  for (Dart d = 0; d < s.map.num_darts(); ++d) {
    const Dart o = s.origin[d];
    ASSERT_GE(o, 0);
    ASSERT_LT(o, m.num_darts());
    if (d < s.num_original_darts) {
      EXPECT_EQ(o, d);
    }
  }
  const Subdivision one = SubdivideEdges(m, {all[0]});
  EXPECT_EQ(one.map.EulerCharacteristic(), 0);
  EXPECT_EQ(one.map.Genus(), 1);
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  const CombMap m = OctahedronTetrahedral().graph;
  const CanonicalForm base = Canonicalize(m);
  for (int t = 0; t < 20; ++t) {
    const Perm pi = oracle::RandomPerm(m.num_darts(), rng);
    const CombMap r = Relabel(m, pi);
    EXPECT_EQ(Canonicalize(r).code, base.code);
    EXPECT_TRUE(IsIsomorphic(m, {}, r, {}));
  }
}

TEST(Canonical, ColoredLoopsDiffer) {
  // Two loops on the torus, labeled by which loop they are; swapping the
  // labels of only one map breaks the colored isomorphism when the loops
  // carry distinct colors and the map has no symmetry exchanging them with
  // a reversal of orientation.
  const CombMap m = Polygon4g(1);
  const std::vector<std::int64_t> a = {1, 2, 1, 2};
  const std::vector<std::int64_t> b = {1, 1, 1, 1};
  EXPECT_FALSE(IsIsomorphic(m, a, m, b));
  EXPECT_TRUE(IsIsomorphic(m, a, m, a));
}

TEST(Canonical, AgreesWithBacktrackingOracle) {
  std::mt19937 rng(11);
  const CombMap oct = OctahedronTetrahedral().graph;
  const CombMap torus = Polygon4g(2);
  const Perm pi = oracle::RandomPerm(oct.num_darts(), rng);
  const CombMap oct2 = Relabel(oct, pi);
  EXPECT_TRUE(oracle::IsomorphicByBacktracking(
      oct.edge_pairing(), oct.rotation(), {}, oct2.edge_pairing(),
      oct2.rotation(), {}));
  EXPECT_TRUE(IsIsomorphic(oct, {}, oct2, {}));
  // The mirror image of the genus-2 polygon map.
  const CombMap mirror =
      CombMap::Build(torus.edge_pairing(), Inverse(torus.rotation()));
  EXPECT_EQ(IsIsomorphic(torus, {}, mirror, {}),
            oracle::IsomorphicByBacktracking(
                torus.edge_pairing(), torus.rotation(), {},
                mirror.edge_pairing(), mirror.rotation(), {}));
}

TEST(Automorphism, FromDartIsUnique) {
  const CombMap m = OctahedronTetrahedral().graph;
  int count = 0;
  for (Dart to = 0; to < m.num_darts(); ++to) {
    if (auto f = AutomorphismFrom(m, 0, to)) {
      ++count;
      for (Dart d = 0; d < m.num_darts(); ++d) {
        EXPECT_EQ((*f)[m.E(d)], m.E((*f)[d]));
        EXPECT_EQ((*f)[m.R(d)], m.R((*f)[d]));
      }
    }
  }
  // Orientation-preserving automorphisms of the octahedron: 24.
  EXPECT_EQ(count, 24);
}

}  // namespace
}  // namespace etd

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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "etd/triang.hpp"
#include "oracles.hpp"

namespace etd {
namespace {

using Vec5 = std::array<std::int64_t, 5>;

std::int64_t Dot(const Vec5& a, const SimplexCounts& c) {
  return a[0] * c.v + a[1] * c.e + a[2] * c.f + a[3] * c.t + a[4] * c.p;
}

// Every simplex of the complex, found by brute force over subsets of each
// pentachoron.
std::array<std::set<std::vector<int>>, 5> AllSimplices(const GTriangulation& k) {
  std::array<std::set<std::vector<int>>, 5> out;
  for (const auto& p : k.pentachora) {
    for (int mask = 1; mask < 32; ++mask) {
      std::vector<int> s;
      for (int i = 0; i < 5; ++i) {
        if (mask & (1 << i)) s.push_back(p[i]);
      }
      std::sort(s.begin(), s.end());
      out[s.size() - 1].insert(s);
    }
  }
  return out;
}

// Stellar subdivision of the pentachoron {0,1,2,3,4} of the boundary of the
// 5-simplex, with the new vertex 6.
GTriangulation SubdividedBoundary() {
  GTriangulation k = BoundaryOfSimplex5();
  k.generators.clear();
  k.generator_names.clear();
  k.surfaces.clear();
  k.name = "subdivided";
  k.num_vertices = 7;
  std::vector<std::array<int, 5>> pents;
  for (const auto& p : k.pentachora) {
    std::array<int, 5> s = p;
    std::sort(s.begin(), s.end());
    if (s == std::array<int, 5>{0, 1, 2, 3, 4}) continue;
    pents.push_back(p);
  }
  for (int skip = 0; skip < 5; ++skip) {
    std::array<int, 5> p;
    int at = 0;
    for (int v = 0; v < 5; ++v) {
      if (v != skip) p[at++] = v;
    }
    p[4] = 6;
    pents.push_back(p);
  }
  k.pentachora = pents;
  return k;
}

GTriangulation Relabel(const GTriangulation& k, const Perm& s) {
  GTriangulation r = k;
  for (auto& p : r.pentachora) {
    for (int& v : p) v = s[v];
  }
  Perm inv(s.size());
  for (size_t i = 0; i < s.size(); ++i) inv[s[i]] = static_cast<int>(i);
  for (Perm& g : r.generators) {
    Perm h(g.size());
    for (size_t v = 0; v < g.size(); ++v) h[v] = s[g[inv[v]]];
    g = h;
  }
  for (auto& surf : r.surfaces) {
    for (auto& t : surf.triangles) {
      for (int& v : t) v = s[v];
    }
  }
  return r;
}

TEST(Triang, BoundarySimplexIsValid) {
  const GTriangulation k = BoundaryOfSimplex5();
  const TriangulationCheck c = CheckTriangulation(k);
  ASSERT_TRUE(c.valid) << c.violation;
  EXPECT_EQ(c.group_order, 720);
  EXPECT_EQ(c.fixed_vertices.size(), 6u);
}

TEST(Triang, FacetsArePairedOracle) {
  for (const std::string& name : StandardTriangulationNames()) {
    const GTriangulation k = StandardTriangulation(name);
    if (!k.gluings.empty()) continue;
    std::map<std::vector<int>, int> facets;
    for (const auto& p : k.pentachora) {
      for (int skip = 0; skip < 5; ++skip) {
        std::vector<int> f;
        for (int i = 0; i < 5; ++i) {
          if (i != skip) f.push_back(p[i]);
        }
        std::sort(f.begin(), f.end());
        ++facets[f];
      }
    }
    for (const auto& [f, n] : facets) EXPECT_EQ(n, 2) << name;
    const SimplexCounts c = CountSimplices(k);
    EXPECT_EQ(static_cast<std::int64_t>(facets.size()), c.t) << name;
  }
  EXPECT_EQ(CountSimplices(BoundaryOfSimplex5()).t, 15);
}

TEST(Triang, SimplexCountsMatchBruteForce) {
  const GTriangulation k = BoundaryOfSimplex5();
  const auto all = AllSimplices(k);
  const SimplexCounts c = CountSimplices(k);
  EXPECT_EQ(c.v, static_cast<std::int64_t>(all[0].size()));
  EXPECT_EQ(c.e, static_cast<std::int64_t>(all[1].size()));
  EXPECT_EQ(c.f, static_cast<std::int64_t>(all[2].size()));
  EXPECT_EQ(c.t, static_cast<std::int64_t>(all[3].size()));
  EXPECT_EQ(c.p, static_cast<std::int64_t>(all[4].size()));
  const SimplexCounts s = CountSimplices(SubdividedBoundary());
  EXPECT_EQ(s.v, 7);
  EXPECT_EQ(s.p, 10);
  EXPECT_EQ(s.euler(), 2);
}

TEST(Triang, OpenFacet) {
  GTriangulation k;
  k.num_vertices = 5;
  k.pentachora = {{0, 1, 2, 3, 4}};
  const TriangulationCheck c = CheckTriangulation(k);
  EXPECT_FALSE(c.valid);
  EXPECT_EQ(c.code, ErrorCode::kOpenFacet);
  try {
    ValidateTriangulation(k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOpenFacet);
  }
}

TEST(Triang, NonSimplicialAction) {
  GTriangulation k = SubdividedBoundary();
  ASSERT_TRUE(CheckTriangulation(k).valid);
  k.generators = {{6, 1, 2, 3, 4, 5, 0}};
  k.generator_names = {"bad"};
  const TriangulationCheck c = CheckTriangulation(k);
  EXPECT_FALSE(c.valid);
  EXPECT_EQ(c.code, ErrorCode::kNonSimplicialAction);
  k.generators = {{0, 1, 2}};
  EXPECT_EQ(CheckTriangulation(k).code, ErrorCode::kNonSimplicialAction);
}

TEST(Triang, SurfaceNotInvariant) {
  GTriangulation k = BoundaryOfSimplex5WithSphere();
  ASSERT_TRUE(CheckTriangulation(k).valid);
  k.generators.push_back({1, 2, 3, 4, 5, 0});
  k.generator_names.push_back("cycle6");
  const TriangulationCheck c = CheckTriangulation(k);
  EXPECT_FALSE(c.valid);
  EXPECT_EQ(c.code, ErrorCode::kSurfaceNotInvariant);
}

TEST(Triang, CountingFormulasMatchRegionOracle) {
  using oracle::Region;
  const Vec5 x1 = oracle::RegionCoefficients(Region::kX1);
  const Vec5 x2 = oracle::RegionCoefficients(Region::kX2);
  const Vec5 x3 = oracle::RegionCoefficients(Region::kX3);
  const Vec5 h1 = oracle::RegionCoefficients(Region::kH1);
  const Vec5 h2 = oracle::RegionCoefficients(Region::kH2);
  const Vec5 h3 = oracle::RegionCoefficients(Region::kH3);
  const Vec5 sigma = oracle::RegionCoefficients(Region::kSigma);
  std::vector<GTriangulation> ks;
  for (const std::string& name : StandardTriangulationNames()) {
    ks.push_back(StandardTriangulation(name));
  }
  ks.push_back(SubdividedBoundary());
  for (const GTriangulation& k : ks) {
    const TriParamReport r = TrisectionParameters(k);
    const SimplexCounts c = r.counts;
    EXPECT_EQ(r.k[0], 1 - Dot(x1, c)) << k.name;
    EXPECT_EQ(r.k[1], 1 - Dot(x2, c)) << k.name;
    EXPECT_EQ(r.k[2], 1 - Dot(x3, c)) << k.name;
    EXPECT_EQ(r.handlebody_genus[0], 1 - Dot(h1, c)) << k.name;
    EXPECT_EQ(r.handlebody_genus[1], 1 - Dot(h2, c)) << k.name;
    EXPECT_EQ(r.handlebody_genus[2], 1 - Dot(h3, c)) << k.name;
    EXPECT_EQ(2 - 2 * r.genus, Dot(sigma, c)) << k.name;
    EXPECT_EQ(r.euler_simplices, r.euler_trisection) << k.name;
  }
}

TEST(Triang, ParametersAgreeWithSigmaOracle) {
  const TriParamReport a = TrisectionParameters(BoundaryOfSimplex5(), true);
  EXPECT_EQ(a.Parameters(), "(181; 19,26,136)");
  ASSERT_TRUE(a.oracle_genus.has_value());
  EXPECT_EQ(*a.oracle_genus, a.genus);
  const TriParamReport b = TrisectionParameters(DoublePentachoron(), true);
  EXPECT_EQ(b.Parameters(), "(51; 4,6,41)");
  ASSERT_TRUE(b.oracle_genus.has_value());
  EXPECT_EQ(*b.oracle_genus, b.genus);
  EXPECT_EQ(b.group_order, 5);
}

TEST(Triang, SigmaSurfaceIsClosedAndConnected) {
  const CombMap s = SigmaSurface(DoublePentachoron());
  const std::array<int, 3> cells =
      oracle::CountCells(s.edge_pairing(), s.rotation());
  EXPECT_EQ(cells[0] - cells[1] + cells[2], 2 - 2 * 51);
}

TEST(Triang, RelabelInvariance) {
  std::mt19937 rng(7);
  for (const std::string& name : StandardTriangulationNames()) {
    const GTriangulation k = StandardTriangulation(name);
    const std::string expected = TrisectionParameters(k).Parameters();
    const int order = CheckTriangulation(k).group_order;
    for (int trial = 0; trial < 5; ++trial) {
      const GTriangulation r =
          Relabel(k, oracle::RandomPerm(k.num_vertices, rng));
      const TriangulationCheck c = CheckTriangulation(r);
      ASSERT_TRUE(c.valid) << name << ": " << c.violation;
      EXPECT_EQ(c.group_order, order) << name;
      EXPECT_EQ(TrisectionParameters(r).Parameters(), expected) << name;
    }
  }
}

TEST(Triang, BridgeTetrahedralSphere) {
  const SurfaceBridge s = BridgeParameters(TetrahedralSphere(), "sphere");
  EXPECT_EQ(s.b, 12);
  EXPECT_EQ(s.p, (std::array<int, 3>{4, 4, 6}));
  EXPECT_EQ(s.euler, 2);
  EXPECT_EQ(s.euler_loops(), s.euler);
  const SurfaceBridge t =
      BridgeParameters(BoundaryOfSimplex5WithSphere(), 0);
  EXPECT_EQ(t.b, 12);
  EXPECT_EQ(t.p, s.p);
}

TEST(Triang, BridgeTorus) {
  const std::vector<Triangle> tri = SevenVertexTorus();
  EXPECT_EQ(tri.size(), 14u);
  const SurfaceBridge s = BridgeParameters(tri, "torus");
  EXPECT_EQ(s.b, 42);
  EXPECT_EQ(s.p, (std::array<int, 3>{7, 14, 21}));
  EXPECT_EQ(s.euler, 0);
  EXPECT_EQ(s.euler_loops(), 0);
}

TEST(Triang, BridgeTwoSpheres) {
  std::vector<Triangle> tri = TetrahedralSphere();
  for (Triangle t : TetrahedralSphere()) {
    for (int& v : t) v += 4;
    tri.push_back(t);
  }
  const SurfaceBridge s = BridgeParameters(tri, "two spheres");
  EXPECT_EQ(s.b, 24);
  EXPECT_EQ(s.p, (std::array<int, 3>{8, 8, 12}));
  EXPECT_EQ(s.euler, 4);
  EXPECT_EQ(s.euler_loops(), 4);
}

TEST(Triang, UnknownName) {
  try {
    StandardTriangulation("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownName);
  }
}

}  // namespace
}  // namespace etd

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

#include <cstdlib>

#include "etd/catalog.hpp"
#include "etd/diagram.hpp"
#include "etd/error.hpp"

namespace etd {
namespace {

ShadowDiagram Recolor(const ShadowDiagram& d, Dart dart, Color c) {
  std::vector<Color> colors = d.colors();
  colors[dart] = c;
  colors[d.surface().E(dart)] = c;
  return ShadowDiagram(d.surface(), colors, d.marked());
}

Dart FirstDartOf(const ShadowDiagram& d, Color c) {
  for (Dart x = 0; x < d.surface().num_darts(); ++x) {
    if (d.color(x) == c) return x;
  }
  return -1;
}

TEST(Color, TagsRoundTrip) {
  for (int code = 0; code < 7; ++code) {
    const Color c = Color::FromCode(code);
    EXPECT_EQ(c.code(), code);
    EXPECT_EQ(Color::FromTag(c.Tag()), c);
  }
  EXPECT_FALSE(Color::FromTag("a4").has_value());
}

TEST(Diagram, RejectsDisagreeingEdgeColors) {
  const ShadowDiagram d = ByName("cp2").diagram;
  std::vector<Color> colors = d.colors();
  const Dart x = FirstDartOf(d, Color::Alpha(1));
  colors[x] = Color::Alpha(2);
  EXPECT_THROW(ShadowDiagram(d.surface(), colors, d.marked()), Error);
}

TEST(Validate, Cp2) {
  const ValidationReport r = ValidateTrisection(ByName("cp2").diagram);
  ASSERT_TRUE(r.valid());
  EXPECT_EQ(r.Parameters(), "(1; 0,0,0)");
  EXPECT_EQ(r.euler_x, 3);
  for (const auto& c : r.cut) EXPECT_TRUE(c.valid);
  for (const auto& p : r.pairs) EXPECT_EQ(p.verdict, HeegaardVerdict::kVerified);
}

TEST(Validate, S1xS3) {
  const ValidationReport r = ValidateTrisection(ByName("s1xs3").diagram);
  ASSERT_TRUE(r.valid());
  EXPECT_EQ(r.Parameters(), "(1; 1,1,1)");
  EXPECT_EQ(r.euler_x, 0);
}

TEST(Validate, SuspensionOfGenus2) {
  const ValidationReport r =
      ValidateTrisection(ByName("s4_suspension_genus2").diagram);
  ASSERT_TRUE(r.valid());
  EXPECT_EQ(r.Parameters(), "(2; 0,0,2)");
  EXPECT_EQ(r.euler_x, 2);
}

TEST(Validate, BrokenCutSystem) {
  const ShadowDiagram d = ByName("cp2").diagram;
  const ShadowDiagram broken =
      Recolor(d, FirstDartOf(d, Color::Alpha(1)), Color::Scaffold());
  const ValidationReport r = ValidateTrisection(broken);
  EXPECT_FALSE(r.valid());
}

TEST(Validate, NonSeparatingCurveMissing) {
  // Removing a whole alpha curve leaves a family that does not cut the
  // torus into a planar surface.
  const ShadowDiagram d = ByName("cp2").diagram;
  std::vector<Color> colors = d.colors();
  for (Dart x = 0; x < d.surface().num_darts(); ++x) {
    if (colors[x] == Color::Alpha(2)) colors[x] = Color::Scaffold();
  }
  const ShadowDiagram missing(d.surface(), colors, d.marked());
  const CutSystemVerdict v = ValidateCutSystem(missing, 2);
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(ValidateTrisection(missing).valid());
}

TEST(Validate, HomologyOfHandlebodyIsFree) {
  for (const std::string name : {"cp2", "s1xs3", "d6_s4", "d4_double"}) {
    const ShadowDiagram d = ByName(name).diagram;
    const ValidationReport r = ValidateTrisection(d);
    ASSERT_TRUE(r.valid()) << name;
    for (const auto& p : r.pairs) {
      EXPECT_TRUE(p.quotient.is_free()) << name;
      EXPECT_EQ(p.quotient.rank, p.k) << name;
    }
  }
}

TEST(Validate, Q8BaseBridgeData) {
  const ValidationReport r = ValidateTrisection(Q8LinkBase().diagram);
  ASSERT_TRUE(r.valid());
  EXPECT_EQ(r.Parameters(), "(0; 0,0,0)");
  ASSERT_TRUE(r.shadow.bridge.has_value());
  EXPECT_EQ(r.shadow.bridge->b, 4);
  EXPECT_EQ(r.shadow.bridge->p, (std::array<int, 3>{2, 2, 2}));
  EXPECT_EQ(r.shadow.bridge->euler_loops, 2);
  EXPECT_EQ(r.shadow.bridge->euler_complex, r.shadow.bridge->euler_loops);
}

TEST(Validate, ShadowMeetingItsOwnCurveIsRejected) {
  // Recolor a Shadow(1) edge adjacent to an Alpha(1) vertex as Alpha(1):
  // done on the natural torus with arcs, the local rules must refuse a
  // shadow dart sharing a vertex with a curve of its own family.
  const ShadowDiagram d = Q8LinkBase().diagram;
  const Dart x = FirstDartOf(d, Color::Shadow(1));
  ASSERT_GE(x, 0);
  const ShadowDiagram bad = Recolor(d, x, Color::Alpha(1));
  const ValidationReport r = ValidateTrisection(bad);
  EXPECT_FALSE(r.valid());
}

TEST(Tier2, BudgetZeroFallsBackToHomology) {
  const ShadowDiagram d = ByName("d6_s4").diagram;
  ValidationOptions none;
  none.tier2_budget = 0;
  const ValidationReport r = ValidateTrisection(d, none);
  ASSERT_TRUE(r.valid());
  EXPECT_EQ(r.Parameters(), "(2; 0,0,2)");
  for (const auto& p : r.pairs) {
    EXPECT_GE(p.verdict, HeegaardVerdict::kHomologyCertified);
  }
}

TEST(Tier2, EnvironmentOverride) {
  ValidationOptions o;
  ::setenv("ETD_TIER2_BUDGET", "17", 1);
  EXPECT_EQ(ResolveTier2Budget(o), 17);
  ::unsetenv("ETD_TIER2_BUDGET");
  EXPECT_EQ(ResolveTier2Budget(o), 10000);
  o.tier2_budget = 5;
  EXPECT_EQ(ResolveTier2Budget(o), 5);
}

TEST(Validate, EulerIdentity) {
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    const ValidationReport r = ValidateTrisection(e.diagram);
    ASSERT_TRUE(r.valid()) << name;
    ASSERT_TRUE(r.euler_x.has_value());
    const auto k = r.k();
    EXPECT_EQ(*r.euler_x, 2 + r.genus - k[0] - k[1] - k[2]) << name;
    EXPECT_EQ(*r.euler_x, e.expected.euler()) << name;
  }
}

}  // namespace
}  // namespace etd

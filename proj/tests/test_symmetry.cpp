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

#include "etd/catalog.hpp"
#include "etd/symmetry.hpp"

namespace etd {
namespace {

TEST(Action, CatalogOrders) {
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    const ActionCheck a = CheckAction(e.diagram, e.action);
    ASSERT_TRUE(a.valid) << name << ": " << a.violation;
    EXPECT_EQ(a.order, e.expected.action_order) << name;
  }
}

TEST(Action, Structures) {
  EXPECT_EQ(CheckAction(ByName("d4_double").diagram, ByName("d4_double").action)
                .structure,
            "dihedral");
  const CatalogEntry s = ByName("s2xs2_genus2");
  const ActionCheck a = CheckAction(s.diagram, s.action);
  EXPECT_EQ(a.order, 4);
  EXPECT_EQ(a.element_orders.at(2), 3);
}

TEST(Action, RejectsNonAutomorphism) {
  const CatalogEntry e = ByName("cp2");
  DiagramAction bad;
  Perm p = IdentityPerm(e.diagram.surface().num_darts());
  std::swap(p[0], p[1]);
  bad.generators = {p};
  const ActionCheck a = CheckAction(e.diagram, bad);
  EXPECT_FALSE(a.valid);
}

TEST(Action, RejectsColorBreakingAutomorphism) {
  // The rotation of cp2 composed with itself is fine; a map automorphism
  // that moves alpha 1 onto alpha 2 without being in the action must be
  // refused when colors differ.
  const CatalogEntry e = ByName("cp2");
  const CombMap& m = e.diagram.surface();
  int refused = 0;
  for (Dart to = 0; to < m.num_darts(); ++to) {
    const auto f = AutomorphismFrom(m, 0, to);
    if (!f) continue;
    DiagramAction a;
    a.generators = {*f};
    bool preserves = true;
    for (Dart d = 0; d < m.num_darts(); ++d) {
      preserves = preserves && e.diagram.color((*f)[d]) == e.diagram.color(d);
    }
    const ActionCheck c = CheckAction(e.diagram, a);
    if (!preserves) {
      EXPECT_FALSE(c.valid);
      ++refused;
    }
  }
  EXPECT_GT(refused, 0);
}

TEST(Action, OrbitStabilizer) {
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    const CombMap& m = e.diagram.surface();
    const GroupClosure g(e.action, m.num_darts());
    for (CellKind kind : {CellKind::kVertex, CellKind::kEdge, CellKind::kFace}) {
      for (const auto& orbit : Orbits(g, m, kind)) {
        for (const CellId& cell : orbit) {
          const auto stab = Stabilizer(g, m, cell);
          EXPECT_EQ(orbit.size() * stab.size(),
                    static_cast<size_t>(g.order()))
              << name << " " << ToString(cell);
        }
      }
    }
  }
}

TEST(Action, GroupClosureTables) {
  const CatalogEntry e = ByName("d6_double");
  const GroupClosure g(e.action, e.diagram.surface().num_darts());
  ASSERT_EQ(g.order(), 12);
  for (int a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.Mul(a, g.Inv(a)), 0);
    for (int b = 0; b < g.order(); ++b) {
      EXPECT_EQ(g.element(g.Mul(a, b)), Compose(g.element(a), g.element(b)));
    }
  }
  int classes = 0;
  for (const auto& c : g.ConjugacyClasses()) classes += static_cast<int>(c.size());
  EXPECT_EQ(classes, 12);
}

TEST(Singular, HyperellipticInvolutionOfS2xS2) {
  const CatalogEntry e = ByName("s2xs2_genus2");
  const GroupClosure g(e.action, e.diagram.surface().num_darts());
  const SingularReport s = SingularLocus(e.diagram, g);
  ASSERT_FALSE(s.hyperelliptic.empty());
  for (int h : s.hyperelliptic) {
    for (const auto& el : s.elements) {
      if (el.element == h) EXPECT_EQ(el.fixed_points(), 6);
    }
  }
}

}  // namespace
}  // namespace etd

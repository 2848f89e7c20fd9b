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
#include "etd/quotient.hpp"

namespace etd {
namespace {

ShadowDiagram SwapFamilies(const ShadowDiagram& d, int a, int b) {
  std::vector<Color> colors = d.colors();
  for (Color& c : colors) {
    if (c.kind == ColorKind::kScaffold) continue;
    if (c.family == a) {
      c.family = b;
    } else if (c.family == b) {
      c.family = a;
    }
  }
  return ShadowDiagram(d.surface(), colors, d.marked());
}

TEST(Catalog, EveryEntryMatchesItsExpectation) {
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    EXPECT_EQ(e.name, name);
    const ValidationReport r = ValidateTrisection(e.diagram);
    ASSERT_TRUE(r.valid()) << name;
    EXPECT_EQ(r.genus, e.expected.genus) << name;
    EXPECT_EQ(r.Parameters(), e.expected.Parameters()) << name;
    if (e.expected.h1) {
      ASSERT_TRUE(r.h1_x.has_value()) << name;
      EXPECT_EQ(*r.h1_x, *e.expected.h1) << name;
    }
    if (e.expected.bridge) {
      ASSERT_TRUE(r.shadow.bridge.has_value()) << name;
      EXPECT_EQ(r.shadow.bridge->b, e.expected.bridge->b) << name;
      EXPECT_EQ(r.shadow.bridge->p, e.expected.bridge->p) << name;
    }
    EXPECT_EQ(CheckAction(e.diagram, e.action).order, e.expected.action_order)
        << name;
  }
}

TEST(Catalog, ClassificationValues) {
  struct Row {
    std::string name;
    std::string params;
    AbelianGroup h1;
    int order;
  };
  const std::vector<Row> rows = {
      {"cp2", "(1; 0,0,0)", {}, 2},
      {"s1xs3", "(1; 1,1,1)", {1, {}}, 1},
      {"s2xs2_genus2", "(2; 0,0,0)", {}, 4},
      {"d4_double", "(2; 2,2,2)", {2, {}}, 8},
      {"d6_double", "(2; 2,2,2)", {2, {}}, 12},
      {"d6_s4", "(2; 0,0,2)", {}, 12},
  };
  for (const Row& row : rows) {
    const CatalogEntry e = ByName(row.name);
    const ValidationReport r = ValidateTrisection(e.diagram);
    EXPECT_EQ(r.Parameters(), row.params) << row.name;
    ASSERT_TRUE(r.h1_x.has_value());
    EXPECT_EQ(*r.h1_x, row.h1) << row.name;
    EXPECT_EQ(CheckAction(e.diagram, e.action).order, row.order) << row.name;
  }
}

TEST(Catalog, MaximalSymmetryBound) {
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    if (e.diagram.genus() != 2) continue;
    const int order = CheckAction(e.diagram, e.action).order;
    EXPECT_LE(order, 12 * (2 - 1)) << name;
    if (name == "d6_double" || name == "d6_s4") EXPECT_EQ(order, 12);
  }
}

TEST(Catalog, MirrorPair) {
  const ShadowDiagram a = ByName("cp2").diagram;
  const ShadowDiagram b = ByName("cp2bar").diagram;
  EXPECT_FALSE(IsIsomorphic(a.surface(), a.Labels(), b.surface(), b.Labels()));
  const ShadowDiagram swapped = SwapFamilies(b, 1, 2);
  EXPECT_TRUE(IsIsomorphic(a.surface(), a.Labels(), swapped.surface(),
                           swapped.Labels()));
}

TEST(Catalog, NaturalGenus1BaseCaseIsCp2) {
  const CatalogEntry n = NaturalGenus1(1, {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}});
  const ShadowDiagram cp2 = ByName("cp2").diagram;
  EXPECT_EQ(ValidateTrisection(n.diagram).Parameters(), "(1; 0,0,0)");
  EXPECT_TRUE(IsIsomorphic(n.diagram.surface(), n.diagram.Labels(),
                           cp2.surface(), cp2.Labels()));
}

TEST(Catalog, NaturalGenus1Orders) {
  for (int m = 1; m <= 4; ++m) {
    const CatalogEntry e =
        NaturalGenus1(m, {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}});
    EXPECT_EQ(ValidateTrisection(e.diagram).Parameters(), "(1; 0,0,0)");
    EXPECT_EQ(CheckAction(e.diagram, e.action).order, 2 * m * m) << m;
  }
}

TEST(Catalog, NaturalGenus1ParallelSlopes) {
  const CatalogEntry e =
      NaturalGenus1(3, {Slope{1, 0}, Slope{1, 0}, Slope{1, 0}});
  const ValidationReport r = ValidateTrisection(e.diagram);
  ASSERT_TRUE(r.valid());
  EXPECT_EQ(r.Parameters(), "(1; 1,1,1)");
  EXPECT_EQ(CheckAction(e.diagram, e.action).order, 9);
}

TEST(Catalog, Errors) {
  try {
    NaturalGenus1(2, {Slope{1, 0}, Slope{1, 2}, Slope{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonStandardSlopes);
  }
  try {
    ByName("no_such_diagram");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownName);
  }
}

TEST(Catalog, Q8BaseAndReductions) {
  const CatalogEntry e = Q8LinkBase();
  ASSERT_TRUE(e.voltages.has_value());
  EXPECT_EQ(e.voltages->group.order(), 8);
  EXPECT_EQ(e.diagram.marked().size(), 8u);
  std::vector<std::string> names;
  for (const auto& r : e.reductions) names.push_back(r.name);
  EXPECT_EQ(names, (std::vector<std::string>{"z2_a0_b1", "z2_a1_b0", "z2_a1_b1",
                                             "z2xz2", "q8"}));
}

}  // namespace
}  // namespace etd

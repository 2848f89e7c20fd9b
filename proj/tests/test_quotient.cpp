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
#include "oracles.hpp"

namespace etd {
namespace {

std::vector<Perm> Named(const DiagramAction& a,
                        const std::vector<std::string>& names) {
  std::vector<Perm> out;
  for (size_t i = 0; i < a.generators.size(); ++i) {
    for (const auto& n : names) {
      if (a.NameOf(i) == n) out.push_back(a.generators[i]);
    }
  }
  return out;
}

std::vector<int> ConeOrders(const QuotientResult& q) {
  std::vector<int> out;
  for (const ConePoint& c : q.cones) out.push_back(c.order);
  return out;
}

TEST(Quotient, HyperellipticS2xS2) {
  const CatalogEntry e = ByName("s2xs2_genus2");
  const QuotientResult q = Quotient(e.diagram, e.action, Named(e.action, {"tau"}));
  EXPECT_EQ(q.subgroup_order, 2);
  EXPECT_EQ(q.diagram.genus(), 0);
  EXPECT_TRUE(q.riemann_hurwitz_ok());
  EXPECT_EQ(q.cones.size(), 6u);
  // Oracle: a double cover of the sphere branched at 6 points has genus 2.
  EXPECT_EQ(oracle::RiemannHurwitzGenus(2, 0, ConeOrders(q)), 2);
  const QuotientVerdict v = QuotientIsTrisection(q);
  EXPECT_EQ(v.verdict, ManifoldVerdict::kYes);
  EXPECT_TRUE(v.report.valid());
  EXPECT_TRUE(q.induced_check.valid);
  EXPECT_EQ(q.induced_check.order, 2);
}

TEST(Quotient, NaturalGenus1RoundTrip) {
  const std::array<Slope, 3> slopes = {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}};
  const CatalogEntry base = NaturalGenus1(1, slopes);
  for (int m = 2; m <= 4; ++m) {
    const CatalogEntry e = NaturalGenus1(m, slopes);
    const QuotientResult q =
        Quotient(e.diagram, e.action, Named(e.action, {"tx", "ty"}));
    EXPECT_EQ(q.subgroup_order, m * m);
    EXPECT_TRUE(q.cones.empty());
    EXPECT_TRUE(q.riemann_hurwitz_ok());
    EXPECT_EQ(oracle::RiemannHurwitzGenus(m * m, 1, {}), 1);
    EXPECT_TRUE(IsIsomorphic(q.diagram.surface(), q.diagram.Labels(),
                             base.diagram.surface(), base.diagram.Labels()))
        << "m = " << m;
  }
}

TEST(Quotient, FullGroupsSatisfyRiemannHurwitz) {
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    if (e.action.generators.empty()) continue;
    const QuotientResult q = Quotient(e.diagram, e.action, e.action.generators);
    EXPECT_TRUE(q.riemann_hurwitz_ok()) << name;
    EXPECT_EQ(oracle::RiemannHurwitzGenus(q.subgroup_order, q.diagram.genus(),
                                          ConeOrders(q)),
              e.diagram.genus())
        << name;
  }
}

TEST(Quotient, TrivialSubgroupIsIdentity) {
  const CatalogEntry e = ByName("d6_s4");
  const QuotientResult q = Quotient(e.diagram, e.action, {});
  EXPECT_EQ(q.subgroup_order, 1);
  EXPECT_TRUE(IsIsomorphic(q.diagram.surface(), q.diagram.Labels(),
                           e.diagram.surface(), e.diagram.Labels()));
}

TEST(Quotient, NonNormalSubgroupRejected) {
  const CatalogEntry e = ByName("d6_double");
  // A reflection generates a non-normal subgroup of D6.
  bool rejected = false;
  for (size_t i = 0; i < e.action.generators.size(); ++i) {
    try {
      Quotient(e.diagram, e.action, {e.action.generators[i]});
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kNotNormal) rejected = true;
    }
  }
  EXPECT_TRUE(rejected);
}

}  // namespace
}  // namespace etd

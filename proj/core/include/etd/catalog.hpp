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

// Named diagrams with symmetry, used as fixtures and as worked examples.

#ifndef ETD_CATALOG_HPP_
#define ETD_CATALOG_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etd/cover.hpp"
#include "etd/diagram.hpp"
#include "etd/homology.hpp"
#include "etd/invariants.hpp"
#include "etd/symmetry.hpp"

namespace etd {

struct ExpectedBridge {
  int b = 0;
  std::array<int, 3> p = {0, 0, 0};
};

struct ExpectedReport {
  int genus = 0;
  std::array<int, 3> k = {0, 0, 0};
  std::optional<ExpectedBridge> bridge;
  std::optional<AbelianGroup> h1;
  int action_order = 1;

  int euler() const { return 2 + genus - k[0] - k[1] - k[2]; }
  // "(g; k1,k2,k3)", matching ValidationReport::Parameters.
  std::string Parameters() const;
};

// Voltages obtained by composing the entry's voltages with an epimorphism.
struct VoltageReduction {
  std::string name;
  VoltageAssignment voltages;
  ExpectedReport expected;  // of the lifted diagram
};

struct CatalogEntry {
  std::string name;
  ShadowDiagram diagram;
  DiagramAction action;  // no generators means the trivial action
  ExpectedReport expected;
  std::string note;  // how the diagram is built
  std::optional<VoltageAssignment> voltages;
  std::vector<VoltageReduction> reductions;
};

using Slope = std::pair<int, int>;

// Names accepted by ByName.
std::vector<std::string> CatalogNames();

// s4_genus0, cp2, cp2bar, s1xs3, s2xs2_genus2, s4_suspension_genus2.
// Throws Error(kUnknownName).
CatalogEntry Standard(const std::string& name);

// Lines of the three slopes on the torus R^2 / Z^2, each family drawn as its
// full orbit under translations by (1/m) Z^2. The action is generated by the
// translations "tx", "ty" (when m > 1) and the half-turn "rot" (when the
// slopes allow it). Throws Error(kNonStandardSlopes).
CatalogEntry NaturalGenus1(int m, const std::array<Slope, 3>& slopes);

// d4_double, d6_double, d6_s4. Throws Error(kUnknownName).
CatalogEntry Genus2StronglyMinimal(const std::string& name);

// Genus-zero shadow diagram of a two-component link of projective planes
// with quaternion voltages, and its reductions to every nontrivial quotient.
CatalogEntry Q8LinkBase();

// Any name of CatalogNames. Throws Error(kUnknownName).
CatalogEntry ByName(const std::string& name);

// The octahedron with the rotation group of the tetrahedron, centrally
// extended by a group of order 2.
PolyhedralGraphData OctahedronTetrahedral();

}  // namespace etd

#endif  // ETD_CATALOG_HPP_

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

// Homology of diagrams modulo curve families and closed-form parameter
// calculators for symmetric trisections.

#ifndef ETD_INVARIANTS_HPP_
#define ETD_INVARIANTS_HPP_

#include <array>
#include <vector>

#include "etd/cmap.hpp"
#include "etd/diagram.hpp"
#include "etd/homology.hpp"
#include "etd/symmetry.hpp"

namespace etd {

// H_1(Sigma) modulo the classes of the listed Alpha families. Throws
// Error(kMalformedColoring) when a listed family is not a valid cut system.
AbelianGroup H1ModCurves(const ShadowDiagram& d,
                         const std::vector<int>& families);

// A graph on the sphere with a group acting on it by automorphisms, and the
// order of the central extension lifting the action.
struct PolyhedralGraphData {
  CombMap graph;
  DiagramAction action;
  int center_order = 1;  // |C|; the extension has order |G| * |C|
  // When set, each inverted edge is treated as replaced by a pair of
  // parallel edges that the inverting elements swap. The edge orbit count is
  // unchanged by that replacement.
  bool bigons_for_inversions = false;
};

struct Pu3Parameters {
  int genus = 0;
  std::array<int, 3> k = {0, 0, 0};
  int group_order = 0;      // |G|
  int extension_order = 0;  // |G~|
  int vertices = 0;         // |V(Gamma_1)|
  int edge_orbits = 0;      // |O_E|
  int euler() const { return 2 + genus - k[0] - k[1] - k[2]; }
};

// g = |G~| |O_E| + 1, k = (0, |V| - 1, g - |V|). Throws Error(kNotSphere),
// Error(kEdgeInversionUnresolved), or the action errors of CheckAction.
Pu3Parameters PU3Parameters(const PolyhedralGraphData& p);

struct GenusBound {
  bool holds = false;
  int quotient_genus = -1;  // mu with genus = 1 + |G| (mu - 1)
};

// A free action of G on a genus g handlebody has quotient a handlebody of
// genus mu with g = 1 + |G| (mu - 1). Holds when mu is a nonnegative
// integer, and reports it.
GenusBound FreeActionGenusBound(int group_order, int genus);

}  // namespace etd

#endif  // ETD_INVARIANTS_HPP_

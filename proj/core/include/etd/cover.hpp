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

// Regular branched covers of diagrams from voltage assignments.
//
// A lifted dart is a pair (d, g) with index d * |G| + g. Edges lift by
//   E~(d, g) = (E d, g * edge[d])
// and rotations by
//   R~(d, g) = (R d, g * corner[d]),
// so the product of corner voltages around a vertex is the meridian of that
// vertex, and a vertex whose meridian has order m lifts to |G| / m vertices
// of m times the valence. The deck group acts by (d, g) -> (d, k * g).

#ifndef ETD_COVER_HPP_
#define ETD_COVER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etd/diagram.hpp"
#include "etd/group.hpp"
#include "etd/symmetry.hpp"

namespace etd {

struct VoltageAssignment {
  FiniteGroup group;
  std::vector<int> edge;    // per dart; edge[E d] = edge[d]^-1
  std::vector<int> corner;  // per dart; empty means identity everywhere
  // Declared meridians keyed by the vertex representative (smallest dart).
  // Marked vertices may carry any element; unmarked vertices only when
  // listed in `cones`.
  std::map<Dart, int> meridians;
  std::vector<Dart> cones;  // unmarked vertices allowed to branch

  // Edge voltages plus meridians, realized by placing each meridian on the
  // corner after the representative dart of its vertex.
  static VoltageAssignment FromEdges(const ShadowDiagram& d, FiniteGroup group,
                                     std::vector<int> edge,
                                     std::map<Dart, int> meridians);

  int CornerAt(Dart d) const { return corner.empty() ? 0 : corner[d]; }
};

// Product of corner voltages around the vertex, starting at its
// representative.
int VertexVoltage(const CombMap& m, const VoltageAssignment& v, Dart rep);
// Net voltage of the face walk starting at d.
int FaceVoltage(const CombMap& m, const VoltageAssignment& v, Dart d);

// Throws Error(kVoltageIncompatible) or Error(kMeridianMismatch).
void CheckVoltages(const ShadowDiagram& d, const VoltageAssignment& v);

// The diagram with each shadow family thickened: the boundary of a regular
// neighborhood of the Shadow(i) arcs is drawn as new Alpha(i) edges. Curves
// of the original Alpha(i) are kept. Diagrams without shadows are returned
// unchanged. When `v` is given, the voltages are extended to the new darts so
// that every new face has trivial net voltage.
struct Thickening {
  ShadowDiagram diagram;
  int num_original_darts = 0;  // original darts keep their indices
};
Thickening ThickenShadows(const ShadowDiagram& d,
                          VoltageAssignment* v = nullptr);

struct BranchLift {
  Dart base_vertex = 0;  // representative in the base
  bool marked = false;
  int order = 1;         // order of the meridian
  int lifted_count = 1;  // |G| / order
};

struct ExpectedLift {
  int euler = 0;       // chi of the whole cover
  int components = 1;  // |G| / |H| for the subgroup H of closed-walk voltages
  int genus = 0;       // per component
  std::vector<BranchLift> branches;  // vertices with nontrivial meridian
};

// Riemann-Hurwitz count without building the cover.
ExpectedLift ExpectedLiftParameters(const ShadowDiagram& d,
                                    const VoltageAssignment& v);

struct CoverResult {
  // The base after thickening; the cover is built over this diagram.
  ShadowDiagram base;
  VoltageAssignment base_voltages;
  ShadowDiagram lifted;
  DiagramAction deck;
  // Per lifted dart: the base dart and the group element.
  std::vector<std::pair<Dart, int>> projection;
  std::vector<BranchLift> branches;
  ExpectedLift expected;
  // Set when the voltages do not generate the group; the lift is then the
  // disjoint union of `components.size()` copies.
  bool disconnected = false;
  std::vector<ShadowDiagram> components;
  ActionCheck deck_check;
};

// Throws Error(kVoltageIncompatible), Error(kMeridianMismatch),
// Error(kNotConnected) when the base is disconnected.
CoverResult DerivedCover(const ShadowDiagram& d, const VoltageAssignment& v);

// Gauge transform making a spanning tree of the dart graph (E and R moves
// from dart 0) carry identity voltages. The derived map is unchanged up to
// isomorphism.
VoltageAssignment GaugeFix(const ShadowDiagram& d, const VoltageAssignment& v);

// A generating set of the group, chosen greedily in index order.
std::vector<int> GreedyGenerators(const FiniteGroup& g);

// Composes the voltages with a homomorphism onto `target`.
VoltageAssignment PushForward(const VoltageAssignment& v,
                              const FiniteGroup& target,
                              const std::vector<int>& image);

// Edge voltages making every face trivial for the given meridians. Edges in
// `fixed` keep their value (and its inverse on the opposite dart). A spanning
// tree of the remaining edges gets the identity, the 2g edges outside both
// the tree and a dual spanning tree get the identity, and the dual tree is
// then peeled from its leaves. Throws Error(kVoltageIncompatible) when the
// last face of a component cannot be closed.
VoltageAssignment SolveEdgeVoltages(const ShadowDiagram& d,
                                    const FiniteGroup& group,
                                    const std::map<Dart, int>& meridians,
                                    const std::map<Dart, int>& fixed = {},
                                    const std::vector<Dart>& cones = {});

// Holonomy of a closed walk given as darts, each leaving the vertex reached
// by the previous one. Consecutive darts are joined by turning
// counterclockwise. The lift of the walk closes up exactly when the result is
// the identity.
int CurveHolonomy(const CombMap& m, const VoltageAssignment& v,
                  const std::vector<Dart>& darts);

// Lifts an automorphism f of the base map to the derived map as
// (d, a) -> (f d, a h(d)), which commutes with the deck action. Returns the
// lifted permutation on indices d * |G| + a, or nothing when no lift of this
// form exists.
std::optional<Perm> LiftAutomorphism(const CombMap& base,
                                     const VoltageAssignment& v,
                                     const Perm& f);

}  // namespace etd

#endif  // ETD_COVER_HPP_

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

// Combinatorial maps (rotation systems) for oriented surfaces.
//
// A map on n darts is given by two permutations. The edge pairing E is a
// fixed-point-free involution joining the two halves of every edge, and the
// rotation R sends a dart to its counterclockwise successor around its
// vertex. Faces are the orbits of the face walk phi = R^-1 o E. The corner
// between d and R(d) lies in the face containing d.
//
// Surfaces with boundary are represented by closing every boundary circle
// with a face that is flagged as a hole. Holes are excluded from the face
// count of the realized surface.

#ifndef ETD_CMAP_HPP_
#define ETD_CMAP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace etd {

using Dart = int;
using Perm = std::vector<int>;

enum class CellKind { kVertex = 0, kEdge = 1, kFace = 2 };

// A vertex, edge or face named by the smallest dart of its orbit.
struct CellId {
  CellKind kind = CellKind::kVertex;
  Dart rep = 0;
  auto operator<=>(const CellId&) const = default;
};

std::string ToString(const CellId& cell);

// Returns true iff p is a permutation of {0, ..., p.size() - 1}.
bool IsPermutation(const Perm& p);
Perm Inverse(const Perm& p);
// (a * b)(x) = a(b(x)).
Perm Compose(const Perm& a, const Perm& b);
Perm IdentityPerm(int n);

class CombMap {
 public:
  CombMap() = default;

  // Validates the permutations and caches the orbit tables. Throws
  // Error(kNotPermutation), Error(kNotInvolution) or Error(kDanglingDart).
  static CombMap Build(Perm edge_pairing, Perm rotation);

  // Returns a copy in which the faces containing the listed darts are holes.
  CombMap WithHoles(const std::vector<Dart>& hole_darts) const;

  int num_darts() const { return static_cast<int>(e_.size()); }
  Dart E(Dart d) const { return e_[d]; }
  Dart R(Dart d) const { return r_[d]; }
  Dart Rinv(Dart d) const { return rinv_[d]; }
  Dart Phi(Dart d) const { return rinv_[e_[d]]; }
  const Perm& edge_pairing() const { return e_; }
  const Perm& rotation() const { return r_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  // Counts every face walk orbit, holes included.
  int num_face_orbits() const { return static_cast<int>(faces_.size()); }
  // Counts faces of the realized surface (holes excluded).
  int num_faces() const { return num_face_orbits() - num_holes(); }
  int num_holes() const { return num_holes_; }
  bool is_closed() const { return num_holes_ == 0; }

  int vertex_index(Dart d) const { return vertex_of_[d]; }
  int edge_index(Dart d) const { return edge_of_[d]; }
  int face_index(Dart d) const { return face_of_[d]; }
  bool is_hole_face(int face) const { return hole_[face] != 0; }
  bool is_hole_dart(Dart d) const { return hole_[face_of_[d]] != 0; }

  // Orbits listed from their smallest dart, following the generating
  // permutation. Orbits are sorted by smallest dart.
  const std::vector<std::vector<Dart>>& vertex_orbits() const {
    return vertices_;
  }
  const std::vector<std::vector<Dart>>& edge_orbits() const { return edges_; }
  const std::vector<std::vector<Dart>>& face_orbits() const { return faces_; }

  CellId Cell(CellKind kind, Dart d) const;
  // Throws Error(kUnknownCell) if the cell is not a canonical cell of this map.
  void CheckCell(const CellId& cell) const;
  std::vector<Dart> Orbit(const CellId& cell) const;

  int EulerCharacteristic() const {
    return num_vertices() - num_edges() + num_faces();
  }
  int num_components() const { return num_components_; }
  int component_of(Dart d) const { return component_of_[d]; }
  bool is_connected() const { return num_components_ == 1; }
  // Throws Error(kNotClosed) or Error(kNotConnected).
  int Genus() const;

  bool operator==(const CombMap& other) const {
    return e_ == other.e_ && r_ == other.r_ && hole_darts_ == other.hole_darts_;
  }

  // Sorted smallest darts of the hole faces.
  const std::vector<Dart>& hole_reps() const { return hole_darts_; }

 private:
  void ComputeTables();

  Perm e_, r_, rinv_;
  std::vector<int> vertex_of_, edge_of_, face_of_, component_of_;
  std::vector<std::vector<Dart>> vertices_, edges_, faces_;
  std::vector<char> hole_;
  std::vector<Dart> hole_darts_;
  int num_holes_ = 0;
  int num_components_ = 0;
};

// Per-component summary of a surface with boundary.
struct ComponentSummary {
  int euler = 0;
  int boundary_circles = 0;
  int genus = 0;
  std::vector<Dart> darts;
};

std::vector<ComponentSummary> Components(const CombMap& map);

struct CutResult {
  // The cut surface. Darts 0..n-1 are the original darts; darts n.. are the
  // second copies of the cut edges and all of them lie in hole faces.
  CombMap surface;
  int num_original_darts = 0;
  // For every dart of the cut surface, the original dart it descends from:
  // itself for original darts, and the dart at the same end of the cut edge
  // for the copies.
  std::vector<Dart> origin;
  std::vector<ComponentSummary> components;
};

// Slices the map along the listed edges. Throws Error(kUnknownCell).
CutResult CutAlong(const CombMap& map, const std::vector<CellId>& edges);
// Glues the boundary produced by CutAlong back together.
CombMap Reglue(const CutResult& cut);

struct Subdivision {
  CombMap map;
  // origin[d] = d for original darts. A new dart sits at the midpoint of an
  // old edge and origin[d] is the old dart it is paired with.
  std::vector<Dart> origin;
  int num_original_darts = 0;
  // Dart of the new map paired with original dart d, or -1.
  std::vector<Dart> midpoint_dart;
};

// Inserts a valence-two vertex in every listed edge. Throws
// Error(kUnknownCell).
Subdivision SubdivideEdges(const CombMap& map, const std::vector<CellId>& edges);

// Relabels darts by d -> pi[d].
CombMap Relabel(const CombMap& map, const Perm& pi);

struct CanonicalForm {
  // Encoding of the labeled map; equal codes mean isomorphic labeled maps.
  std::vector<std::int64_t> code;
  // canonical_index[d] is the position of dart d in the canonical order.
  std::vector<int> canonical_index;
};

// Breadth-first canonical labeling, minimized over start darts. labels may be
// empty, meaning all darts carry the same label.
CanonicalForm Canonicalize(const CombMap& map,
                           const std::vector<std::int64_t>& labels = {});

// Returns pi with pi(d1) = d2 such that pi conjugates the structure and
// preserves labels, or nothing.
std::optional<Perm> FindIsomorphism(const CombMap& m1,
                                    const std::vector<std::int64_t>& labels1,
                                    const CombMap& m2,
                                    const std::vector<std::int64_t>& labels2);

bool IsIsomorphic(const CombMap& m1, const std::vector<std::int64_t>& labels1,
                  const CombMap& m2, const std::vector<std::int64_t>& labels2);

// The automorphism of a connected map sending dart `from` to dart `to`, if
// one exists. It is unique when it exists.
std::optional<Perm> AutomorphismFrom(const CombMap& map, Dart from, Dart to);

}  // namespace etd

#endif  // ETD_CMAP_HPP_

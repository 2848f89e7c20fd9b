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

// Finite groups acting on diagrams by color-preserving map automorphisms.

#ifndef ETD_SYMMETRY_HPP_
#define ETD_SYMMETRY_HPP_

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "etd/cmap.hpp"
#include "etd/diagram.hpp"
#include "etd/error.hpp"

namespace etd {

struct PermHash {
  size_t operator()(const Perm& p) const;
};

// Generators of an action, as permutations of darts.
struct DiagramAction {
  std::vector<Perm> generators;
  std::vector<std::string> names;

  std::string NameOf(size_t i) const {
    return i < names.size() ? names[i] : "g" + std::to_string(i);
  }
};

// The elements generated by an action, identity first, in breadth-first
// order of words in the generators.
class GroupClosure {
 public:
  // Throws Error(kClosureCapExceeded).
  GroupClosure(const DiagramAction& action, int degree, int cap = 100000);

  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  const std::string& word(int i) const { return words_[i]; }
  // Index of a permutation, or -1.
  int IndexOf(const Perm& p) const;
  int Mul(int a, int b) const;  // a after b
  int Inv(int a) const;
  int ElementOrder(int a) const;
  // Elements generated by the listed elements.
  std::vector<int> Generate(const std::vector<int>& gens) const;
  std::vector<std::vector<int>> ConjugacyClasses() const;
  bool IsNormal(const std::vector<int>& subgroup) const;

 private:
  std::vector<Perm> elements_;
  std::vector<std::string> words_;
  std::unordered_map<Perm, int, PermHash> index_;
};

struct ActionCheck {
  bool valid = false;
  ErrorCode code = ErrorCode::kInternal;
  std::string violation;
  int order = 0;
  std::string structure;  // cyclic, dihedral, quaternion, abelian, other
  std::map<int, int> element_orders;  // element order -> count
};

// Verifies that every element is an orientation-preserving automorphism of
// the map that preserves colors and the marked set, and that the action is
// faithful. Never throws; see ActionCheck.
ActionCheck CheckAction(const ShadowDiagram& d, const DiagramAction& action,
                        int cap = 100000);
// As CheckAction but throws the first violation as an Error.
GroupClosure RequireValidAction(const ShadowDiagram& d,
                                const DiagramAction& action, int cap = 100000);

std::string StructureHint(const GroupClosure& g);

// Orbits of the cells of one kind, each sorted, listed by smallest cell.
std::vector<std::vector<CellId>> Orbits(const GroupClosure& g,
                                        const CombMap& map, CellKind kind);
// Elements fixing the cell (setwise).
std::vector<int> Stabilizer(const GroupClosure& g, const CombMap& map,
                            const CellId& cell);
// Maps a cell through a group element.
CellId ApplyToCell(const Perm& element, const CombMap& map, const CellId& c);

struct FixedCell {
  CellId cell;
  int local_order = 1;
};

struct ElementSingularity {
  int element = 0;
  int order = 1;
  std::vector<FixedCell> vertices;
  std::vector<FixedCell> edge_midpoints;
  std::vector<FixedCell> faces;
  int fixed_points() const {
    return static_cast<int>(vertices.size() + edge_midpoints.size() +
                            faces.size());
  }
};

struct SingularReport {
  std::vector<ElementSingularity> elements;  // nonidentity elements
  std::vector<std::vector<int>> conjugacy_classes;
  std::vector<int> class_fixed_points;  // per class, per element
  // Cells with nontrivial stabilizer and the stabilizer order.
  std::vector<FixedCell> singular_cells;
  std::vector<int> hyperelliptic;  // involutions fixing 2g + 2 points
};

SingularReport SingularLocus(const ShadowDiagram& d, const GroupClosure& g);

}  // namespace etd

#endif  // ETD_SYMMETRY_HPP_

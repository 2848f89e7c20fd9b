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

// Integer linear algebra: Smith normal form, finitely generated abelian
// groups, and first homology of closed surface maps.

#ifndef ETD_HOMOLOGY_HPP_
#define ETD_HOMOLOGY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "etd/cmap.hpp"

namespace etd {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithResult {
  IntMatrix d;  // diagonal, same shape as the input
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors
};

// Computes U * M * V = D with D diagonal and each diagonal entry dividing
// the next. Pivots are chosen by smallest magnitude, ties broken by row and
// then column index. Throws Error(kInternal) on 64-bit overflow.
SmithResult SmithNormalForm(const IntMatrix& m, int cols,
                            bool want_transforms = true);

IntMatrix Multiply(const IntMatrix& a, const IntMatrix& b, int inner,
                   int cols);

struct AbelianGroup {
  int rank = 0;
  // Invariant factors greater than one, each dividing the next.
  std::vector<std::int64_t> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  std::string ToString() const;
  bool operator==(const AbelianGroup&) const = default;
};

// Z^cols modulo the span of the given rows.
AbelianGroup Cokernel(const IntMatrix& rows, int cols);

// Integer 1-chain over the edge basis of a map. Edge e is oriented from the
// vertex of its smallest dart.
std::vector<std::int64_t> ChainOfDarts(const CombMap& map,
                                       const std::vector<Dart>& darts);

// H_1 of a closed connected map, coordinatized by a tree-cotree
// decomposition: the classes of the fundamental cycles of the 2g edges in
// neither the spanning tree nor the dual spanning tree form a basis.
class SurfaceHomology {
 public:
  explicit SurfaceHomology(const CombMap& map);

  int rank() const { return static_cast<int>(generators_.size()); }
  // Coordinates of the class of a 1-cycle given over the edge basis.
  std::vector<std::int64_t> ClassOf(std::vector<std::int64_t> chain) const;
  std::vector<std::int64_t> ClassOfDarts(const std::vector<Dart>& darts) const;

 private:
  const CombMap* map_;
  std::vector<int> generators_;  // edge indices
  // Dual tree faces in breadth-first order with their parent edge and the
  // sign of that edge in the face boundary.
  std::vector<int> face_order_;
  std::vector<int> parent_edge_;
  std::vector<int> parent_sign_;
};

// H_1 of a closed map computed directly from the boundary matrices by Smith
// normal form. Independent of SurfaceHomology; intended for small maps.
AbelianGroup HomologyOfMap(const CombMap& map);

}  // namespace etd

#endif  // ETD_HOMOLOGY_HPP_

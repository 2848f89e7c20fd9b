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

// Quotients of diagrams by normal subgroups of an action.

#ifndef ETD_QUOTIENT_HPP_
#define ETD_QUOTIENT_HPP_

#include <string>
#include <vector>

#include "etd/diagram.hpp"
#include "etd/symmetry.hpp"

namespace etd {

struct ConePoint {
  CellId cell;  // vertex or face of the quotient surface
  int order = 1;
};

struct QuotientResult {
  ShadowDiagram diagram;
  std::vector<ConePoint> cones;
  // The action of G/N on the quotient, one generator per generator of G.
  DiagramAction induced;
  // The input after equivariant subdivision of N-inverted edges, and the
  // action extended to it. Identical to the input when nothing is inverted.
  ShadowDiagram subdivided;
  DiagramAction subdivided_action;
  std::vector<CellId> subdivided_edges;  // edges of the input
  // projection[d] is the quotient dart of dart d of `subdivided`.
  std::vector<Dart> projection;
  int subgroup_order = 1;
  // chi(Sigma) = |N| chi(Sigma/N) - sum over cones of (|N|/m)(m - 1).
  int euler_upstairs = 0;
  int euler_predicted = 0;
  bool riemann_hurwitz_ok() const { return euler_upstairs == euler_predicted; }
  ActionCheck induced_check;
};

// Quotient by the subgroup generated by the listed elements of the action.
// Throws Error(kNotValidAction), Error(kNotNormal).
QuotientResult Quotient(const ShadowDiagram& d, const DiagramAction& action,
                        const std::vector<Perm>& subgroup_generators);

enum class ManifoldVerdict { kNo = 0, kCertified = 1, kYes = 2 };
std::string ToString(ManifoldVerdict v);

struct QuotientVerdict {
  ManifoldVerdict verdict = ManifoldVerdict::kNo;
  ValidationReport report;
};

QuotientVerdict QuotientIsTrisection(const QuotientResult& q,
                                     const ValidationOptions& options = {});

}  // namespace etd

#endif  // ETD_QUOTIENT_HPP_

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

// Line-oriented text formats for diagrams and triangulations.
//
// A diagram file starts with "etd-diagram 1" and ends with "end". Each other
// line is a key followed by whitespace-separated values; lines starting with
// '#' and blank lines are ignored. Keys, in the order they are written:
//
//   name <word>                    note <free text>
//   darts <n>
//   edge_pairing <n integers>      rotation <n integers>
//   colors <one tag per edge>      edges ordered by smallest dart;
//                                  tags x, a1..a3, s1..s3
//   marked <vertex representatives>
//   generator <name> <n integers>  repeated, one per action generator
//   group <order> <element names>  element 0 is the identity
//   group_row <order integers>     repeated, one per element
//   edge_voltages <n names>        corner_voltages <n names>
//   meridian <dart> <name>         repeated
//   voltage_cones <darts>
//   cone_point <vertex|face> <representative> <order>   repeated
//   expect <g> <k1> <k2> <k3>      expect_bridge <b> <p1> <p2> <p3>
//   expect_h1 <rank> [torsion...]  expect_order <n>
//   lift_expect <g> <k1> <k2> <k3>
//
// A triangulation file starts with "etd-triangulation 1" and uses the keys
//
//   name <word>          vertices <n>
//   pentachoron <5 vertices>          repeated
//   gluing <p> <f> <q> <g>            repeated; facet f omits vertex f
//   generator <name> <n integers>     repeated
//   surface <name>                    starts a surface
//   triangle <3 vertices>             repeated, added to the last surface
//
// Unknown keys are rejected. Writing a parsed file reproduces it byte for
// byte when it was itself written by this module.

#ifndef ETD_IO_HPP_
#define ETD_IO_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "etd/catalog.hpp"
#include "etd/cover.hpp"
#include "etd/diagram.hpp"
#include "etd/quotient.hpp"
#include "etd/symmetry.hpp"
#include "etd/triang.hpp"

namespace etd {

inline constexpr int kFormatVersion = 1;

struct DiagramFile {
  std::string name;
  std::string note;
  ShadowDiagram diagram;
  DiagramAction action;
  std::optional<VoltageAssignment> voltages;
  std::vector<ConePoint> cones;
  std::optional<ExpectedReport> expect;
  // Expected (g; k) of the derived cover, used by `lift --check-expected`.
  std::optional<ExpectedReport> lift_expect;
};

// Throws Error(kParse) with a line number. Errors raised while building the
// map or the group are rethrown as Error(kParse).
DiagramFile ParseDiagram(const std::string& text);
std::string WriteDiagram(const DiagramFile& file);

GTriangulation ParseTriangulation(const std::string& text);
std::string WriteTriangulation(const GTriangulation& k);

// Reads a whole file. Throws Error(kParse) when it cannot be opened.
std::string ReadText(const std::string& path);
void WriteText(const std::string& path, const std::string& text);

// The file of a catalog entry, and one file per voltage reduction named
// "<entry>.<reduction>" carrying the reduced voltages and lift expectation.
DiagramFile FileOf(const CatalogEntry& entry);
std::vector<DiagramFile> ReductionFiles(const CatalogEntry& entry);

}  // namespace etd

#endif  // ETD_IO_HPP_

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

// Shadow trisection diagrams: a closed surface map whose edges are colored by
// three cut systems, three shadow arc families and scaffold, together with a
// set of marked vertices (bridge points).
//
// Families are numbered 1, 2, 3. The Heegaard pair (i, i+1) is stored at
// index i-1, so k_1 comes from (1, 2), k_2 from (2, 3) and k_3 from (3, 1).

#ifndef ETD_DIAGRAM_HPP_
#define ETD_DIAGRAM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etd/cmap.hpp"
#include "etd/homology.hpp"

namespace etd {

enum class ColorKind { kScaffold = 0, kAlpha = 1, kShadow = 2 };

struct Color {
  ColorKind kind = ColorKind::kScaffold;
  int family = 0;  // 1..3 for curves and shadows, 0 for scaffold

  static Color Scaffold() { return {}; }
  static Color Alpha(int i) { return {ColorKind::kAlpha, i}; }
  static Color Shadow(int i) { return {ColorKind::kShadow, i}; }
  bool is_alpha(int i) const { return kind == ColorKind::kAlpha && family == i; }
  bool is_shadow(int i) const {
    return kind == ColorKind::kShadow && family == i;
  }
  // Dense code: 0 scaffold, 1..3 alpha, 4..6 shadow.
  int code() const;
  static Color FromCode(int code);
  std::string Tag() const;  // "x", "a1".."a3", "s1".."s3"
  static std::optional<Color> FromTag(const std::string& tag);
  auto operator<=>(const Color&) const = default;
};

enum class VertexKind { kScaffold, kCrossing, kBridgePoint };

class ShadowDiagram {
 public:
  ShadowDiagram() = default;
  // color is per dart; both darts of an edge must agree. marked lists any
  // dart of each marked vertex. Throws Error(kMalformedColoring) when the
  // per-edge agreement fails or the surface has boundary.
  ShadowDiagram(CombMap surface, std::vector<Color> color,
                const std::vector<Dart>& marked);

  const CombMap& surface() const { return surface_; }
  const std::vector<Color>& colors() const { return color_; }
  Color color(Dart d) const { return color_[d]; }
  // Sorted vertex representatives of the marked vertices.
  const std::vector<Dart>& marked() const { return marked_; }
  bool is_marked_vertex(int vertex_index) const {
    return marked_flag_[vertex_index] != 0;
  }
  bool is_marked_dart(Dart d) const {
    return marked_flag_[surface_.vertex_index(d)] != 0;
  }
  VertexKind vertex_kind(int vertex_index) const;
  int genus() const { return surface_.Genus(); }

  bool HasShadows() const;
  std::vector<CellId> EdgesOf(Color c) const;
  // Per-dart labels for canonical forms: color code and marked flag.
  std::vector<std::int64_t> Labels() const;

  bool operator==(const ShadowDiagram& other) const {
    return surface_ == other.surface_ && color_ == other.color_ &&
           marked_ == other.marked_;
  }

 private:
  CombMap surface_;
  std::vector<Color> color_;
  std::vector<Dart> marked_;
  std::vector<char> marked_flag_;
};

// Relabels darts of a diagram by d -> pi[d].
ShadowDiagram RelabelDiagram(const ShadowDiagram& d, const Perm& pi);

// Throws Error(kMalformedColoring) or Error(kArcOutsideComplementaryDisk)
// when the local coloring rules fail.
void CheckWellFormed(const ShadowDiagram& d);

// A closed curve or an arc, as the darts traversed in order. For a closed
// curve darts[k] leaves the vertex reached by darts[k-1].
struct CurvePath {
  std::vector<Dart> darts;
  bool closed = true;
};

// The simple closed curves of Alpha(i). Throws Error(kMalformedColoring).
std::vector<CurvePath> CurvesOf(const ShadowDiagram& d, int i);

struct CutSystemVerdict {
  bool valid = false;
  int curves = 0;
  bool minimal = false;  // exactly g curves and a connected complement
  int complementary_components = 0;
  std::string reason;
};

CutSystemVerdict ValidateCutSystem(const ShadowDiagram& d, int i);

// One integer vector per Alpha(i) curve over the edge basis.
std::vector<std::vector<std::int64_t>> CurveClasses(const ShadowDiagram& d,
                                                    int i);

enum class HeegaardVerdict { kFailed = 0, kHomologyCertified = 1, kVerified = 2 };
std::string ToString(HeegaardVerdict v);

struct HeegaardReport {
  int i = 0, j = 0;
  HeegaardVerdict verdict = HeegaardVerdict::kFailed;
  int k = 0;
  AbelianGroup quotient;  // H_1(Sigma) / <alpha_i, alpha_j>
  int search_nodes = 0;
  std::string note;
};

struct ValidationOptions {
  // Node cap for the standard-pattern search. Negative means: read
  // ETD_TIER2_BUDGET, falling back to 10^4.
  int tier2_budget = -1;
};

int ResolveTier2Budget(const ValidationOptions& options);

HeegaardReport ValidateHeegaardPair(const ShadowDiagram& d, int i, int j,
                                    const ValidationOptions& options = {});

struct BridgeData {
  int b = 0;
  std::array<int, 3> p = {0, 0, 0};
  int euler_loops = 0;    // p_1 + p_2 + p_3 - b
  int euler_complex = 0;  // vertices - arcs + patches of the traced surface
};

struct ShadowReport {
  bool valid = true;
  std::string reason;
  std::optional<BridgeData> bridge;
};

ShadowReport ValidateShadow(const ShadowDiagram& d);

struct ValidationReport {
  bool well_formed = false;
  std::string error;
  int genus = -1;
  std::array<CutSystemVerdict, 3> cut;
  std::array<HeegaardReport, 3> pairs;
  ShadowReport shadow;
  std::optional<int> euler_x;
  std::optional<AbelianGroup> h1_x;

  // True when every pair is at least homology certified and shadows pass.
  bool valid() const;
  HeegaardVerdict weakest() const;
  std::array<int, 3> k() const {
    return {pairs[0].k, pairs[1].k, pairs[2].k};
  }
  // "(g; k1,k2,k3)".
  std::string Parameters() const;
};

ValidationReport ValidateTrisection(const ShadowDiagram& d,
                                    const ValidationOptions& options = {});

}  // namespace etd

#endif  // ETD_DIAGRAM_HPP_

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

#include "etd/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "etd/error.hpp"

namespace etd {

int Color::code() const {
  switch (kind) {
    case ColorKind::kScaffold: return 0;
    case ColorKind::kAlpha: return family;
    case ColorKind::kShadow: return 3 + family;
  }
  return 0;
}

Color Color::FromCode(int code) {
  if (code <= 0) return Scaffold();
  if (code <= 3) return Alpha(code);
  return Shadow(code - 3);
}

std::string Color::Tag() const {
  switch (kind) {
    case ColorKind::kScaffold: return "x";
    case ColorKind::kAlpha: return "a" + std::to_string(family);
    case ColorKind::kShadow: return "s" + std::to_string(family);
  }
  return "x";
}

std::optional<Color> Color::FromTag(const std::string& tag) {
  if (tag == "x") return Scaffold();
  if (tag.size() == 2 && tag[1] >= '1' && tag[1] <= '3') {
    const int i = tag[1] - '0';
    if (tag[0] == 'a') return Alpha(i);
    if (tag[0] == 's') return Shadow(i);
  }
  return std::nullopt;
}

ShadowDiagram::ShadowDiagram(CombMap surface, std::vector<Color> color,
                             const std::vector<Dart>& marked)
    : surface_(std::move(surface)), color_(std::move(color)) {
  if (static_cast<int>(color_.size()) != surface_.num_darts()) {
    throw Error(ErrorCode::kMalformedColoring, "color table has wrong size");
  }
  if (!surface_.is_closed()) {
    throw Error(ErrorCode::kMalformedColoring, "diagram surface has boundary");
  }
  for (Dart d = 0; d < surface_.num_darts(); ++d) {
    if (color_[d] != color_[surface_.E(d)]) {
      throw Error(ErrorCode::kMalformedColoring,
                  "darts of edge " + std::to_string(d) + " differ in color");
    }
    const Color c = color_[d];
    if (c.kind != ColorKind::kScaffold && (c.family < 1 || c.family > 3)) {
      throw Error(ErrorCode::kMalformedColoring, "family index out of range");
    }
  }
  marked_flag_.assign(surface_.num_vertices(), 0);
  std::set<Dart> reps;
  for (Dart d : marked) {
    if (d < 0 || d >= surface_.num_darts()) {
      throw Error(ErrorCode::kUnknownCell, "marked dart out of range");
    }
    reps.insert(surface_.Cell(CellKind::kVertex, d).rep);
    marked_flag_[surface_.vertex_index(d)] = 1;
  }
  marked_.assign(reps.begin(), reps.end());
}

VertexKind ShadowDiagram::vertex_kind(int v) const {
  if (marked_flag_[v]) return VertexKind::kBridgePoint;
  std::set<int> colors;
  for (Dart d : surface_.vertex_orbits()[v]) {
    if (color_[d].kind != ColorKind::kScaffold) colors.insert(color_[d].code());
  }
  return colors.size() >= 2 ? VertexKind::kCrossing : VertexKind::kScaffold;
}

bool ShadowDiagram::HasShadows() const {
  return std::any_of(color_.begin(), color_.end(), [](const Color& c) {
    return c.kind == ColorKind::kShadow;
  });
}

std::vector<CellId> ShadowDiagram::EdgesOf(Color c) const {
  std::vector<CellId> out;
  for (const auto& orbit : surface_.edge_orbits()) {
    if (color_[orbit[0]] == c) out.push_back({CellKind::kEdge, orbit[0]});
  }
  return out;
}

std::vector<std::int64_t> ShadowDiagram::Labels() const {
  std::vector<std::int64_t> labels(surface_.num_darts());
  for (Dart d = 0; d < surface_.num_darts(); ++d) {
    labels[d] = color_[d].code() * 2 + (is_marked_dart(d) ? 1 : 0);
  }
  return labels;
}

ShadowDiagram RelabelDiagram(const ShadowDiagram& d, const Perm& pi) {
  std::vector<Color> color(d.colors().size());
  for (Dart x = 0; x < d.surface().num_darts(); ++x) color[pi[x]] = d.color(x);
  std::vector<Dart> marked;
  for (Dart m : d.marked()) marked.push_back(pi[m]);
  return ShadowDiagram(Relabel(d.surface(), pi), std::move(color), marked);
}

void CheckWellFormed(const ShadowDiagram& d) {
  const CombMap& m = d.surface();
  std::array<bool, 4> shadow_present = {false, false, false, false};
  for (const Color& c : d.colors()) {
    if (c.kind == ColorKind::kShadow) shadow_present[c.family] = true;
  }
  for (int v = 0; v < m.num_vertices(); ++v) {
    const auto& orbit = m.vertex_orbits()[v];
    std::array<int, 7> count = {0, 0, 0, 0, 0, 0, 0};
    for (Dart x : orbit) ++count[d.color(x).code()];
    const std::string where = "vertex " + std::to_string(orbit[0]);
    for (int i = 1; i <= 3; ++i) {
      if (count[i] > 0 && count[3 + i] > 0) {
        throw Error(ErrorCode::kArcOutsideComplementaryDisk,
                    "shadow " + std::to_string(i) + " meets its own cut " +
                        "system at " + where);
      }
    }
    if (d.is_marked_vertex(v)) {
      for (int i = 1; i <= 3; ++i) {
        if (count[i] > 0) {
          throw Error(ErrorCode::kMalformedColoring,
                      "bridge point on a cut curve at " + where);
        }
        if (shadow_present[i] && count[3 + i] == 0) {
          throw Error(ErrorCode::kMalformedColoring,
                      "bridge point without a shadow " + std::to_string(i) +
                          " end at " + where);
        }
      }
      continue;
    }
    std::vector<int> present;
    for (int c = 1; c <= 6; ++c) {
      if (count[c] == 0) continue;
      if (count[c] != 2) {
        throw Error(ErrorCode::kMalformedColoring,
                    Color::FromCode(c).Tag() + " has valence " +
                        std::to_string(count[c]) + " at " + where);
      }
      present.push_back(c);
    }
    if (present.size() > 2) {
      throw Error(ErrorCode::kMalformedColoring,
                  "more than two curve colors at " + where);
    }
    if (present.size() == 2) {
      std::vector<int> seq;
      for (Dart x : orbit) {
        if (d.color(x).code() != 0) seq.push_back(d.color(x).code());
      }
      if (seq[0] == seq[1] || seq[1] == seq[2]) {
        throw Error(ErrorCode::kMalformedColoring,
                    "curves meet without crossing at " + where);
      }
    }
  }
}

namespace {

// The other dart of color c at the vertex of x.
Dart OtherAtVertex(const ShadowDiagram& d, Dart x, Color c) {
  for (Dart y : d.surface().vertex_orbits()[d.surface().vertex_index(x)]) {
    if (y != x && d.color(y) == c) return y;
  }
  throw Error(ErrorCode::kMalformedColoring,
              "curve ends at vertex " + std::to_string(x));
}

struct Arc {
  std::vector<Dart> darts;
  Dart start = 0;  // dart at the first bridge point
  Dart end = 0;    // dart at the last bridge point
};

// Traces the arcs of Shadow(i). Throws if a closed shadow loop remains.
std::vector<Arc> ShadowArcs(const ShadowDiagram& d, int i) {
  const CombMap& m = d.surface();
  const Color c = Color::Shadow(i);
  std::vector<char> used(m.num_edges(), 0);
  std::vector<Arc> arcs;
  for (Dart s : d.marked()) {
    for (Dart first : m.vertex_orbits()[m.vertex_index(s)]) {
      if (d.color(first) != c || used[m.edge_index(first)]) continue;
      Arc arc;
      arc.start = first;
      Dart cur = first;
      while (true) {
        used[m.edge_index(cur)] = 1;
        arc.darts.push_back(cur);
        const Dart x = m.E(cur);
        if (d.is_marked_dart(x)) {
          arc.end = x;
          break;
        }
        cur = OtherAtVertex(d, x, c);
      }
      arcs.push_back(std::move(arc));
    }
  }
  for (int e = 0; e < m.num_edges(); ++e) {
    if (!used[e] && d.color(m.edge_orbits()[e][0]) == c) {
      throw Error(ErrorCode::kMalformedColoring,
                  "shadow " + std::to_string(i) + " has a closed component");
    }
  }
  return arcs;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int Find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<CurvePath> CurvesOf(const ShadowDiagram& d, int i) {
  const CombMap& m = d.surface();
  const Color c = Color::Alpha(i);
  std::vector<char> used(m.num_edges(), 0);
  std::vector<CurvePath> curves;
  for (const auto& orbit : m.edge_orbits()) {
    const Dart s = orbit[0];
    if (d.color(s) != c || used[m.edge_index(s)]) continue;
    CurvePath path;
    Dart cur = s;
    while (true) {
      used[m.edge_index(cur)] = 1;
      path.darts.push_back(cur);
      const Dart next = OtherAtVertex(d, m.E(cur), c);
      if (next == s) break;
      if (used[m.edge_index(next)]) {
        throw Error(ErrorCode::kMalformedColoring, "curve is not simple");
      }
      cur = next;
    }
    curves.push_back(std::move(path));
  }
  return curves;
}

CutSystemVerdict ValidateCutSystem(const ShadowDiagram& d, int i) {
  CutSystemVerdict out;
  std::vector<CurvePath> curves;
  try {
    CheckWellFormed(d);
    curves = CurvesOf(d, i);
  } catch (const Error& e) {
    out.reason = e.what();
    return out;
  }
  out.curves = static_cast<int>(curves.size());
  const CutResult cut = CutAlong(d.surface(), d.EdgesOf(Color::Alpha(i)));
  out.complementary_components = static_cast<int>(cut.components.size());
  out.valid = true;
  for (const ComponentSummary& c : cut.components) {
    if (c.genus != 0) {
      out.valid = false;
      out.reason = "complementary component of genus " +
                   std::to_string(c.genus);
    }
  }
  const int g = d.surface().Genus();
  out.minimal = out.valid && out.curves == g && cut.components.size() == 1;
  return out;
}

std::vector<std::vector<std::int64_t>> CurveClasses(const ShadowDiagram& d,
                                                    int i) {
  std::vector<std::vector<std::int64_t>> out;
  for (const CurvePath& c : CurvesOf(d, i)) {
    out.push_back(ChainOfDarts(d.surface(), c.darts));
  }
  return out;
}

std::string ToString(HeegaardVerdict v) {
  switch (v) {
    case HeegaardVerdict::kVerified: return "Verified";
    case HeegaardVerdict::kHomologyCertified: return "HomologyCertified";
    case HeegaardVerdict::kFailed: return "Failed";
  }
  return "Failed";
}

int ResolveTier2Budget(const ValidationOptions& options) {
  if (options.tier2_budget >= 0) return options.tier2_budget;
  if (const char* env = std::getenv("ETD_TIER2_BUDGET")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value >= 0) return static_cast<int>(value);
  }
  return 10000;
}

namespace {

// Bounded search for minimal subsystems of two cut systems that are in
// standard position: every chosen curve of one system meets at most one
// chosen curve of the other, exactly once, and unmatched curves pair up as
// parallel copies.
class StandardPatternSearch {
 public:
  StandardPatternSearch(const ShadowDiagram& d, std::vector<CurvePath> a,
                        std::vector<CurvePath> b, int budget)
      : d_(d), budget_(budget) {
    for (auto& c : a) curves_.push_back(std::move(c));
    num_a_ = static_cast<int>(curves_.size());
    for (auto& c : b) curves_.push_back(std::move(c));
    const CombMap& m = d.surface();
    const int n = static_cast<int>(curves_.size());
    vertices_.resize(n);
    edge_curve_.assign(m.num_edges(), -1);
    for (int c = 0; c < n; ++c) {
      for (Dart x : curves_[c].darts) {
        vertices_[c].push_back(m.vertex_index(x));
        edge_curve_[m.edge_index(x)] = c;
      }
      std::sort(vertices_[c].begin(), vertices_[c].end());
    }
    // Disjoint simple closed curves have connected complement exactly when
    // their classes are independent in H_1 with Z/2 coefficients.
    if (m.Genus() > 0) {
      const SurfaceHomology homology(m);
      for (int c = 0; c < n; ++c) {
        std::vector<char> bits;
        for (std::int64_t x : homology.ClassOfDarts(curves_[c].darts)) {
          bits.push_back(static_cast<char>(((x % 2) + 2) % 2));
        }
        mod2_.push_back(std::move(bits));
      }
    } else {
      mod2_.assign(n, {});
    }
  }

  // Returns the number of parallel pairs of a standard pattern, or -1.
  int Run(int g) {
    std::vector<std::vector<int>> subs_a, subs_b;
    std::vector<int> current;
    if (!Enumerate(0, num_a_, g, &current, &subs_a)) return -1;
    current.clear();
    if (!Enumerate(num_a_, static_cast<int>(curves_.size()), g, &current,
                   &subs_b)) {
      return -1;
    }
    for (const auto& sa : subs_a) {
      for (const auto& sb : subs_b) {
        if (!Tick()) return -1;
        const int k = Pattern(sa, sb);
        if (k >= 0) return k;
      }
    }
    return -1;
  }

  int nodes() const { return nodes_; }

 private:
  bool Tick() { return ++nodes_ <= budget_; }

  std::vector<CellId> EdgesOfCurves(const std::vector<int>& ids) const {
    std::vector<CellId> edges;
    for (int c : ids) {
      for (Dart x : curves_[c].darts) {
        edges.push_back(d_.surface().Cell(CellKind::kEdge, x));
      }
    }
    return edges;
  }

  bool Connected(const std::vector<int>& ids) const {
    std::vector<std::vector<char>> rows;
    for (int c : ids) rows.push_back(mod2_[c]);
    const size_t width = rows.empty() ? 0 : rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < width && rank < rows.size(); ++col) {
      size_t pivot = rank;
      while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[pivot], rows[rank]);
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && rows[r][col]) {
          for (size_t k = col; k < width; ++k) rows[r][k] ^= rows[rank][k];
        }
      }
      ++rank;
    }
    return rank == rows.size();
  }

  // Depth-first enumeration of connected-complement subsets of size g from
  // [lo, hi). Returns false when the budget runs out.
  bool Enumerate(int lo, int hi, int g, std::vector<int>* current,
                 std::vector<std::vector<int>>* out) {
    if (static_cast<int>(current->size()) == g) {
      out->push_back(*current);
      return true;
    }
    const int start = current->empty() ? lo : current->back() + 1;
    for (int c = start; c < hi; ++c) {
      if (!Tick()) return false;
      current->push_back(c);
      if (Connected(*current)) {
        if (!Enumerate(lo, hi, g, current, out)) return false;
      }
      current->pop_back();
    }
    return true;
  }

  int Intersections(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = meet_.find(key);
    if (it != meet_.end()) return it->second;
    std::vector<int> common;
    std::set_intersection(vertices_[a].begin(), vertices_[a].end(),
                          vertices_[b].begin(), vertices_[b].end(),
                          std::back_inserter(common));
    const int n = static_cast<int>(common.size());
    meet_[key] = n;
    return n;
  }

  bool Parallel(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = parallel_.find(key);
    if (it != parallel_.end()) return it->second;
    const CutResult cut = CutAlong(d_.surface(), EdgesOfCurves({a, b}));
    bool result = false;
    for (const ComponentSummary& comp : cut.components) {
      if (comp.euler != 0 || comp.boundary_circles != 2) continue;
      std::set<int> sides;
      for (Dart x : comp.darts) {
        if (x >= cut.num_original_darts) {
          sides.insert(edge_curve_[d_.surface().edge_index(cut.origin[x])]);
        }
      }
      if (sides == std::set<int>{a, b}) result = true;
    }
    parallel_[key] = result;
    return result;
  }

  int Pattern(const std::vector<int>& sa, const std::vector<int>& sb) {
    std::vector<int> free_a, free_b;
    std::vector<int> hits_b(sb.size(), 0);
    for (int a : sa) {
      int hits = 0;
      for (size_t j = 0; j < sb.size(); ++j) {
        const int n = Intersections(a, sb[j]);
        if (n == 0) continue;
        if (n != 1) return -1;
        ++hits;
        ++hits_b[j];
      }
      if (hits > 1) return -1;
      if (hits == 0) free_a.push_back(a);
    }
    for (size_t j = 0; j < sb.size(); ++j) {
      if (hits_b[j] > 1) return -1;
      if (hits_b[j] == 0) free_b.push_back(sb[j]);
    }
    if (free_a.size() != free_b.size()) return -1;
    std::vector<char> taken(free_b.size(), 0);
    std::function<bool(size_t)> match = [&](size_t idx) {
      if (idx == free_a.size()) return true;
      for (size_t j = 0; j < free_b.size(); ++j) {
        if (taken[j] || !Parallel(free_a[idx], free_b[j])) continue;
        taken[j] = 1;
        if (match(idx + 1)) return true;
        taken[j] = 0;
      }
      return false;
    };
    return match(0) ? static_cast<int>(free_a.size()) : -1;
  }

  const ShadowDiagram& d_;
  int budget_;
  int nodes_ = 0;
  int num_a_ = 0;
  std::vector<CurvePath> curves_;
  std::vector<std::vector<int>> vertices_;
  std::vector<int> edge_curve_;
  std::vector<std::vector<char>> mod2_;
  std::map<std::pair<int, int>, int> meet_;
  std::map<std::pair<int, int>, bool> parallel_;
};

}  // namespace

HeegaardReport ValidateHeegaardPair(const ShadowDiagram& d, int i, int j,
                                    const ValidationOptions& options) {
  HeegaardReport out;
  out.i = i;
  out.j = j;
  const CutSystemVerdict ci = ValidateCutSystem(d, i);
  const CutSystemVerdict cj = ValidateCutSystem(d, j);
  if (!ci.valid || !cj.valid) {
    out.note = "cut system " + std::to_string(ci.valid ? j : i) +
               " is invalid";
    return out;
  }
  const int g = d.surface().Genus();
  if (g == 0) {
    out.verdict = HeegaardVerdict::kVerified;
    return out;
  }
  const SurfaceHomology homology(d.surface());
  IntMatrix rows;
  const std::vector<CurvePath> ca = CurvesOf(d, i);
  const std::vector<CurvePath> cb = CurvesOf(d, j);
  for (const auto* family : {&ca, &cb}) {
    for (const CurvePath& c : *family) {
      rows.push_back(homology.ClassOfDarts(c.darts));
    }
  }
  out.quotient = Cokernel(rows, homology.rank());
  if (!out.quotient.is_free()) {
    out.note = "torsion in H_1 quotient: " + out.quotient.ToString();
    return out;
  }
  out.k = out.quotient.rank;
  out.verdict = HeegaardVerdict::kHomologyCertified;
  StandardPatternSearch search(d, ca, cb, ResolveTier2Budget(options));
  const int k = search.Run(g);
  out.search_nodes = search.nodes();
  if (k < 0) {
    out.note = "standard pattern not found within budget";
  } else if (k != out.k) {
    out.note = "standard pattern rank disagrees with homology";
  } else {
    out.verdict = HeegaardVerdict::kVerified;
  }
  return out;
}

ShadowReport ValidateShadow(const ShadowDiagram& d) {
  ShadowReport out;
  const CombMap& m = d.surface();
  auto fail = [&](ErrorCode code, const std::string& why) {
    out.valid = false;
    out.reason = std::string(ErrorCodeName(code)) + ": " + why;
    return out;
  };
  if (!d.HasShadows()) {
    if (!d.marked().empty()) {
      return fail(ErrorCode::kMalformedColoring,
                  "marked points without shadow arcs");
    }
    return out;
  }
  const int marked = static_cast<int>(d.marked().size());
  if (marked % 2 != 0) {
    return fail(ErrorCode::kOddMarkedCount, std::to_string(marked));
  }
  std::array<std::vector<Arc>, 4> arcs;
  try {
    CheckWellFormed(d);
    for (int i = 1; i <= 3; ++i) arcs[i] = ShadowArcs(d, i);
  } catch (const Error& e) {
    out.valid = false;
    out.reason = e.what();
    return out;
  }
  for (int i = 1; i <= 3; ++i) {
    if (arcs[i].empty()) {
      return fail(ErrorCode::kMalformedColoring,
                  "shadow family " + std::to_string(i) + " is empty");
    }
  }
  // Components of the union of all shadow arcs, joined through shared bridge
  // points and crossings.
  UnionFind uf(m.num_vertices());
  for (int i = 1; i <= 3; ++i) {
    for (const Arc& a : arcs[i]) {
      const int root = m.vertex_index(a.start);
      for (Dart x : a.darts) uf.Union(root, m.vertex_index(x));
      uf.Union(root, m.vertex_index(a.end));
    }
  }
  for (int i = 1; i <= 3; ++i) {
    const CutResult cut = CutAlong(m, d.EdgesOf(Color::Alpha(i)));
    std::map<int, int> owner;
    for (const Arc& a : arcs[i]) {
      const int region = cut.surface.component_of(a.darts[0]);
      for (Dart x : a.darts) {
        if (cut.surface.component_of(x) != region) {
          return fail(ErrorCode::kArcOutsideComplementaryDisk,
                      "shadow " + std::to_string(i) + " arc crosses alpha " +
                          std::to_string(i));
        }
      }
      const int comp = uf.Find(m.vertex_index(a.start));
      auto [it, inserted] = owner.emplace(region, comp);
      if (!inserted && it->second != comp) {
        return fail(ErrorCode::kArcOutsideComplementaryDisk,
                    "two shadow components share a complementary region of "
                    "alpha " + std::to_string(i));
      }
    }
  }
  BridgeData bridge;
  bridge.b = marked / 2;
  int total_arcs = 0;
  for (int i = 1; i <= 3; ++i) total_arcs += static_cast<int>(arcs[i].size());
  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;
    // Slots are arc ends: slot 2*a and 2*a+1 for arc a of family i, then
    // the same for family j.
    const int na = static_cast<int>(arcs[i].size());
    const int nb = static_cast<int>(arcs[j].size());
    UnionFind uf(2 * (na + nb));
    std::map<Dart, int> slot_of_dart;
    for (int a = 0; a < na; ++a) {
      uf.Union(2 * a, 2 * a + 1);
      slot_of_dart[arcs[i][a].start] = 2 * a;
      slot_of_dart[arcs[i][a].end] = 2 * a + 1;
    }
    for (int b = 0; b < nb; ++b) {
      const int base = 2 * (na + b);
      uf.Union(base, base + 1);
      slot_of_dart[arcs[j][b].start] = base;
      slot_of_dart[arcs[j][b].end] = base + 1;
    }
    for (Dart v : d.marked()) {
      // Pair each family-i end with the nearest unpaired family-j end
      // counterclockwise; this pairs adjacent ends in rotation order.
      std::vector<Dart> ring;
      for (Dart x : m.vertex_orbits()[m.vertex_index(v)]) {
        if (d.color(x) == Color::Shadow(i) || d.color(x) == Color::Shadow(j)) {
          ring.push_back(x);
        }
      }
      int ci = 0, cj = 0;
      for (Dart x : ring) (d.color(x) == Color::Shadow(i) ? ci : cj)++;
      if (ci != cj) {
        return fail(ErrorCode::kMalformedColoring,
                    "unbalanced shadow ends at vertex " + std::to_string(v));
      }
      const int n = static_cast<int>(ring.size());
      std::vector<char> paired(n, 0);
      for (int s = 0; s < n; ++s) {
        if (d.color(ring[s]) != Color::Shadow(i) || paired[s]) continue;
        for (int t = 1; t < n; ++t) {
          const int u = (s + t) % n;
          if (!paired[u] && d.color(ring[u]) == Color::Shadow(j)) {
            paired[s] = paired[u] = 1;
            uf.Union(slot_of_dart[ring[s]], slot_of_dart[ring[u]]);
            break;
          }
        }
      }
    }
    std::set<int> loops;
    for (int s = 0; s < 2 * (na + nb); ++s) loops.insert(uf.Find(s));
    bridge.p[i - 1] = static_cast<int>(loops.size());
  }
  bridge.euler_loops = bridge.p[0] + bridge.p[1] + bridge.p[2] - bridge.b;
  bridge.euler_complex =
      marked - total_arcs + bridge.p[0] + bridge.p[1] + bridge.p[2];
  out.bridge = bridge;
  return out;
}

bool ValidationReport::valid() const {
  if (!well_formed || !shadow.valid) return false;
  return weakest() != HeegaardVerdict::kFailed;
}

HeegaardVerdict ValidationReport::weakest() const {
  HeegaardVerdict w = HeegaardVerdict::kVerified;
  for (const auto& p : pairs) w = std::min(w, p.verdict);
  return w;
}

std::string ValidationReport::Parameters() const {
  return "(" + std::to_string(genus) + "; " + std::to_string(pairs[0].k) +
         "," + std::to_string(pairs[1].k) + "," + std::to_string(pairs[2].k) +
         ")";
}

ValidationReport ValidateTrisection(const ShadowDiagram& d,
                                    const ValidationOptions& options) {
  ValidationReport r;
  try {
    r.genus = d.surface().Genus();
    CheckWellFormed(d);
  } catch (const Error& e) {
    r.error = e.what();
    return r;
  }
  r.well_formed = true;
  for (int i = 1; i <= 3; ++i) r.cut[i - 1] = ValidateCutSystem(d, i);
  for (int i = 1; i <= 3; ++i) {
    r.pairs[i - 1] = ValidateHeegaardPair(d, i, i % 3 + 1, options);
  }
  r.shadow = ValidateShadow(d);
  if (r.weakest() != HeegaardVerdict::kFailed) {
    r.euler_x = 2 + r.genus - (r.pairs[0].k + r.pairs[1].k + r.pairs[2].k);
    if (r.genus == 0) {
      r.h1_x = AbelianGroup{};
    } else {
      const SurfaceHomology homology(d.surface());
      IntMatrix rows;
      for (int i = 1; i <= 3; ++i) {
        for (const CurvePath& c : CurvesOf(d, i)) {
          rows.push_back(homology.ClassOfDarts(c.darts));
        }
      }
      r.h1_x = Cokernel(rows, homology.rank());
    }
  }
  return r;
}

}  // namespace etd

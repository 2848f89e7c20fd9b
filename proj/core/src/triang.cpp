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

#include "etd/triang.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "etd/group.hpp"

namespace etd {
namespace {

using Simplex = std::vector<int>;

Simplex Sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

// Vertices of pentachoron p selected by a 5-bit mask, sorted.
Simplex FaceOf(const std::array<int, 5>& pent, unsigned mask) {
  Simplex s;
  for (int i = 0; i < 5; ++i) {
    if (mask & (1u << i)) s.push_back(pent[i]);
  }
  return Sorted(std::move(s));
}

Simplex Facet(const std::array<int, 5>& pent, int f) {
  return FaceOf(pent, 31u & ~(1u << f));
}

std::string Join(const Simplex& s) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}";
  return out.str();
}

Simplex Image(const Perm& g, const Simplex& s) {
  Simplex out;
  for (int v : s) out.push_back(g[v]);
  return Sorted(std::move(out));
}

TriangulationCheck Fail(TriangulationCheck c, ErrorCode code,
                        const std::string& message) {
  c.valid = false;
  c.code = code;
  c.violation = message;
  return c;
}

struct SurfaceCheck {
  bool closed = true;
  std::string reason;
  int v = 0, e = 0, f = 0;
};

SurfaceCheck InspectSurface(const std::vector<Triangle>& triangles) {
  SurfaceCheck out;
  std::set<Simplex> faces;
  std::map<Simplex, int> edge_count;
  std::map<int, std::vector<std::pair<int, int>>> link;
  for (const Triangle& t : triangles) {
    Simplex s = Sorted({t[0], t[1], t[2]});
    if (s[0] == s[1] || s[1] == s[2]) {
      out.closed = false;
      out.reason = "degenerate triangle " + Join(s);
      return out;
    }
    if (!faces.insert(s).second) {
      out.closed = false;
      out.reason = "repeated triangle " + Join(s);
      return out;
    }
    for (int i = 0; i < 3; ++i) {
      const int a = s[i], b = s[(i + 1) % 3], c = s[(i + 2) % 3];
      ++edge_count[Sorted({a, b})];
      link[c].push_back({std::min(a, b), std::max(a, b)});
    }
  }
  for (const auto& [edge, n] : edge_count) {
    if (n != 2) {
      out.closed = false;
      out.reason = "edge " + Join(edge) + " lies in " + std::to_string(n) +
                   " triangles";
      return out;
    }
  }
  // Every vertex link must be a single cycle.
  for (const auto& [vertex, segments] : link) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : segments) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::set<int> seen;
    std::vector<int> stack = {adj.begin()->first};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      for (int y : adj[x]) stack.push_back(y);
    }
    if (seen.size() != adj.size()) {
      out.closed = false;
      out.reason = "link of vertex " + std::to_string(vertex) +
                   " is not a single circle";
      return out;
    }
  }
  out.v = static_cast<int>(link.size());
  out.e = static_cast<int>(edge_count.size());
  out.f = static_cast<int>(faces.size());
  return out;
}

}  // namespace

SimplexCounts CountSimplices(const GTriangulation& k) {
  std::array<std::set<Simplex>, 4> faces;
  for (const auto& pent : k.pentachora) {
    for (unsigned mask = 1; mask < 31; ++mask) {
      faces[std::popcount(mask) - 1].insert(FaceOf(pent, mask));
    }
  }
  SimplexCounts c;
  c.v = static_cast<std::int64_t>(faces[0].size());
  c.e = static_cast<std::int64_t>(faces[1].size());
  c.f = static_cast<std::int64_t>(faces[2].size());
  c.t = static_cast<std::int64_t>(faces[3].size());
  c.p = static_cast<std::int64_t>(k.pentachora.size());
  return c;
}

TriangulationCheck CheckTriangulation(const GTriangulation& k) {
  TriangulationCheck c;
  const int n = k.num_vertices;
  if (k.pentachora.empty()) {
    return Fail(c, ErrorCode::kOpenFacet, "no pentachora");
  }
  std::vector<char> used(std::max(n, 0), 0);
  for (size_t p = 0; p < k.pentachora.size(); ++p) {
    const auto& pent = k.pentachora[p];
    for (int v : pent) {
      if (v < 0 || v >= n) {
        return Fail(c, ErrorCode::kParse,
                    "pentachoron " + std::to_string(p) +
                        " has a vertex out of range");
      }
      used[v] = 1;
    }
    const Simplex s = FaceOf(pent, 31);
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      return Fail(c, ErrorCode::kParse,
                  "pentachoron " + std::to_string(p) + " repeats a vertex");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!used[v]) {
      return Fail(c, ErrorCode::kParse,
                  "vertex " + std::to_string(v) + " lies in no pentachoron");
    }
  }

  // Facet pairing: explicit gluings must match vertex labels; otherwise
  // facets are paired by label.
  const int np = static_cast<int>(k.pentachora.size());
  std::vector<int> partner(5 * np, -1);
  if (!k.gluings.empty()) {
    for (const auto& gl : k.gluings) {
      if (gl.p < 0 || gl.p >= np || gl.q < 0 || gl.q >= np || gl.f < 0 ||
          gl.f > 4 || gl.g < 0 || gl.g > 4) {
        return Fail(c, ErrorCode::kParse, "gluing index out of range");
      }
      const int a = 5 * gl.p + gl.f, b = 5 * gl.q + gl.g;
      if (a == b || partner[a] != -1 || partner[b] != -1) {
        return Fail(c, ErrorCode::kOpenFacet,
                    "facet glued more than once or to itself");
      }
      if (Facet(k.pentachora[gl.p], gl.f) != Facet(k.pentachora[gl.q], gl.g)) {
        return Fail(c, ErrorCode::kOpenFacet,
                    "gluing of facets " +
                        Join(Facet(k.pentachora[gl.p], gl.f)) + " and " +
                        Join(Facet(k.pentachora[gl.q], gl.g)) +
                        " does not respect vertex labels");
      }
      partner[a] = b;
      partner[b] = a;
    }
  }
  std::map<Simplex, std::vector<int>> by_label;
  for (int p = 0; p < np; ++p) {
    for (int f = 0; f < 5; ++f) {
      by_label[Facet(k.pentachora[p], f)].push_back(5 * p + f);
    }
  }
  for (const auto& [facet, slots] : by_label) {
    if (slots.size() != 2) {
      return Fail(c, ErrorCode::kOpenFacet,
                  "tetrahedron " + Join(facet) + " lies in " +
                      std::to_string(slots.size()) + " pentachoron facets");
    }
    if (k.gluings.empty()) {
      partner[slots[0]] = slots[1];
      partner[slots[1]] = slots[0];
    }
  }
  for (int slot = 0; slot < 5 * np; ++slot) {
    if (partner[slot] == -1) {
      return Fail(c, ErrorCode::kOpenFacet,
                  "facet " + std::to_string(slot % 5) + " of pentachoron " +
                      std::to_string(slot / 5) + " is not glued");
    }
  }
  // Connectedness through glued facets.
  {
    std::vector<char> seen(np, 0);
    std::vector<int> stack = {0};
    int count = 0;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      if (seen[p]) continue;
      seen[p] = 1;
      ++count;
      for (int f = 0; f < 5; ++f) stack.push_back(partner[5 * p + f] / 5);
    }
    if (count != np) {
      return Fail(c, ErrorCode::kNotConnected, "the complex is disconnected");
    }
  }

  // The action: each generator must permute the pentachora as labeled sets.
  std::map<Simplex, int> pent_count;
  for (const auto& pent : k.pentachora) ++pent_count[FaceOf(pent, 31)];
  for (size_t i = 0; i < k.generators.size(); ++i) {
    const Perm& g = k.generators[i];
    const std::string name = i < k.generator_names.size()
                                 ? k.generator_names[i]
                                 : "g" + std::to_string(i);
    if (static_cast<int>(g.size()) != n || !IsPermutation(g)) {
      return Fail(c, ErrorCode::kNonSimplicialAction,
                  "generator " + name + " is not a permutation of the vertices");
    }
    for (const auto& [pent, count] : pent_count) {
      auto it = pent_count.find(Image(g, pent));
      if (it == pent_count.end() || it->second != count) {
        return Fail(c, ErrorCode::kNonSimplicialAction,
                    "generator " + name + " sends pentachoron " + Join(pent) +
                        " outside K");
      }
    }
  }
  if (!k.generators.empty()) {
    const FiniteGroup group =
        FiniteGroup::FromPermutations(k.generators, k.generator_names);
    c.group_order = group.order();
    // Recover the vertex permutations by closing the generators again.
    std::vector<Perm> elements = {IdentityPerm(n)};
    std::set<Perm> seen = {elements[0]};
    for (size_t at = 0; at < elements.size(); ++at) {
      for (const Perm& g : k.generators) {
        Perm next = Compose(g, elements[at]);
        if (seen.insert(next).second) elements.push_back(std::move(next));
      }
    }
    std::set<int> fixed;
    for (size_t e = 1; e < elements.size(); ++e) {
      for (int v = 0; v < n; ++v) {
        if (elements[e][v] == v) fixed.insert(v);
      }
    }
    c.fixed_vertices.assign(fixed.begin(), fixed.end());
    if (!fixed.empty()) {
      c.notes.push_back(std::to_string(fixed.size()) +
                        " vertices have nontrivial stabilizers; their fixed "
                        "points lie in the first sector");
    }
  }

  // Surfaces.
  std::set<Simplex> triangles_of_k;
  for (const auto& pent : k.pentachora) {
    for (unsigned mask = 1; mask < 31; ++mask) {
      if (std::popcount(mask) == 3) triangles_of_k.insert(FaceOf(pent, mask));
    }
  }
  for (const TriSurface& s : k.surfaces) {
    std::set<Simplex> tri;
    for (const Triangle& t : s.triangles) {
      Simplex x = Sorted({t[0], t[1], t[2]});
      if (!triangles_of_k.count(x)) {
        return Fail(c, ErrorCode::kNotClosedSurface,
                    "triangle " + Join(x) + " of surface " + s.name +
                        " is not a face of K");
      }
      tri.insert(x);
    }
    const SurfaceCheck sc = InspectSurface(s.triangles);
    if (!sc.closed) {
      return Fail(c, ErrorCode::kNotClosedSurface,
                  "surface " + s.name + ": " + sc.reason);
    }
    for (size_t i = 0; i < k.generators.size(); ++i) {
      for (const Simplex& x : tri) {
        if (!tri.count(Image(k.generators[i], x))) {
          return Fail(c, ErrorCode::kSurfaceNotInvariant,
                      "surface " + s.name + " is not invariant: triangle " +
                          Join(x) + " leaves it");
        }
      }
    }
  }
  c.valid = true;
  return c;
}

TriangulationCheck ValidateTriangulation(const GTriangulation& k) {
  TriangulationCheck c = CheckTriangulation(k);
  if (!c.valid) throw Error(c.code, c.violation);
  return c;
}

SurfaceBridge BridgeParameters(const std::vector<Triangle>& triangles,
                               const std::string& name) {
  const SurfaceCheck sc = InspectSurface(triangles);
  if (!sc.closed || triangles.empty()) {
    throw Error(ErrorCode::kNotClosedSurface,
                triangles.empty() ? "empty surface" : sc.reason);
  }
  SurfaceBridge out;
  out.name = name;
  out.b = 2 * sc.e;
  out.p = {sc.v, sc.f, sc.e};
  out.euler = sc.v - sc.e + sc.f;
  if (out.euler_loops() != out.euler || 3 * sc.f != 2 * sc.e) {
    throw Error(ErrorCode::kInternal, "bridge Euler identity fails");
  }
  return out;
}

SurfaceBridge BridgeParameters(const GTriangulation& k, int surface) {
  ValidateTriangulation(k);
  if (surface < 0 || surface >= static_cast<int>(k.surfaces.size())) {
    throw Error(ErrorCode::kUnknownName,
                "no surface with index " + std::to_string(surface));
  }
  return BridgeParameters(k.surfaces[surface].triangles,
                          k.surfaces[surface].name);
}

std::string TriParamReport::Parameters() const {
  std::ostringstream out;
  out << "(" << genus << "; " << k[0] << "," << k[1] << "," << k[2] << ")";
  return out.str();
}

TriParamReport TrisectionParameters(const GTriangulation& k,
                                    bool with_oracle) {
  const TriangulationCheck check = ValidateTriangulation(k);
  TriParamReport r;
  r.group_order = check.group_order;
  r.notes = check.notes;
  r.counts = CountSimplices(k);
  const SimplexCounts& x = r.counts;
  const std::int64_t chi_sector[3] = {x.v - 4 * x.p, x.f - 3 * x.t,
                                      x.e - 25 * x.p};
  const std::int64_t chi_spine[3] = {2 * x.e - 35 * x.p,
                                     3 * x.f - 8 * x.t - 20 * x.p,
                                     3 * x.f - 6 * x.t - 25 * x.p};
  for (int i = 0; i < 3; ++i) {
    r.k[i] = static_cast<int>(1 - chi_sector[i]);
    r.handlebody_genus[i] = static_cast<int>(1 - chi_spine[i]);
  }
  if (r.handlebody_genus[0] != r.handlebody_genus[1] ||
      r.handlebody_genus[1] != r.handlebody_genus[2]) {
    throw Error(ErrorCode::kGenusMismatch,
                "handlebody genera " + std::to_string(r.handlebody_genus[0]) +
                    ", " + std::to_string(r.handlebody_genus[1]) + ", " +
                    std::to_string(r.handlebody_genus[2]) + " disagree");
  }
  r.genus = r.handlebody_genus[0];
  r.euler_simplices = x.euler();
  r.euler_trisection = 2 + r.genus - (r.k[0] + r.k[1] + r.k[2]);
  for (const TriSurface& s : k.surfaces) {
    r.surfaces.push_back(BridgeParameters(s.triangles, s.name));
  }
  if (with_oracle) r.oracle_genus = SigmaOracle(k);
  return r;
}

// ---------------------------------------------------------------------------
// Central surface assembly.

namespace {

// Levels of the cone coordinate on a pentachoron: points 0, 1/4, 3/4 and the
// open intervals between them and up to the cone point.
enum Level { kL0 = 0, kLa, kLq, kLb, kLt, kLc, kNumLevels };

bool IsInterval(int level) {
  return level == kLa || level == kLb || level == kLc;
}

// Face types are dimensions 0..3 recorded as a 4-bit set.
constexpr unsigned kV = 1, kE = 2, kF = 4, kT = 8;

bool InCentralSurface(unsigned types, int level) {
  const bool v = types & kV, e = types & kE, f = types & kF, t = types & kT;
  const bool low = level == kL0 || level == kLa || level == kLq;
  const bool mid = level == kLq || level == kLb || level == kLt;
  return (v && e && (f || t) && low) ||
         (v && (f || t) && (e || t) && level == kLq) ||
         (v && f && (e || t) && mid) || (f && (e || t) && level == kLt);
}

// A cell: the dual cell of a chain of faces of s inside pentachoron `pent`,
// at a level. Faces are 5-bit masks on the vertices of the pentachoron.
struct Cell {
  int pent = 0;
  int level = 0;
  unsigned s = 0;
  std::vector<unsigned> chain;  // strictly increasing
  int dim() const {
    return std::popcount(s) - static_cast<int>(chain.size()) +
           (IsInterval(level) ? 1 : 0);
  }
};

class SigmaBuilder {
 public:
  explicit SigmaBuilder(const GTriangulation& k) : k_(k) {}

  CombMap Build() {
    for (int p = 0; p < static_cast<int>(k_.pentachora.size()); ++p) {
      for (unsigned s = 1; s < 31; ++s) {
        std::vector<unsigned> chain;
        Chains(p, s, chain);
      }
    }
    return Glue();
  }

 private:
  std::vector<int> Key(const Cell& c) const {
    std::vector<int> key;
    const auto& pent = k_.pentachora[c.pent];
    if (c.level == kL0) {
      // Level 0 lies on the boundary of the pentachoron and is shared.
      key.push_back(-1);
      key.push_back(kL0);
      for (unsigned face : c.chain) {
        const Simplex x = FaceOf(pent, face);
        key.push_back(static_cast<int>(x.size()));
        key.insert(key.end(), x.begin(), x.end());
      }
      const Simplex x = FaceOf(pent, c.s);
      key.push_back(-2);
      key.insert(key.end(), x.begin(), x.end());
    } else {
      key.push_back(c.pent);
      key.push_back(c.level);
      for (unsigned face : c.chain) key.push_back(static_cast<int>(face));
      key.push_back(-2);
      key.push_back(static_cast<int>(c.s));
    }
    return key;
  }

  void Chains(int p, unsigned s, std::vector<unsigned>& chain) {
    if (!chain.empty()) {
      unsigned types = 0;
      for (unsigned face : chain) types |= 1u << (std::popcount(face) - 1);
      for (int level = 0; level < kNumLevels; ++level) {
        if (!InCentralSurface(types, level)) continue;
        Cell c{p, level, s, chain};
        if (c.dim() > 2) continue;
        auto key = Key(c);
        if (!index_.count(key)) {
          index_[key] = static_cast<int>(cells_.size());
          cells_.push_back(std::move(c));
        }
      }
    }
    // Extend by faces of s strictly containing the last element.
    for (unsigned face = s;; face = (face - 1) & s) {
      if (face != 0 && (chain.empty() || (IsProperSubset(chain.back(), face)))) {
        chain.push_back(face);
        Chains(p, s, chain);
        chain.pop_back();
      }
      if (face == 0) break;
    }
  }

  static bool IsProperSubset(unsigned a, unsigned b) {
    return a != b && (a & b) == a;
  }

  std::vector<int> Boundary(const Cell& c) const {
    std::vector<int> out;
    auto add = [&](const Cell& x) {
      auto it = index_.find(Key(x));
      if (it != index_.end()) out.push_back(it->second);
    };
    // Refine the chain by one more face of s.
    for (unsigned face = c.s; face != 0; face = (face - 1) & c.s) {
      if (std::find(c.chain.begin(), c.chain.end(), face) != c.chain.end()) {
        continue;
      }
      std::vector<unsigned> chain = c.chain;
      chain.push_back(face);
      std::sort(chain.begin(), chain.end(), [](unsigned a, unsigned b) {
        return std::popcount(a) < std::popcount(b);
      });
      bool ok = true;
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        ok = ok && IsProperSubset(chain[i], chain[i + 1]);
      }
      if (ok) add(Cell{c.pent, c.level, c.s, chain});
    }
    // Shrink s while it still contains the chain.
    for (int i = 0; i < 5; ++i) {
      if (!(c.s & (1u << i))) continue;
      const unsigned s2 = c.s & ~(1u << i);
      if (s2 != 0 && (c.chain.back() & s2) == c.chain.back()) {
        add(Cell{c.pent, c.level, s2, c.chain});
      }
    }
    // Ends of an interval level. The cone point end never meets the surface.
    if (c.level == kLa) {
      add(Cell{c.pent, kL0, c.s, c.chain});
      add(Cell{c.pent, kLq, c.s, c.chain});
    } else if (c.level == kLb) {
      add(Cell{c.pent, kLq, c.s, c.chain});
      add(Cell{c.pent, kLt, c.s, c.chain});
    } else if (c.level == kLc) {
      add(Cell{c.pent, kLt, c.s, c.chain});
    }
    return out;
  }

  CombMap Glue() {
    std::vector<int> edge_slot(cells_.size(), -1);
    std::vector<std::array<int, 2>> ends;
    std::vector<int> faces;
    for (size_t i = 0; i < cells_.size(); ++i) {
      const int d = cells_[i].dim();
      if (d == 1) {
        auto b = Boundary(cells_[i]);
        if (b.size() != 2) {
          throw Error(ErrorCode::kInternal, "central surface edge has " +
                                                std::to_string(b.size()) +
                                                " ends");
        }
        edge_slot[i] = static_cast<int>(ends.size());
        ends.push_back({b[0], b[1]});
      } else if (d == 2) {
        faces.push_back(static_cast<int>(i));
      }
    }
    // Each face boundary as a cyclic sequence of (edge, tail vertex).
    struct Side {
      int edge;
      int tail;
      int head;
    };
    std::vector<std::vector<Side>> cycles;
    std::vector<std::vector<std::pair<int, int>>> edge_faces(ends.size());
    for (int f : faces) {
      std::vector<int> bedges;
      for (int x : Boundary(cells_[f])) {
        if (edge_slot[x] >= 0) bedges.push_back(edge_slot[x]);
      }
      std::vector<Side> cycle;
      std::vector<char> used(bedges.size(), 0);
      int cur = ends[bedges[0]][1];
      cycle.push_back({bedges[0], ends[bedges[0]][0], cur});
      used[0] = 1;
      for (size_t step = 1; step < bedges.size(); ++step) {
        bool found = false;
        for (size_t j = 0; j < bedges.size() && !found; ++j) {
          if (used[j]) continue;
          const auto& en = ends[bedges[j]];
          if (en[0] == cur || en[1] == cur) {
            const int next = en[0] == cur ? en[1] : en[0];
            cycle.push_back({bedges[j], cur, next});
            cur = next;
            used[j] = 1;
            found = true;
          }
        }
        if (!found) {
          throw Error(ErrorCode::kInternal, "face boundary is not a cycle");
        }
      }
      if (cur != cycle[0].tail) {
        throw Error(ErrorCode::kInternal, "face boundary does not close");
      }
      const int id = static_cast<int>(cycles.size());
      for (size_t j = 0; j < cycle.size(); ++j) {
        edge_faces[cycle[j].edge].push_back({id, static_cast<int>(j)});
      }
      cycles.push_back(std::move(cycle));
    }
    for (const auto& ef : edge_faces) {
      if (ef.size() != 2) {
        throw Error(ErrorCode::kInternal,
                    "central surface edge lies on " +
                        std::to_string(ef.size()) + " faces");
      }
    }
    // Orient the faces coherently by breadth-first search.
    const int nf = static_cast<int>(cycles.size());
    std::vector<int> flip(nf, -1);
    for (int start = 0; start < nf; ++start) {
      if (flip[start] != -1) continue;
      flip[start] = 0;
      std::deque<int> queue = {start};
      while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int j = 0; j < static_cast<int>(cycles[f].size()); ++j) {
          const Side& side = cycles[f][j];
          const auto& ef = edge_faces[side.edge];
          const auto other =
              ef[0] == std::pair<int, int>{f, j} ? ef[1] : ef[0];
          const Side& o = cycles[other.first][other.second];
          // Traversals must be opposite after orientation.
          const bool same = (o.tail == side.tail) ^ (flip[f] == 1);
          const int want = same ? 1 : 0;
          if (flip[other.first] == -1) {
            flip[other.first] = want;
            queue.push_back(other.first);
          } else if (flip[other.first] != want) {
            throw Error(ErrorCode::kGenusMismatch,
                        "central surface is not orientable");
          }
        }
      }
    }
    // Darts are face sides in the oriented direction.
    std::vector<int> first(nf + 1, 0);
    for (int f = 0; f < nf; ++f) {
      first[f + 1] = first[f] + static_cast<int>(cycles[f].size());
    }
    const int n = first[nf];
    std::vector<int> tail(n), edge(n);
    Perm phi(n);
    for (int f = 0; f < nf; ++f) {
      const int len = static_cast<int>(cycles[f].size());
      for (int j = 0; j < len; ++j) {
        // With a flip the side sequence is read backwards.
        const int pos = flip[f] ? len - 1 - j : j;
        const Side& s = cycles[f][pos];
        const int d = first[f] + j;
        tail[d] = flip[f] ? s.head : s.tail;
        edge[d] = s.edge;
        phi[d] = first[f] + (j + 1) % len;
      }
    }
    Perm e(n, -1);
    std::vector<int> seen_edge(ends.size(), -1);
    for (int d = 0; d < n; ++d) {
      if (seen_edge[edge[d]] == -1) {
        seen_edge[edge[d]] = d;
      } else {
        const int o = seen_edge[edge[d]];
        if (tail[o] == tail[d]) {
          throw Error(ErrorCode::kGenusMismatch,
                      "central surface is not orientable");
        }
        e[d] = o;
        e[o] = d;
      }
    }
    // phi = R^-1 E, so R = E phi^-1.
    const Perm phi_inv = Inverse(phi);
    Perm r(n);
    for (int d = 0; d < n; ++d) r[d] = e[phi_inv[d]];
    return CombMap::Build(std::move(e), std::move(r));
  }

  const GTriangulation& k_;
  std::vector<Cell> cells_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace

CombMap SigmaSurface(const GTriangulation& k) {
  ValidateTriangulation(k);
  return SigmaBuilder(k).Build();
}

int SigmaOracle(const GTriangulation& k) { return SigmaSurface(k).Genus(); }

GTriangulation BoundaryOfSimplex5() {
  GTriangulation k;
  k.name = "boundary_simplex5";
  k.num_vertices = 6;
  for (int skip = 5; skip >= 0; --skip) {
    std::array<int, 5> pent{};
    int at = 0;
    for (int v = 0; v < 6; ++v) {
      if (v != skip) pent[at++] = v;
    }
    k.pentachora.push_back(pent);
  }
  k.generators = {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}};
  k.generator_names = {"swap01", "cycle6"};
  return k;
}

GTriangulation DoublePentachoron() {
  GTriangulation k;
  k.name = "double_pentachoron";
  k.num_vertices = 5;
  k.pentachora = {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};
  for (int f = 0; f < 5; ++f) k.gluings.push_back({0, f, 1, f});
  k.generators = {{1, 2, 3, 4, 0}};
  k.generator_names = {"cycle5"};
  return k;
}

std::vector<Triangle> TetrahedralSphere() {
  return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}

std::vector<Triangle> SevenVertexTorus() {
  std::vector<Triangle> out;
  for (int i = 0; i < 7; ++i) {
    out.push_back({i, (i + 1) % 7, (i + 3) % 7});
    out.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return out;
}

GTriangulation BoundaryOfSimplex5WithSphere() {
  GTriangulation k = BoundaryOfSimplex5();
  k.name = "boundary_simplex5_sphere";
  k.generators = {{1, 2, 3, 0, 4, 5}, {1, 0, 2, 3, 4, 5}, {0, 1, 2, 3, 5, 4}};
  k.generator_names = {"cycle4", "swap01", "swap45"};
  k.surfaces.push_back({"tetrahedral_sphere", TetrahedralSphere()});
  return k;
}

std::vector<std::string> StandardTriangulationNames() {
  return {"boundary_simplex5", "boundary_simplex5_sphere",
          "double_pentachoron"};
}

GTriangulation StandardTriangulation(const std::string& name) {
  if (name == "boundary_simplex5") return BoundaryOfSimplex5();
  if (name == "boundary_simplex5_sphere") return BoundaryOfSimplex5WithSphere();
  if (name == "double_pentachoron") return DoublePentachoron();
  throw Error(ErrorCode::kUnknownName, "no triangulation named " + name);
}

}  // namespace etd

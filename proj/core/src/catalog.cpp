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

#include "etd/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include <boost/rational.hpp>

#include "etd/error.hpp"
#include "etd/group.hpp"

namespace etd {

std::string ExpectedReport::Parameters() const {
  return "(" + std::to_string(genus) + "; " + std::to_string(k[0]) + "," +
         std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

namespace {

// ---------------------------------------------------------------------------
// Simple graphs from counterclockwise neighbor lists.

struct GraphMap {
  Perm e, r;
  std::map<std::pair<int, int>, Dart> dart;  // (u, v) -> dart from u to v
  std::vector<int> tail;                     // per dart, its vertex
};

GraphMap FromNeighborLists(const std::vector<std::vector<int>>& nbrs) {
  GraphMap g;
  for (int u = 0; u < static_cast<int>(nbrs.size()); ++u) {
    for (int v : nbrs[u]) {
      g.dart[{u, v}] = static_cast<Dart>(g.tail.size());
      g.tail.push_back(u);
    }
  }
  const int n = static_cast<int>(g.tail.size());
  g.e.assign(n, -1);
  g.r.assign(n, -1);
  for (int u = 0; u < static_cast<int>(nbrs.size()); ++u) {
    const int deg = static_cast<int>(nbrs[u].size());
    for (int k = 0; k < deg; ++k) {
      const int v = nbrs[u][k];
      const Dart d = g.dart.at({u, v});
      g.r[d] = g.dart.at({u, nbrs[u][(k + 1) % deg]});
      auto back = g.dart.find({v, u});
      if (back == g.dart.end()) {
        throw Error(ErrorCode::kInternal, "neighbor lists are not symmetric");
      }
      g.e[d] = back->second;
    }
  }
  return g;
}

// The dart permutation induced by a vertex map.
Perm VertexMapOnDarts(const GraphMap& g, const std::vector<int>& f) {
  Perm p(g.tail.size());
  for (const auto& [uv, d] : g.dart) p[d] = g.dart.at({f[uv.first], f[uv.second]});
  return p;
}

std::vector<Color> EdgeColors(const GraphMap& g,
                              const std::map<std::pair<int, int>, Color>& c) {
  std::vector<Color> out(g.tail.size());
  for (const auto& [uv, d] : g.dart) {
    auto it = c.find({std::min(uv.first, uv.second),
                      std::max(uv.first, uv.second)});
    if (it != c.end()) out[d] = it->second;
  }
  return out;
}

using Edge = std::pair<int, int>;

std::vector<std::vector<int>> Adjacency(int nv, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(nv);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Counterclockwise order of neighbors for a straight-line drawing.
std::vector<std::vector<int>> PlanarRotations(
    const std::vector<std::array<double, 2>>& pts,
    const std::vector<Edge>& edges) {
  auto adj = Adjacency(static_cast<int>(pts.size()), edges);
  for (int u = 0; u < static_cast<int>(pts.size()); ++u) {
    auto angle = [&](int v) {
      return std::atan2(pts[v][1] - pts[u][1], pts[v][0] - pts[u][0]);
    };
    std::sort(adj[u].begin(), adj[u].end(),
              [&](int a, int b) { return angle(a) < angle(b); });
  }
  return adj;
}

using Vec3 = std::array<double, 3>;

Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
double Dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
Vec3 Normalize(const Vec3& a) {
  const double l = std::sqrt(Dot(a, a));
  return {a[0] / l, a[1] / l, a[2] / l};
}

// Counterclockwise order seen from outside, for points around the origin.
std::vector<std::vector<int>> SphereRotations(const std::vector<Vec3>& pts,
                                              const std::vector<Edge>& edges) {
  auto adj = Adjacency(static_cast<int>(pts.size()), edges);
  for (int u = 0; u < static_cast<int>(pts.size()); ++u) {
    const Vec3 n = Normalize(pts[u]);
    const Vec3 a = Normalize(Cross(n, {0.3, 0.7, 0.1}));
    const Vec3 b = Cross(n, a);
    auto angle = [&](int v) {
      const Vec3 w = {pts[v][0] - pts[u][0], pts[v][1] - pts[u][1],
                      pts[v][2] - pts[u][2]};
      return std::atan2(Dot(w, b), Dot(w, a));
    };
    std::sort(adj[u].begin(), adj[u].end(),
              [&](int x, int y) { return angle(x) < angle(y); });
  }
  return adj;
}

int FindPoint(const std::vector<Vec3>& pts, const Vec3& p) {
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    const Vec3 d = {pts[i][0] - p[0], pts[i][1] - p[1], pts[i][2] - p[2]};
    if (Dot(d, d) < 1e-9) return i;
  }
  throw Error(ErrorCode::kInternal, "point is not a vertex");
}

std::vector<int> MapPoints(const std::vector<Vec3>& pts,
                           const std::array<std::array<int, 3>, 3>& matrix) {
  std::vector<int> f(pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    Vec3 q = {0, 0, 0};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) q[r] += matrix[r][c] * pts[i][c];
    }
    f[i] = FindPoint(pts, q);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Line arrangements on the torus.

using Q = boost::rational<long long>;

Q Floor(const Q& x) {
  const long long n = x.numerator(), d = x.denominator();
  return Q(n >= 0 ? n / d : -((-n + d - 1) / d));
}
Q Frac(const Q& x) { return x - Floor(x); }

// x, y with a x + b y = 1 for coprime a, b.
std::pair<long long, long long> Bezout(long long a, long long b) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long long q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_s, old_t};
}

struct TorusLine {
  int a = 1, b = 0;  // direction (a, b); b x - a y is constant on the line
  Q s;               // the constant, mod 1
  Color color;
  Q x0, y0;          // a point of the line
};

TorusLine MakeLine(int a, int b, Q s, Color color) {
  TorusLine l;
  l.a = a;
  l.b = b;
  l.s = Frac(s);
  l.color = color;
  // b u - a v = 1 gives the point (s u, s v).
  const auto [u, w] = Bezout(b, -a);
  l.x0 = l.s * u;
  l.y0 = l.s * w;
  return l;
}

using TorusPoint = std::pair<Q, Q>;

TorusPoint PointAt(const TorusLine& l, const Q& t) {
  return {Frac(l.x0 + t * l.a), Frac(l.y0 + t * l.b)};
}

// Dart key: a vertex and the integer direction of the leaving segment.
using DartKey = std::tuple<Q, Q, int, int>;

struct TorusBuild {
  ShadowDiagram diagram;
  std::map<DartKey, Dart> index;
  std::vector<DartKey> key;
};

std::optional<TorusBuild> BuildArrangement(const std::vector<TorusLine>& lines) {
  const int nl = static_cast<int>(lines.size());
  std::vector<std::set<Q>> params(nl);
  std::map<TorusPoint, std::set<int>> through;
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nl; ++j) {
      if (i == j) continue;
      const TorusLine& l1 = lines[i];
      const TorusLine& l2 = lines[j];
      const long long det =
          static_cast<long long>(l1.a) * l2.b - static_cast<long long>(l2.a) * l1.b;
      if (det == 0) {
        if (l1.s == l2.s) return std::nullopt;  // coincident lines
        continue;
      }
      const Q c = l2.s - (l1.x0 * l2.b - l1.y0 * l2.a);
      for (long long k = 0; k < std::llabs(det); ++k) {
        const Q t = Frac((c + Q(k)) / Q(det));
        params[i].insert(t);
        through[PointAt(l1, t)].insert(i);
      }
    }
  }
  for (const auto& [p, set] : through) {
    if (set.size() > 2) return std::nullopt;  // triple point
  }
  TorusBuild out;
  std::vector<int> e;
  std::vector<Color> colors;
  auto add = [&](const DartKey& k, Color c) {
    const Dart d = static_cast<Dart>(out.key.size());
    out.index[k] = d;
    out.key.push_back(k);
    e.push_back(-1);
    colors.push_back(c);
    return d;
  };
  for (int i = 0; i < nl; ++i) {
    const TorusLine& l = lines[i];
    const std::vector<Q> ts(params[i].begin(), params[i].end());
    if (ts.empty()) return std::nullopt;
    const int n = static_cast<int>(ts.size());
    for (int k = 0; k < n; ++k) {
      const TorusPoint p = PointAt(l, ts[k]);
      const TorusPoint q = PointAt(l, ts[(k + 1) % n]);
      const Dart f = add({p.first, p.second, l.a, l.b}, l.color);
      const Dart b = add({q.first, q.second, -l.a, -l.b}, l.color);
      e[f] = b;
      e[b] = f;
    }
  }
  // Rotation: darts at each point sorted by angle.
  std::map<TorusPoint, std::vector<Dart>> at;
  for (Dart d = 0; d < static_cast<Dart>(out.key.size()); ++d) {
    const auto& [x, y, dx, dy] = out.key[d];
    at[{x, y}].push_back(d);
  }
  Perm r(out.key.size());
  for (auto& [p, ds] : at) {
    std::sort(ds.begin(), ds.end(), [&](Dart u, Dart v) {
      return std::atan2(std::get<3>(out.key[u]), std::get<2>(out.key[u])) <
             std::atan2(std::get<3>(out.key[v]), std::get<2>(out.key[v]));
    });
    for (size_t k = 0; k < ds.size(); ++k) r[ds[k]] = ds[(k + 1) % ds.size()];
  }
  out.diagram =
      ShadowDiagram(CombMap::Build(std::move(e), std::move(r)), colors, {});
  return out;
}

Perm TorusMotion(const TorusBuild& t, int sign, const Q& dx, const Q& dy) {
  Perm p(t.key.size());
  for (Dart d = 0; d < static_cast<Dart>(t.key.size()); ++d) {
    const auto& [x, y, ux, uy] = t.key[d];
    const DartKey image = {Frac(Q(sign) * x + dx), Frac(Q(sign) * y + dy),
                           sign * ux, sign * uy};
    auto it = t.index.find(image);
    if (it == t.index.end()) {
      throw Error(ErrorCode::kInternal, "torus motion does not preserve lines");
    }
    p[d] = it->second;
  }
  return p;
}

long long Det(const Slope& u, const Slope& v) {
  return static_cast<long long>(u.first) * v.second -
         static_cast<long long>(v.first) * u.second;
}

// ---------------------------------------------------------------------------
// The doubled pair of pants: genus two with a dihedral action of order 12.
//
// Hole circle k (k mod 3) carries ten vertices j = 0..9. Positions 0..4 are
// the east points E(L), L = j - 2, and positions 5..9 the west points W(L),
// L = 7 - j. For each k and L, a top and a bottom arc join E_k(L) to
// W_{k+1}(L); top arcs lie in one copy of the pants and bottom arcs in the
// other, so the two arcs close up to a curve crossing circles k and k + 1.

struct Pants {
  static int Mod(int a, int n) { return ((a % n) + n) % n; }
  static Dart Fwd(int k, int j) { return (Mod(k, 3) * 10 + Mod(j, 10)) * 2; }
  static Dart Bwd(int k, int j) { return Fwd(k, j) + 1; }
  // end 0 sits at the east point, end 1 at the west point.
  static Dart Arc(int k, int level, int copy, int end) {
    return 60 + ((Mod(k, 3) * 5 + (level + 2)) * 2 + copy) * 2 + end;
  }
};

struct PantsColors {
  Color circle;
  std::array<Color, 3> layer;  // by |L|
};

ShadowDiagram DoubledPants(const PantsColors& pc) {
  const int n = 120;
  Perm e(n), r(n);
  std::vector<Color> colors(n);
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 10; ++j) {
      e[Pants::Fwd(k, j)] = Pants::Bwd(k, j + 1);
      e[Pants::Bwd(k, j + 1)] = Pants::Fwd(k, j);
      colors[Pants::Fwd(k, j)] = pc.circle;
      colors[Pants::Bwd(k, j)] = pc.circle;
      Dart top, bot;
      if (j <= 4) {
        top = Pants::Arc(k, j - 2, 0, 0);
        bot = Pants::Arc(k, j - 2, 1, 0);
      } else {
        top = Pants::Arc(k - 1, 7 - j, 0, 1);
        bot = Pants::Arc(k - 1, 7 - j, 1, 1);
      }
      const Dart fwd = Pants::Fwd(k, j), bwd = Pants::Bwd(k, j);
      r[fwd] = bot;
      r[bot] = bwd;
      r[bwd] = top;
      r[top] = fwd;
    }
    for (int level = -2; level <= 2; ++level) {
      for (int copy = 0; copy < 2; ++copy) {
        const Dart east = Pants::Arc(k, level, copy, 0);
        const Dart west = Pants::Arc(k, level, copy, 1);
        e[east] = west;
        e[west] = east;
        colors[east] = colors[west] = pc.layer[std::abs(level)];
      }
    }
  }
  return ShadowDiagram(CombMap::Build(std::move(e), std::move(r)), colors, {});
}

DiagramAction PantsAction() {
  const int n = 120;
  Perm rho(n), pi(n), sigma(n);
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 10; ++j) {
      rho[Pants::Fwd(k, j)] = Pants::Fwd(k + 1, j);
      rho[Pants::Bwd(k, j)] = Pants::Bwd(k + 1, j);
      pi[Pants::Fwd(k, j)] = Pants::Fwd(-k, j + 5);
      pi[Pants::Bwd(k, j)] = Pants::Bwd(-k, j + 5);
      sigma[Pants::Fwd(k, j)] = Pants::Bwd(k, 4 - j);
      sigma[Pants::Bwd(k, j)] = Pants::Fwd(k, 4 - j);
    }
    for (int level = -2; level <= 2; ++level) {
      for (int copy = 0; copy < 2; ++copy) {
        for (int end = 0; end < 2; ++end) {
          const Dart x = Pants::Arc(k, level, copy, end);
          rho[x] = Pants::Arc(k + 1, level, copy, end);
          pi[x] = Pants::Arc(-k - 1, -level, copy, 1 - end);
          sigma[x] = Pants::Arc(k, -level, 1 - copy, end);
        }
      }
    }
  }
  return DiagramAction{{rho, pi, sigma}, {"rho", "pi", "sigma"}};
}

// ---------------------------------------------------------------------------
// Lifting helpers.

// The lift with shadows and bridge points forgotten.
ShadowDiagram WithoutShadows(const ShadowDiagram& d) {
  std::vector<Color> colors = d.colors();
  for (Color& c : colors) {
    if (c.kind == ColorKind::kShadow) c = Color::Scaffold();
  }
  return ShadowDiagram(d.surface(), colors, {});
}

// ---------------------------------------------------------------------------
// Entries.

ExpectedReport Expect(int g, std::array<int, 3> k, int action_order,
                      std::optional<AbelianGroup> h1 = std::nullopt) {
  ExpectedReport r;
  r.genus = g;
  r.k = k;
  r.action_order = action_order;
  r.h1 = std::move(h1);
  return r;
}

AbelianGroup FreeRank(int r) {
  AbelianGroup a;
  a.rank = r;
  return a;
}

CatalogEntry S4Genus0() {
  CatalogEntry c;
  c.name = "s4_genus0";
  c.diagram = ShadowDiagram(CombMap::Build({1, 0}, {0, 1}),
                            {Color::Scaffold(), Color::Scaffold()}, {});
  c.expected = Expect(0, {0, 0, 0}, 1, AbelianGroup{});
  c.note = "a single edge on the sphere";
  return c;
}

CatalogEntry Mirror(CatalogEntry c, const std::string& name) {
  const CombMap& m = c.diagram.surface();
  c.diagram = ShadowDiagram(CombMap::Build(m.edge_pairing(), Inverse(m.rotation())),
                            c.diagram.colors(), c.diagram.marked());
  c.name = name;
  c.note += "; orientation reversed by inverting the rotation";
  return c;
}

CatalogEntry D4Double() {
  // Axis points, left to right, then the corners of three nested rectangles.
  std::vector<std::array<double, 2>> pts = {
      {-4, 0},   {-3.5, 0}, {-3, 0},  {-2.5, 0}, {-2, 0},  {-1, 0},
      {-0.6, 0}, {-0.3, 0}, {0, 0},   {1, 0},    {2, 0}};
  const int kA = 4, kF1 = 5, kB = 9, kF2 = 10;
  std::vector<Edge> edges;
  std::map<Edge, Color> color;
  for (int i = 0; i + 1 < 11; ++i) edges.push_back({i, i + 1});
  const int left[3] = {3, 2, 1}, right[3] = {6, 7, 8};
  for (int k = 0; k < 3; ++k) {
    const double h = k + 1;
    const double xl = pts[left[k]][0], xr = pts[right[k]][0];
    const int base = static_cast<int>(pts.size());
    pts.push_back({xl, h});
    pts.push_back({xr, h});
    pts.push_back({xr, -h});
    pts.push_back({xl, -h});
    const int cycle[6] = {left[k], base, base + 1, right[k], base + 2, base + 3};
    for (int s = 0; s < 6; ++s) {
      const Edge ed = {std::min(cycle[s], cycle[(s + 1) % 6]),
                       std::max(cycle[s], cycle[(s + 1) % 6])};
      edges.push_back(ed);
      color[ed] = Color::Alpha(k + 1);
    }
  }
  const GraphMap g = FromNeighborLists(PlanarRotations(pts, edges));
  const ShadowDiagram base(CombMap::Build(g.e, g.r), EdgeColors(g, color), {});
  const CombMap& m = base.surface();
  const FiniteGroup d4 = FiniteGroup::Dihedral(4);
  const std::vector<int> cone_vertices = {kA, kF1, kB, kF2};
  auto rep_of = [&](int vertex) {
    return m.vertex_orbits()[m.vertex_index(g.dart.at(
        {vertex, vertex == kF2 ? kB : vertex + 1}))][0];
  };
  std::vector<Dart> cones;
  for (int v : cone_vertices) cones.push_back(rep_of(v));
  // Conjugacy class representatives for the cones: r, s, r^2, s r.
  const std::vector<std::vector<int>> choices = {{1, 3}, {4, 6}, {2}, {5, 7}};
  for (int ca : choices[0]) {
    for (int cf1 : choices[1]) {
      for (int cf2 : choices[3]) {
        std::map<Dart, int> mer = {{cones[0], ca}, {cones[1], cf1},
                                   {cones[2], 2}, {cones[3], cf2}};
        VoltageAssignment v;
        try {
          v = SolveEdgeVoltages(base, d4, mer, {}, cones);
        } catch (const Error&) {
          continue;
        }
        const ExpectedLift ex = ExpectedLiftParameters(base, v);
        if (ex.components != 1) continue;
        const CoverResult cover = DerivedCover(base, v);
        CatalogEntry c;
        c.name = "d4_double";
        c.diagram = cover.lifted;
        c.action = cover.deck;
        c.expected = Expect(2, {2, 2, 2}, 8, FreeRank(2));
        c.note =
            "dihedral cover of the sphere branched at cone points of orders "
            "4, 2, 2, 2; each family is the lift of one circle around the "
            "first two cone points";
        return c;
      }
    }
  }
  throw Error(ErrorCode::kInternal, "no consistent dihedral voltages");
}

CatalogEntry D6Entry(const std::string& name) {
  PantsColors pc;
  CatalogEntry c;
  c.name = name;
  if (name == "d6_double") {
    pc.circle = Color::Scaffold();
    pc.layer = {Color::Alpha(1), Color::Alpha(2), Color::Alpha(3)};
    c.expected = Expect(2, {2, 2, 2}, 12, FreeRank(2));
    c.note =
        "doubled pair of pants; every family is a set of doubled seams, so "
        "all three cut systems agree up to isotopy";
  } else {
    pc.circle = Color::Alpha(2);
    pc.layer = {Color::Alpha(1), Color::Alpha(3), Color::Scaffold()};
    c.expected = Expect(2, {0, 0, 2}, 12, AbelianGroup{});
    c.note =
        "doubled pair of pants; the hole circles form the second family and "
        "two parallel copies of the doubled seams form the first and third";
  }
  c.diagram = DoubledPants(pc);
  c.action = PantsAction();
  return c;
}

CatalogEntry S2xS2() {
  // Hexagon u1 v1 u2 v2 u3 v3 at positions 0..5, centre c = 6, and the
  // crossing w = 7 of the two outer chords at infinity.
  enum { U1, V1, U2, V2, U3, V3, C, W };
  const std::vector<std::vector<int>> nbrs = {
      {V1, C, V3},  {W, U2, U1},  {W, V2, V1},  {U3, C, U2},
      {W, V3, V2},  {W, U1, U3},  {U1, V2},     {V3, U3, U2, V1}};
  const GraphMap g = FromNeighborLists(nbrs);
  auto family = [](int a, int b) {  // arc u_a v_b
    return Color::Shadow((a + b) % 3 == 0 ? 3 : (a + b) % 3);
  };
  std::map<Edge, Color> color;
  auto set = [&](int x, int y, Color col) {
    color[{std::min(x, y), std::max(x, y)}] = col;
  };
  set(U1, V1, family(1, 1));
  set(V1, U2, family(2, 1));
  set(U2, V2, family(2, 2));
  set(V2, U3, family(3, 2));
  set(U3, V3, family(3, 3));
  set(V3, U1, family(1, 3));
  set(U1, C, family(1, 2));
  set(C, V2, family(1, 2));
  set(U2, W, family(2, 3));
  set(W, V3, family(2, 3));
  set(U3, W, family(3, 1));
  set(W, V1, family(3, 1));
  std::vector<Dart> marked;
  for (int v : {U1, V1, U2, V2, U3, V3}) marked.push_back(g.dart.at({v, nbrs[v][0]}));
  const ShadowDiagram base(CombMap::Build(g.e, g.r), EdgeColors(g, color),
                           marked);
  const FiniteGroup z2 = FiniteGroup::Cyclic(2);
  std::map<Dart, int> mer;
  for (Dart rep : base.marked()) mer[rep] = 1;
  const VoltageAssignment v = SolveEdgeVoltages(base, z2, mer);
  const CoverResult cover = DerivedCover(base, v);
  // The half-turn about c and w, lifted to fix the lifts of c.
  const Perm half = VertexMapOnDarts(g, {V2, U3, V3, U1, V1, U2, C, W});
  const CombMap& thick = cover.base.surface();
  const std::optional<Perm> f = AutomorphismFrom(thick, 0, half[0]);
  if (!f) throw Error(ErrorCode::kInternal, "half-turn does not extend");
  std::optional<Perm> lift = LiftAutomorphism(thick, cover.base_voltages, *f);
  if (!lift) throw Error(ErrorCode::kInternal, "half-turn does not lift");
  if (Compose(*lift, *lift) != IdentityPerm(static_cast<int>(lift->size()))) {
    *lift = Compose(*lift, cover.deck.generators[0]);
  }
  CatalogEntry c;
  c.name = "s2xs2_genus2";
  c.diagram = WithoutShadows(cover.lifted);
  c.action = DiagramAction{{cover.deck.generators[0], *lift}, {"tau", "rho"}};
  c.expected = Expect(2, {0, 0, 0}, 4, AbelianGroup{});
  c.note =
      "double cover of the sphere branched at the six bridge points of a "
      "K(3,3) shadow diagram of the unknotted torus; tau is the deck "
      "involution and rho lifts the half-turn of the hexagon";
  return c;
}

// Quaternion unit images for a homomorphism determined by i and j.
std::vector<int> QuaternionImage(const FiniteGroup& target, int image_i,
                                 int image_j, bool identity) {
  std::vector<int> image(8);
  for (int x = 0; x < 8; ++x) {
    if (identity) {
      image[x] = x;
      continue;
    }
    const int unit = x % 4;
    int y = 0;
    if (unit == 1) y = image_i;
    if (unit == 2) y = image_j;
    if (unit == 3) y = target.Mul(image_i, image_j);
    image[x] = y;
  }
  return image;
}

}  // namespace

CatalogEntry NaturalGenus1(int m, const std::array<Slope, 3>& slopes) {
  if (m < 1) throw Error(ErrorCode::kNonStandardSlopes, "m must be positive");
  for (const Slope& s : slopes) {
    if (std::gcd(std::abs(s.first), std::abs(s.second)) != 1) {
      throw Error(ErrorCode::kNonStandardSlopes,
                  "slope (" + std::to_string(s.first) + "," +
                      std::to_string(s.second) + ") is not primitive");
    }
  }
  bool any_transverse = false;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const long long det = std::llabs(Det(slopes[i], slopes[j]));
      if (det > 1) {
        throw Error(ErrorCode::kNonStandardSlopes,
                    "slopes " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " meet more than once");
      }
      if (det == 1) any_transverse = true;
    }
  }
  const bool parallel01 = Det(slopes[0], slopes[1]) == 0;
  const bool parallel12 = Det(slopes[1], slopes[2]) == 0;
  const bool parallel02 = Det(slopes[0], slopes[2]) == 0;
  const bool all_parallel = parallel01 && parallel12;
  // A scaffold direction when every family is parallel.
  Slope scaffold = {0, 0};
  if (!any_transverse) {
    const auto [u, v] = Bezout(slopes[0].first, slopes[0].second);
    scaffold = {-v, u};  // det(slope, scaffold) = a u + b v = 1
  }
  const bool with_rotation = !all_parallel;
  auto build = [&](const std::array<Q, 3>& delta,
                   const Q& delta_s) -> std::optional<TorusBuild> {
    std::vector<TorusLine> lines;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < m; ++j) {
        lines.push_back(MakeLine(slopes[i].first, slopes[i].second,
                                 (delta[i] + Q(j)) / Q(m), Color::Alpha(i + 1)));
      }
    }
    if (!any_transverse) {
      for (int j = 0; j < m; ++j) {
        lines.push_back(MakeLine(scaffold.first, scaffold.second,
                                 (delta_s + Q(j)) / Q(m), Color::Scaffold()));
      }
    }
    return BuildArrangement(lines);
  };
  std::optional<TorusBuild> t;
  std::array<Q, 3> chosen;
  if (all_parallel) {
    chosen = {Q(0), Q(1, 3), Q(2, 3)};
    t = build(chosen, Q(0));
  } else {
    const Q half(1, 2);
    for (int mask = 0; mask < 16 && !t; ++mask) {
      const std::array<Q, 3> delta = {(mask & 8) ? half : Q(0),
                                      (mask & 4) ? half : Q(0),
                                      (mask & 2) ? half : Q(0)};
      if ((parallel01 && delta[0] == delta[1]) ||
          (parallel12 && delta[1] == delta[2]) ||
          (parallel02 && delta[0] == delta[2])) {
        continue;
      }
      if (any_transverse && (mask & 1)) continue;
      t = build(delta, (mask & 1) ? half : Q(0));
      chosen = delta;
    }
  }
  if (!t) {
    throw Error(ErrorCode::kNonStandardSlopes,
                "no offsets avoid triple points");
  }
  CatalogEntry c;
  c.name = "natural_genus1";
  c.diagram = t->diagram;
  if (m > 1) {
    c.action.generators.push_back(TorusMotion(*t, 1, Q(1, m), Q(0)));
    c.action.names.push_back("tx");
    c.action.generators.push_back(TorusMotion(*t, 1, Q(0), Q(1, m)));
    c.action.names.push_back("ty");
  }
  if (with_rotation) {
    c.action.generators.push_back(TorusMotion(*t, -1, Q(0), Q(0)));
    c.action.names.push_back("rot");
  }
  IntMatrix rows;
  for (const Slope& s : slopes) rows.push_back({s.first, s.second});
  std::array<int, 3> k;
  for (int i = 0; i < 3; ++i) {
    k[i] = Det(slopes[i], slopes[(i + 1) % 3]) == 0 ? 1 : 0;
  }
  const int order = (with_rotation ? 2 : 1) * m * m;
  c.expected = Expect(1, k, order, Cokernel(rows, 2));
  c.note = "lines of slopes (" + std::to_string(slopes[0].first) + "," +
           std::to_string(slopes[0].second) + "), (" +
           std::to_string(slopes[1].first) + "," +
           std::to_string(slopes[1].second) + "), (" +
           std::to_string(slopes[2].first) + "," +
           std::to_string(slopes[2].second) + ") on the " + std::to_string(m) +
           " by " + std::to_string(m) + " torus";
  return c;
}

CatalogEntry Genus2StronglyMinimal(const std::string& name) {
  if (name == "d4_double") return D4Double();
  if (name == "d6_double" || name == "d6_s4") return D6Entry(name);
  throw Error(ErrorCode::kUnknownName, name);
}

CatalogEntry Standard(const std::string& name) {
  if (name == "s4_genus0") return S4Genus0();
  if (name == "cp2" || name == "cp2bar") {
    CatalogEntry c = NaturalGenus1(1, {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}});
    c.name = "cp2";
    if (name == "cp2bar") return Mirror(c, "cp2bar");
    return c;
  }
  if (name == "s1xs3") {
    CatalogEntry c = NaturalGenus1(1, {Slope{1, 0}, Slope{1, 0}, Slope{1, 0}});
    c.name = "s1xs3";
    return c;
  }
  if (name == "s2xs2_genus2") return S2xS2();
  if (name == "s4_suspension_genus2") {
    CatalogEntry c = D6Entry("d6_s4");
    c.name = "s4_suspension_genus2";
    return c;
  }
  throw Error(ErrorCode::kUnknownName, name);
}

CatalogEntry Q8LinkBase() {
  // Corners of the cube are bridge points, face centres are crossings of the
  // two diagonals of each face. A diagonal is a shadow arc; its family is
  // the face axis for even corners and the next axis for odd corners.
  std::vector<Vec3> pts;
  std::vector<std::array<int, 3>> corner;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        pts.push_back({x - 0.5, y - 0.5, z - 0.5});
        corner.push_back({x, y, z});
      }
    }
  }
  std::vector<std::pair<int, int>> centre;
  for (int ax = 0; ax < 3; ++ax) {
    for (int s = 0; s < 2; ++s) {
      Vec3 p = {0, 0, 0};
      p[ax] = s - 0.5;
      pts.push_back(p);
      centre.push_back({ax, s});
    }
  }
  std::vector<Edge> edges;
  std::map<Edge, Color> color;
  const int next_axis[3] = {1, 2, 0};
  for (int f = 0; f < 6; ++f) {
    const auto [ax, s] = centre[f];
    for (int c = 0; c < 8; ++c) {
      if (corner[c][ax] != s) continue;
      const Edge ed = {c, 8 + f};
      edges.push_back(ed);
      const bool even = (corner[c][0] + corner[c][1] + corner[c][2]) % 2 == 0;
      color[ed] = Color::Shadow((even ? ax : next_axis[ax]) + 1);
    }
  }
  const GraphMap g = FromNeighborLists(SphereRotations(pts, edges));
  std::vector<Dart> marked;
  for (int c = 0; c < 8; ++c) {
    marked.push_back(g.dart.lower_bound({c, 0})->second);
  }
  const ShadowDiagram base(CombMap::Build(g.e, g.r), EdgeColors(g, color),
                           marked);
  const CombMap& m = base.surface();
  const FiniteGroup q8 = FiniteGroup::Quaternion();
  std::vector<Dart> corner_rep(8);
  for (int c = 0; c < 8; ++c) {
    corner_rep[c] = m.vertex_orbits()[m.vertex_index(marked[c])][0];
  }
  std::optional<VoltageAssignment> found;
  for (int signs = 0; signs < 256 && !found; ++signs) {
    std::map<Dart, int> mer;
    for (int c = 0; c < 8; ++c) {
      const bool even = (corner[c][0] + corner[c][1] + corner[c][2]) % 2 == 0;
      const int unit = even ? 1 : 2;  // i or j
      mer[corner_rep[c]] = unit + ((signs >> c) & 1 ? 4 : 0);
    }
    VoltageAssignment v;
    try {
      v = SolveEdgeVoltages(base, q8, mer);
    } catch (const Error&) {
      continue;
    }
    VoltageAssignment thick_v = v;
    const Thickening th = ThickenShadows(base, &thick_v);
    bool closed = true;
    for (int i = 1; i <= 3 && closed; ++i) {
      for (const CurvePath& curve : CurvesOf(th.diagram, i)) {
        if (CurveHolonomy(th.diagram.surface(), thick_v, curve.darts) != 0) {
          closed = false;
          break;
        }
      }
    }
    if (closed) found = v;
  }
  if (!found) throw Error(ErrorCode::kInternal, "no quaternion coloring closes");
  CatalogEntry c;
  c.name = "q8_link_base";
  c.diagram = base;
  c.expected = Expect(0, {0, 0, 0}, 1, AbelianGroup{});
  c.expected.bridge = ExpectedBridge{4, {2, 2, 2}};
  c.voltages = *found;
  c.note =
      "cube drawn on the sphere: corners are bridge points, face diagonals "
      "are shadow arcs; meridians are +-i at even corners and +-j at odd "
      "corners, with signs chosen so that every arc neighborhood has "
      "trivial holonomy";
  const FiniteGroup z2 = FiniteGroup::Cyclic(2);
  const FiniteGroup z2z2 = FiniteGroup::Product(z2, z2);
  struct Spec {
    std::string name;
    const FiniteGroup* target;
    int i, j;
    bool identity;
    ExpectedReport expected;
  };
  const std::vector<Spec> specs = {
      {"z2_a0_b1", &z2, 0, 1, false, Expect(1, {0, 0, 0}, 2)},
      {"z2_a1_b0", &z2, 1, 0, false, Expect(1, {0, 0, 0}, 2)},
      {"z2_a1_b1", &z2, 1, 1, false, Expect(3, {1, 1, 1}, 2)},
      {"z2xz2", &z2z2, 2, 1, false, Expect(5, {1, 1, 1}, 4)},
      {"q8", &q8, 0, 0, true, Expect(17, {5, 5, 5}, 8)},
  };
  for (const Spec& s : specs) {
    VoltageReduction r;
    r.name = s.name;
    r.voltages = PushForward(*found, *s.target,
                             QuaternionImage(*s.target, s.i, s.j, s.identity));
    r.expected = s.expected;
    c.reductions.push_back(std::move(r));
  }
  return c;
}

std::vector<std::string> CatalogNames() {
  return {"s4_genus0", "cp2",        "cp2bar",   "s1xs3",
          "s2xs2_genus2", "s4_suspension_genus2", "d4_double",
          "d6_double", "d6_s4",      "q8_link_base"};
}

CatalogEntry ByName(const std::string& name) {
  if (name == "d4_double" || name == "d6_double" || name == "d6_s4") {
    return Genus2StronglyMinimal(name);
  }
  if (name == "q8_link_base") return Q8LinkBase();
  return Standard(name);
}

PolyhedralGraphData OctahedronTetrahedral() {
  const std::vector<Vec3> pts = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                 {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
  std::vector<Edge> edges;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (u / 2 != v / 2) edges.push_back({u, v});
    }
  }
  const GraphMap g = FromNeighborLists(SphereRotations(pts, edges));
  PolyhedralGraphData p;
  p.graph = CombMap::Build(g.e, g.r);
  const std::array<std::array<int, 3>, 3> cycle = {
      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  const std::array<std::array<int, 3>, 3> half = {
      {{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
  p.action.generators = {VertexMapOnDarts(g, MapPoints(pts, cycle)),
                         VertexMapOnDarts(g, MapPoints(pts, half))};
  p.action.names = {"c3", "z2"};
  p.center_order = 2;
  return p;
}

}  // namespace etd

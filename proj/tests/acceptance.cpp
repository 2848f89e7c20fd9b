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

// Runs each acceptance criterion and prints one PASS or FAIL line per
// criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "etd/catalog.hpp"
#include "etd/cover.hpp"
#include "etd/diagram.hpp"
#include "etd/invariants.hpp"
#include "etd/quotient.hpp"
#include "etd/symmetry.hpp"
#include "etd/triang.hpp"
#include "oracles.hpp"

namespace etd {
namespace {

// Collects failed checks for one criterion.
class Checks {
 public:
  template <typename A, typename B>
  void Equal(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream s;
      s << what << ": got " << actual << ", expected " << expected;
      failures_.push_back(s.str());
    }
  }
  void True(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // zero means no limit
  std::function<void(Checks&)> run;
};

int OrderFromTable(const FiniteGroup& g, int x) {
  int order = 1;
  for (int y = x; y != 0; y = g.table()[y][x]) ++order;
  return order;
}

std::vector<int> BranchOrders(const VoltageAssignment& v) {
  std::vector<int> out;
  for (const auto& [dart, x] : v.meridians) {
    const int o = OrderFromTable(v.group, x);
    if (o > 1) out.push_back(o);
  }
  return out;
}

std::vector<int> ConeOrders(const QuotientResult& q) {
  std::vector<int> out;
  for (const ConePoint& c : q.cones) out.push_back(c.order);
  return out;
}

std::vector<Perm> Named(const DiagramAction& a,
                        const std::vector<std::string>& names) {
  std::vector<Perm> out;
  for (size_t i = 0; i < a.generators.size(); ++i) {
    for (const auto& n : names) {
      if (a.NameOf(i) == n) out.push_back(a.generators[i]);
    }
  }
  return out;
}

std::string Str(const std::array<int, 3>& a) {
  return std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
         std::to_string(a[2]);
}

void Q8Family(Checks& c) {
  const CatalogEntry e = Q8LinkBase();
  const std::map<std::string, std::string> expected = {
      {"z2_a0_b1", "(1; 0,0,0)"}, {"z2_a1_b0", "(1; 0,0,0)"},
      {"z2_a1_b1", "(3; 1,1,1)"}, {"z2xz2", "(5; 1,1,1)"},
      {"q8", "(17; 5,5,5)"}};
  c.Equal(e.reductions.size(), expected.size(), "reduction count");
  for (const VoltageReduction& r : e.reductions) {
    const CoverResult cover = DerivedCover(e.diagram, r.voltages);
    const ValidationReport rep = ValidateTrisection(cover.lifted);
    c.True(rep.valid(), r.name + " lift validates");
    c.Equal(rep.Parameters(), expected.at(r.name), r.name + " parameters");
    const auto rh = oracle::RiemannHurwitzGenus(r.voltages.group.order(), 0,
                                                BranchOrders(r.voltages));
    c.True(rh.has_value(), r.name + " Riemann-Hurwitz is integral");
    if (rh) c.Equal(*rh, rep.genus, r.name + " Riemann-Hurwitz genus");
  }
  const std::vector<int> all4 =
      BranchOrders(*e.voltages);
  c.Equal(all4.size(), 8u, "branch point count");
  c.Equal(oracle::RiemannHurwitzGenus(8, 0, std::vector<int>(8, 4)).value_or(-1),
          17, "closed form for Q8");
  c.Equal(oracle::RiemannHurwitzGenus(2, 0, {1, 1, 1, 1, 2, 2, 2, 2})
              .value_or(-1),
          1, "closed form for Z2 with four branch points");
}

void Pu3(Checks& c) {
  const Pu3Parameters p = PU3Parameters(OctahedronTetrahedral());
  c.Equal(p.genus, 25, "g");
  c.Equal(p.k[0], 0, "k1");
  c.Equal(p.k[1] + p.k[2], 24, "k2 + k3");
  c.Equal(p.euler(), 3, "chi");
  const GenusBound b = FreeActionGenusBound(24, 25);
  c.True(b.holds, "free action genus bound holds");
  c.Equal(b.quotient_genus, 2, "mu");
}

void Classification(Checks& c) {
  struct Row {
    std::string name;
    std::string params;
    AbelianGroup h1;
    int order;
  };
  const std::vector<Row> rows = {
      {"cp2", "(1; 0,0,0)", {}, 2},
      {"s1xs3", "(1; 1,1,1)", {1, {}}, 1},
      {"s2xs2_genus2", "(2; 0,0,0)", {}, 4},
      {"d4_double", "(2; 2,2,2)", {2, {}}, 8},
      {"d6_double", "(2; 2,2,2)", {2, {}}, 12},
      {"d6_s4", "(2; 0,0,2)", {}, 12 * (2 - 1)},
  };
  for (const Row& row : rows) {
    const CatalogEntry e = ByName(row.name);
    const ValidationReport r = ValidateTrisection(e.diagram);
    c.True(r.valid(), row.name + " validates");
    c.Equal(r.Parameters(), row.params, row.name + " parameters");
    c.True(r.h1_x.has_value() && *r.h1_x == row.h1, row.name + " H1");
    c.Equal(CheckAction(e.diagram, e.action).order, row.order,
            row.name + " action order");
  }
}

void QuotientSuite(Checks& c) {
  const CatalogEntry s = ByName("s2xs2_genus2");
  const QuotientResult h = Quotient(s.diagram, s.action, Named(s.action, {"tau"}));
  c.Equal(h.diagram.genus(), 0, "hyperelliptic quotient genus");
  c.True(h.riemann_hurwitz_ok(), "hyperelliptic Riemann-Hurwitz");
  c.True(QuotientIsTrisection(h).report.valid(),
         "hyperelliptic quotient validates");

  const std::array<Slope, 3> slopes = {Slope{1, 0}, Slope{0, 1}, Slope{1, 1}};
  const CatalogEntry base = NaturalGenus1(1, slopes);
  for (int m = 2; m <= 4; ++m) {
    const CatalogEntry e = NaturalGenus1(m, slopes);
    const QuotientResult q =
        Quotient(e.diagram, e.action, Named(e.action, {"tx", "ty"}));
    c.True(q.riemann_hurwitz_ok(), "natural m=" + std::to_string(m) + " RH");
    c.True(IsIsomorphic(q.diagram.surface(), q.diagram.Labels(),
                        base.diagram.surface(), base.diagram.Labels()),
           "natural m=" + std::to_string(m) + " quotient is the base");
  }

  int produced = 0;
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    const GroupClosure g(e.action, e.diagram.surface().num_darts());
    for (const std::vector<Perm>& gens :
         {std::vector<Perm>{}, e.action.generators}) {
      const QuotientResult q = Quotient(e.diagram, e.action, gens);
      ++produced;
      c.True(q.riemann_hurwitz_ok(), name + " Riemann-Hurwitz");
      const auto rh = oracle::RiemannHurwitzGenus(
          q.subgroup_order, q.diagram.genus(), ConeOrders(q));
      c.Equal(rh.value_or(-1), e.diagram.genus(), name + " oracle genus");
    }
  }
  c.True(produced > 0, "quotients produced");
}

void TriangulationSuite(Checks& c) {
  for (const GTriangulation& k : {BoundaryOfSimplex5(), DoublePentachoron()}) {
    const TriParamReport r = TrisectionParameters(k, true);
    c.True(r.oracle_genus.has_value() && *r.oracle_genus == r.genus,
           k.name + " oracle genus equals counting genus");
    c.Equal(r.euler_simplices, 2, k.name + " chi from simplices");
    c.Equal(r.euler_trisection, 2, k.name + " chi from parameters");
  }
  c.Equal(TrisectionParameters(BoundaryOfSimplex5()).k[0], 19, "k1");
  const SurfaceBridge s = BridgeParameters(TetrahedralSphere(), "sphere");
  c.Equal(s.b, 12, "sphere b");
  c.Equal(Str(s.p), "4,4,6", "sphere p");
  c.Equal(s.euler_loops(), 2, "sphere chi");
  const SurfaceBridge t = BridgeParameters(SevenVertexTorus(), "torus");
  c.Equal(t.b, 42, "torus b");
  c.Equal(Str(t.p), "7,14,21", "torus p");
  c.Equal(t.euler_loops(), 0, "torus chi");
}

void Properties(Checks& c) {
  const CatalogEntry q8 = Q8LinkBase();
  for (const VoltageReduction& r : q8.reductions) {
    const CoverResult cover = DerivedCover(q8.diagram, r.voltages);
    const QuotientResult q =
        Quotient(cover.lifted, cover.deck, cover.deck.generators);
    c.True(IsIsomorphic(q.diagram.surface(), q.diagram.Labels(),
                        cover.base.surface(), cover.base.Labels()),
           r.name + " cover then quotient is the base");
  }

  std::mt19937 rng(2026);
  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    const CombMap& m = e.diagram.surface();
    const std::vector<std::int64_t> labels = e.diagram.Labels();
    const auto code = Canonicalize(m, labels).code;
    bool stable = true;
    for (int t = 0; t < 100 && stable; ++t) {
      const Perm pi = oracle::RandomPerm(m.num_darts(), rng);
      std::vector<std::int64_t> moved(labels.size());
      for (size_t d = 0; d < labels.size(); ++d) moved[pi[d]] = labels[d];
      stable = Canonicalize(Relabel(m, pi), moved).code == code;
    }
    c.True(stable, name + " canonical form under relabeling");
  }

  const std::vector<IntMatrix> inputs = {
      {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}},
      {{12, 0}, {0, 18}, {6, 6}},
      {{1, 2, 3, 4}, {2, 4, 6, 8}},
  };
  for (const IntMatrix& m : inputs) {
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    const auto expected = oracle::InvariantFactorsByMinors(m);
    bool stable = SmithNormalForm(m, cols).diagonal == expected;
    for (int t = 0; t < 100; ++t) {
      const IntMatrix x = oracle::MatMul(
          oracle::MatMul(oracle::RandomUnimodular(rows, rng), m),
          oracle::RandomUnimodular(cols, rng));
      stable = stable && SmithNormalForm(x, cols, false).diagonal == expected;
    }
    c.True(stable, "invariant factors under unimodular transforms");
  }

  for (const std::string& name : CatalogNames()) {
    const CatalogEntry e = ByName(name);
    const CombMap& m = e.diagram.surface();
    const GroupClosure g(e.action, m.num_darts());
    bool ok = true;
    for (CellKind kind : {CellKind::kVertex, CellKind::kEdge, CellKind::kFace}) {
      for (const auto& orbit : Orbits(g, m, kind)) {
        for (const CellId& cell : orbit) {
          ok = ok && orbit.size() * Stabilizer(g, m, cell).size() ==
                         static_cast<size_t>(g.order());
        }
      }
    }
    c.True(ok, name + " orbit-stabilizer");
  }
}

}  // namespace
}  // namespace etd

int main() {
  using etd::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "Q8 covering family", 10.0, etd::Q8Family},
      {2, "PU(3) parameters", 0.0, etd::Pu3},
      {3, "classification fixtures", 0.0, etd::Classification},
      {4, "quotient suite", 0.0, etd::QuotientSuite},
      {5, "triangulation suite", 60.0, etd::TriangulationSuite},
      {6, "property suites", 0.0, etd::Properties},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    etd::Checks checks;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool slow = cr.time_limit_s > 0 && seconds >= cr.time_limit_s;
    const bool pass = checks.failures().empty() && error.empty() && !slow;
    std::printf("criterion %d: %s  %s (%.2f s)\n", cr.number,
                pass ? "PASS" : "FAIL", cr.title.c_str(), seconds);
    for (const std::string& f : checks.failures()) {
      std::printf("    %s\n", f.c_str());
    }
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (slow) std::printf("    exceeded %.0f s\n", cr.time_limit_s);
    if (!pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

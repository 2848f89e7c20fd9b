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

// Command-line front end: validate, quotient, lift, invariants, catalog and
// triang. Exit codes: 0 success, 1 parse or usage error, 2 semantic failure.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "etd/catalog.hpp"
#include "etd/cover.hpp"
#include "etd/diagram.hpp"
#include "etd/error.hpp"
#include "etd/invariants.hpp"
#include "etd/io.hpp"
#include "etd/quotient.hpp"
#include "etd/symmetry.hpp"
#include "etd/triang.hpp"
#include "json.hpp"

namespace {

using etd::Error;
using etd::ErrorCode;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kParseExit = 1;
constexpr int kSemanticExit = 2;

// A failed command: exit code plus message.
struct Failure {
  int code;
  std::string message;
};

ordered_json Header(const std::string& command) {
  ordered_json j;
  j["format_version"] = etd::kFormatVersion;
  j["command"] = command;
  return j;
}

ordered_json ToJson(const etd::AbelianGroup& g) {
  return {{"rank", g.rank}, {"torsion", g.torsion}, {"text", g.ToString()}};
}

ordered_json ToJson(const etd::ValidationReport& r) {
  ordered_json j;
  j["well_formed"] = r.well_formed;
  if (!r.error.empty()) j["error"] = r.error;
  j["genus"] = r.genus;
  j["cut_systems"] = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    const auto& c = r.cut[i];
    j["cut_systems"].push_back({{"family", i + 1},
                                {"valid", c.valid},
                                {"curves", c.curves},
                                {"minimal", c.minimal},
                                {"reason", c.reason}});
  }
  j["pairs"] = ordered_json::array();
  for (const auto& p : r.pairs) {
    j["pairs"].push_back({{"i", p.i},
                          {"j", p.j},
                          {"verdict", etd::ToString(p.verdict)},
                          {"k", p.k},
                          {"quotient", ToJson(p.quotient)},
                          {"search_nodes", p.search_nodes},
                          {"note", p.note}});
  }
  j["shadow"] = {{"valid", r.shadow.valid}, {"reason", r.shadow.reason}};
  if (r.shadow.bridge) {
    const auto& b = *r.shadow.bridge;
    j["bridge"] = {{"b", b.b},
                   {"p", b.p},
                   {"euler_surface", b.euler_loops},
                   {"euler_complex", b.euler_complex}};
  }
  if (r.euler_x) j["euler"] = *r.euler_x;
  if (r.h1_x) j["h1"] = ToJson(*r.h1_x);
  j["parameters"] = r.Parameters();
  j["weakest"] = etd::ToString(r.weakest());
  j["valid"] = r.valid();
  return j;
}

ordered_json ToJson(const etd::ActionCheck& a) {
  ordered_json j;
  j["valid"] = a.valid;
  j["order"] = a.order;
  if (!a.valid) j["violation"] = a.violation;
  j["structure"] = a.structure;
  ordered_json orders = ordered_json::object();
  for (const auto& [o, n] : a.element_orders) orders[std::to_string(o)] = n;
  j["element_orders"] = orders;
  return j;
}

void PrintReport(std::ostream& out, const etd::ValidationReport& r) {
  out << "genus: " << r.genus << "\n";
  if (!r.well_formed) {
    out << "malformed: " << r.error << "\n";
    return;
  }
  for (int i = 0; i < 3; ++i) {
    const auto& c = r.cut[i];
    out << "alpha " << i + 1 << ": " << (c.valid ? "cut system" : "invalid")
        << ", " << c.curves << (c.curves == 1 ? " curve" : " curves") << (c.minimal ? ", minimal" : "");
    if (!c.reason.empty()) out << " (" << c.reason << ")";
    out << "\n";
  }
  for (const auto& p : r.pairs) {
    out << "pair (" << p.i << "," << p.j << "): " << etd::ToString(p.verdict)
        << ", k = " << p.k << ", H1 quotient " << p.quotient.ToString();
    if (!p.note.empty()) out << " (" << p.note << ")";
    out << "\n";
  }
  out << "shadows: " << (r.shadow.valid ? "ok" : "invalid");
  if (!r.shadow.reason.empty()) out << " (" << r.shadow.reason << ")";
  out << "\n";
  if (r.shadow.bridge) {
    const auto& b = *r.shadow.bridge;
    out << "bridge: (" << b.b << "; " << b.p[0] << "," << b.p[1] << ","
        << b.p[2] << "), chi(S) = " << b.euler_loops << "\n";
  }
  out << "parameters: " << r.Parameters() << "\n";
  if (r.euler_x) out << "chi(X) = " << *r.euler_x << "\n";
  if (r.h1_x) out << "H1(X) = " << r.h1_x->ToString() << "\n";
}

void PrintAction(std::ostream& out, const etd::ActionCheck& a) {
  if (!a.valid) {
    out << "action: invalid (" << a.violation << ")\n";
    return;
  }
  out << "action: order " << a.order << " (" << a.structure << ")\n";
}

// Compares a report to an expectation; returns the mismatches.
std::vector<std::string> Mismatches(const etd::ValidationReport& r,
                                    const etd::ExpectedReport& x,
                                    std::optional<int> action_order) {
  std::vector<std::string> out;
  if (r.Parameters() != x.Parameters()) {
    out.push_back("parameters " + r.Parameters() + ", expected " +
                  x.Parameters());
  }
  if (x.bridge) {
    const auto& b = r.shadow.bridge;
    if (!b || b->b != x.bridge->b || b->p != x.bridge->p) {
      out.push_back("bridge data differs from the expectation");
    }
  }
  if (x.h1 && (!r.h1_x || !(*r.h1_x == *x.h1))) {
    out.push_back("H1(X) " + (r.h1_x ? r.h1_x->ToString() : "?") +
                  ", expected " + x.h1->ToString());
  }
  if (action_order && *action_order != x.action_order) {
    out.push_back("action order " + std::to_string(*action_order) +
                  ", expected " + std::to_string(x.action_order));
  }
  return out;
}

etd::DiagramFile LoadDiagram(const std::string& path) {
  return etd::ParseDiagram(etd::ReadText(path));
}

etd::ValidationOptions Options(int budget) {
  etd::ValidationOptions o;
  o.tier2_budget = budget;
  return o;
}

void Emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct Common {
  std::string path;
  bool json = false;
  int budget = -1;
  std::string output;
};

int Validate(const Common& c) {
  const etd::DiagramFile f = LoadDiagram(c.path);
  const etd::ValidationReport r =
      etd::ValidateTrisection(f.diagram, Options(c.budget));
  std::optional<etd::ActionCheck> action;
  if (!f.action.generators.empty()) {
    action = etd::CheckAction(f.diagram, f.action);
  }
  std::vector<std::string> mismatch;
  if (f.expect) {
    mismatch = Mismatches(r, *f.expect,
                          action ? std::optional<int>(action->order)
                                 : std::optional<int>());
  }
  const bool ok = r.valid() && (!action || action->valid) && mismatch.empty();
  if (c.json) {
    ordered_json j = Header("validate");
    j["name"] = f.name;
    j["report"] = ToJson(r);
    if (action) j["action"] = ToJson(*action);
    j["mismatches"] = mismatch;
    j["ok"] = ok;
    Emit(j);
  } else {
    if (!f.name.empty()) std::cout << "name: " << f.name << "\n";
    PrintReport(std::cout, r);
    if (action) PrintAction(std::cout, *action);
    for (const auto& m : mismatch) std::cout << "mismatch: " << m << "\n";
    std::cout << (ok ? "valid" : "invalid") << "\n";
  }
  return ok ? kOk : kSemanticExit;
}

int QuotientCmd(const Common& c, const std::vector<std::string>& subgroup) {
  const etd::DiagramFile f = LoadDiagram(c.path);
  std::vector<etd::Perm> gens;
  for (const std::string& name : subgroup) {
    bool found = false;
    for (size_t i = 0; i < f.action.generators.size() && !found; ++i) {
      if (f.action.NameOf(i) == name) {
        gens.push_back(f.action.generators[i]);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::kUnknownName, "no generator " + name);
  }
  const etd::QuotientResult q = etd::Quotient(f.diagram, f.action, gens);
  const etd::QuotientVerdict v =
      etd::QuotientIsTrisection(q, Options(c.budget));
  etd::DiagramFile out;
  out.name = (f.name.empty() ? "diagram" : f.name) + ".quotient";
  out.diagram = q.diagram;
  out.action = q.induced;
  out.cones = q.cones;
  if (!c.output.empty()) etd::WriteText(c.output, etd::WriteDiagram(out));
  const bool ok =
      q.riemann_hurwitz_ok() && v.verdict != etd::ManifoldVerdict::kNo;
  if (c.json) {
    ordered_json j = Header("quotient");
    j["name"] = f.name;
    j["subgroup_order"] = q.subgroup_order;
    j["genus"] = q.diagram.surface().Genus();
    ordered_json cones = ordered_json::array();
    for (const auto& cp : q.cones) {
      cones.push_back({{"cell", etd::ToString(cp.cell)}, {"order", cp.order}});
    }
    j["cones"] = cones;
    j["euler_upstairs"] = q.euler_upstairs;
    j["euler_predicted"] = q.euler_predicted;
    j["riemann_hurwitz"] = q.riemann_hurwitz_ok();
    j["verdict"] = etd::ToString(v.verdict);
    j["report"] = ToJson(v.report);
    j["induced_action"] = ToJson(q.induced_check);
    if (!c.output.empty()) j["output"] = c.output;
    j["ok"] = ok;
    Emit(j);
  } else {
    std::cout << "subgroup order: " << q.subgroup_order << "\n";
    std::cout << "quotient genus: " << q.diagram.surface().Genus() << "\n";
    for (const auto& cp : q.cones) {
      std::cout << "cone point " << etd::ToString(cp.cell) << " of order "
                << cp.order << "\n";
    }
    std::cout << "Riemann-Hurwitz: chi = " << q.euler_upstairs
              << ", predicted " << q.euler_predicted << "\n";
    PrintReport(std::cout, v.report);
    PrintAction(std::cout, q.induced_check);
    std::cout << "verdict: " << etd::ToString(v.verdict) << "\n";
    if (!c.output.empty()) std::cout << "wrote " << c.output << "\n";
  }
  return ok ? kOk : kSemanticExit;
}

int Lift(const Common& c, bool check_expected) {
  const etd::DiagramFile f = LoadDiagram(c.path);
  if (!f.voltages) throw Error(ErrorCode::kVoltageIncompatible,
                               "the file carries no voltages");
  const etd::CoverResult cover = etd::DerivedCover(f.diagram, *f.voltages);
  const etd::ValidationReport r =
      etd::ValidateTrisection(cover.lifted, Options(c.budget));
  etd::DiagramFile out;
  out.name = (f.name.empty() ? "diagram" : f.name) + ".lift";
  out.diagram = cover.lifted;
  out.action = cover.deck;
  if (!c.output.empty()) etd::WriteText(c.output, etd::WriteDiagram(out));
  std::vector<std::string> mismatch;
  if (check_expected) {
    if (!f.lift_expect) {
      mismatch.push_back("the file has no lift_expect line");
    } else if (r.Parameters() != f.lift_expect->Parameters()) {
      mismatch.push_back("parameters " + r.Parameters() + ", expected " +
                         f.lift_expect->Parameters());
    }
  }
  const bool rh = cover.expected.genus == r.genus;
  const bool ok = r.valid() && rh && mismatch.empty();
  if (c.json) {
    ordered_json j = Header("lift");
    j["name"] = f.name;
    j["group_order"] = f.voltages->group.order();
    j["riemann_hurwitz_genus"] = cover.expected.genus;
    j["riemann_hurwitz"] = rh;
    ordered_json branches = ordered_json::array();
    for (const auto& b : cover.branches) {
      branches.push_back({{"vertex", b.base_vertex},
                          {"marked", b.marked},
                          {"order", b.order}});
    }
    j["branches"] = branches;
    j["report"] = ToJson(r);
    j["deck"] = ToJson(cover.deck_check);
    j["mismatches"] = mismatch;
    if (!c.output.empty()) j["output"] = c.output;
    j["ok"] = ok;
    Emit(j);
  } else {
    std::cout << "group order: " << f.voltages->group.order() << "\n";
    std::cout << "Riemann-Hurwitz genus: " << cover.expected.genus << "\n";
    PrintReport(std::cout, r);
    PrintAction(std::cout, cover.deck_check);
    for (const auto& m : mismatch) std::cout << "mismatch: " << m << "\n";
    if (!c.output.empty()) std::cout << "wrote " << c.output << "\n";
    std::cout << (ok ? "ok" : "failed") << "\n";
  }
  return ok ? kOk : kSemanticExit;
}

int Invariants(const Common& c) {
  const etd::DiagramFile f = LoadDiagram(c.path);
  const etd::ValidationReport r =
      etd::ValidateTrisection(f.diagram, Options(c.budget));
  const etd::CombMap& m = f.diagram.surface();
  const etd::AbelianGroup h1_surface = etd::HomologyOfMap(m);
  std::vector<std::optional<etd::AbelianGroup>> family(3);
  for (int i = 1; i <= 3; ++i) {
    if (r.cut[i - 1].valid) family[i - 1] = etd::H1ModCurves(f.diagram, {i});
  }
  std::optional<etd::ActionCheck> action;
  std::optional<etd::SingularReport> singular;
  std::array<int, 3> orbit_counts = {0, 0, 0};
  if (!f.action.generators.empty()) {
    action = etd::CheckAction(f.diagram, f.action);
    if (action->valid) {
      const etd::GroupClosure g(f.action, m.num_darts());
      singular = etd::SingularLocus(f.diagram, g);
      for (int k = 0; k < 3; ++k) {
        orbit_counts[k] = static_cast<int>(
            etd::Orbits(g, m, static_cast<etd::CellKind>(k)).size());
      }
    }
  }
  if (c.json) {
    ordered_json j = Header("invariants");
    j["name"] = f.name;
    j["genus"] = r.genus;
    j["h1_surface"] = ToJson(h1_surface);
    ordered_json fam = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
      fam.push_back(family[i] ? ToJson(*family[i]) : ordered_json());
    }
    j["h1_handlebodies"] = fam;
    if (r.h1_x) j["h1"] = ToJson(*r.h1_x);
    if (r.euler_x) j["euler"] = *r.euler_x;
    j["parameters"] = r.Parameters();
    if (action) {
      j["action"] = ToJson(*action);
      j["orbits"] = {{"vertices", orbit_counts[0]},
                     {"edges", orbit_counts[1]},
                     {"faces", orbit_counts[2]}};
    }
    if (singular) {
      j["singular_cells"] = singular->singular_cells.size();
      j["hyperelliptic_involutions"] = singular->hyperelliptic.size();
    }
    Emit(j);
  } else {
    if (!f.name.empty()) std::cout << "name: " << f.name << "\n";
    std::cout << "genus: " << r.genus << "\n";
    std::cout << "H1(Sigma) = " << h1_surface.ToString() << "\n";
    for (int i = 0; i < 3; ++i) {
      std::cout << "H1(Sigma)/alpha " << i + 1 << " = "
                << (family[i] ? family[i]->ToString() : "n/a") << "\n";
    }
    std::cout << "parameters: " << r.Parameters() << "\n";
    if (r.euler_x) std::cout << "chi(X) = " << *r.euler_x << "\n";
    std::cout << "H1(X) = " << (r.h1_x ? r.h1_x->ToString() : "n/a") << "\n";
    if (action) {
      PrintAction(std::cout, *action);
      if (action->valid) {
        std::cout << "orbits: " << orbit_counts[0] << " vertices, "
                  << orbit_counts[1] << " edges, " << orbit_counts[2]
                  << " faces\n";
      }
    }
    if (singular) {
      std::cout << "singular cells: " << singular->singular_cells.size()
                << "\n";
      std::cout << "hyperelliptic involutions: "
                << singular->hyperelliptic.size() << "\n";
    }
  }
  return r.well_formed ? kOk : kSemanticExit;
}

std::vector<int> ParseInts(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad integer list '" + text + "'");
    }
  }
  return out;
}

int Catalog(const std::string& name, const std::string& write_dir, bool json,
            int m, const std::string& slopes) {
  std::vector<std::string> names;
  if (name.empty()) {
    if (write_dir.empty()) {
      if (json) {
        ordered_json j = Header("catalog");
        j["diagrams"] = etd::CatalogNames();
        j["triangulations"] = etd::StandardTriangulationNames();
        Emit(j);
      } else {
        for (const auto& n : etd::CatalogNames()) std::cout << n << "\n";
        for (const auto& n : etd::StandardTriangulationNames()) {
          std::cout << n << " (triangulation)\n";
        }
      }
      return kOk;
    }
    names = etd::CatalogNames();
    for (const auto& n : etd::StandardTriangulationNames()) names.push_back(n);
  } else {
    names = {name};
  }
  ordered_json entries = ordered_json::array();
  for (const std::string& n : names) {
    const auto tri = etd::StandardTriangulationNames();
    if (std::find(tri.begin(), tri.end(), n) != tri.end()) {
      const etd::GTriangulation k = etd::StandardTriangulation(n);
      const std::string text = etd::WriteTriangulation(k);
      if (!write_dir.empty()) {
        etd::WriteText(write_dir + "/" + n + ".etdt", text);
      } else if (!json) {
        std::cout << text;
      }
      entries.push_back({{"name", n}, {"kind", "triangulation"}});
      continue;
    }
    etd::CatalogEntry e;
    if (n == "natural_genus1") {
      const std::vector<int> s = ParseInts(slopes);
      if (s.size() != 6) {
        throw Error(ErrorCode::kParse, "--slopes needs six integers");
      }
      e = etd::NaturalGenus1(
          m, {etd::Slope{s[0], s[1]}, etd::Slope{s[2], s[3]},
              etd::Slope{s[4], s[5]}});
    } else {
      e = etd::ByName(n);
    }
    std::vector<etd::DiagramFile> files = {etd::FileOf(e)};
    for (auto& r : etd::ReductionFiles(e)) files.push_back(std::move(r));
    ordered_json written = ordered_json::array();
    for (const auto& f : files) {
      const std::string text = etd::WriteDiagram(f);
      if (!write_dir.empty()) {
        const std::string path = write_dir + "/" + f.name + ".etd";
        etd::WriteText(path, text);
        written.push_back(path);
      }
    }
    if (write_dir.empty() && !json) std::cout << etd::WriteDiagram(files[0]);
    if (!write_dir.empty() && !json) {
      for (const auto& p : written) std::cout << "wrote " << p.get<std::string>() << "\n";
    }
    entries.push_back({{"name", e.name},
                       {"kind", "diagram"},
                       {"expected", e.expected.Parameters()},
                       {"action_order", e.expected.action_order},
                       {"note", e.note},
                       {"files", written}});
  }
  if (json) {
    ordered_json j = Header("catalog");
    j["entries"] = entries;
    Emit(j);
  }
  return kOk;
}

int Triang(const Common& c, bool oracle) {
  const etd::GTriangulation k = etd::ParseTriangulation(etd::ReadText(c.path));
  const etd::TriParamReport r = etd::TrisectionParameters(k, oracle);
  const bool ok = r.euler_simplices == r.euler_trisection &&
                  (!r.oracle_genus || *r.oracle_genus == r.genus);
  if (c.json) {
    ordered_json j = Header("triang");
    j["name"] = k.name;
    j["counts"] = {{"vertices", r.counts.v},  {"edges", r.counts.e},
                   {"triangles", r.counts.f}, {"tetrahedra", r.counts.t},
                   {"pentachora", r.counts.p}};
    j["genus"] = r.genus;
    j["k"] = r.k;
    j["handlebody_genus"] = r.handlebody_genus;
    j["parameters"] = r.Parameters();
    j["euler_simplices"] = r.euler_simplices;
    j["euler_trisection"] = r.euler_trisection;
    if (r.oracle_genus) j["oracle_genus"] = *r.oracle_genus;
    j["group_order"] = r.group_order;
    ordered_json surfaces = ordered_json::array();
    for (const auto& s : r.surfaces) {
      surfaces.push_back({{"name", s.name},
                          {"b", s.b},
                          {"p", s.p},
                          {"euler", s.euler},
                          {"euler_loops", s.euler_loops()}});
    }
    j["surfaces"] = surfaces;
    j["notes"] = r.notes;
    j["ok"] = ok;
    Emit(j);
  } else {
    if (!k.name.empty()) std::cout << "name: " << k.name << "\n";
    std::cout << "simplices: " << r.counts.v << " " << r.counts.e << " "
              << r.counts.f << " " << r.counts.t << " " << r.counts.p << "\n";
    std::cout << "action order: " << r.group_order << "\n";
    std::cout << "parameters: " << r.Parameters() << "\n";
    std::cout << "chi(X) = " << r.euler_simplices << " from simplices, "
              << r.euler_trisection << " from 2 + g - (k1+k2+k3)\n";
    if (r.oracle_genus) {
      std::cout << "oracle genus: " << *r.oracle_genus
                << (*r.oracle_genus == r.genus ? " (matches)" : " (MISMATCH)")
                << "\n";
    }
    for (const auto& s : r.surfaces) {
      std::cout << "surface " << s.name << ": (" << s.b << "; " << s.p[0]
                << "," << s.p[1] << "," << s.p[2]
                << "), chi = " << s.euler_loops() << "\n";
    }
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  }
  return ok ? kOk : kSemanticExit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant trisection and bridge trisection diagrams"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool budget) {
    sub->add_option("file", common.path, "input file")->required();
    sub->add_flag("--json", common.json, "emit a JSON report");
    if (budget) {
      sub->add_option("--tier2-budget", common.budget,
                      "node cap of the standard-pattern search");
    }
  };

  auto* validate = app.add_subcommand("validate", "validate a diagram file");
  add_common(validate, true);

  std::vector<std::string> subgroup;
  auto* quotient = app.add_subcommand("quotient", "quotient by a subgroup");
  add_common(quotient, true);
  quotient->add_option("--subgroup", subgroup,
                       "generator names spanning the subgroup");
  quotient->add_option("-o,--output", common.output, "quotient diagram file");

  bool check_expected = false;
  auto* lift = app.add_subcommand("lift", "derived branched cover");
  add_common(lift, true);
  lift->add_flag("--check-expected", check_expected,
                 "compare with the lift_expect line");
  lift->add_option("-o,--output", common.output, "lifted diagram file");

  auto* invariants = app.add_subcommand("invariants", "homology and action");
  add_common(invariants, true);

  std::string name, write_dir, slopes = "1,0,0,1,1,1";
  int m = 1;
  bool catalog_json = false;
  auto* catalog = app.add_subcommand("catalog", "named fixtures");
  catalog->add_option("name", name, "entry name; omit to list");
  catalog->add_option("--write", write_dir, "directory to write files into");
  catalog->add_option("--m", m, "grid size for natural_genus1");
  catalog->add_option("--slopes", slopes,
                      "six integers a,b,c,d,e,f for natural_genus1");
  catalog->add_flag("--json", catalog_json, "emit a JSON report");

  bool oracle = false;
  auto* triang = app.add_subcommand("triang", "triangulation parameters");
  add_common(triang, false);
  triang->add_flag("--oracle", oracle, "assemble the central surface too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseExit;
  }

  // Errors while reading input are parse failures; everything else is
  // semantic.
  try {
    if (*validate) return Validate(common);
    if (*quotient) return QuotientCmd(common, subgroup);
    if (*lift) return Lift(common, check_expected);
    if (*invariants) return Invariants(common);
    if (*catalog) return Catalog(name, write_dir, catalog_json, m, slopes);
    if (*triang) return Triang(common, oracle);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParse ? kParseExit : kSemanticExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticExit;
  }
  return kOk;
}

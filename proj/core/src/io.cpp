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

#include "etd/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace etd {
namespace {

std::vector<std::string> Split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

struct Line {
  int number = 0;
  std::vector<std::string> words;
  std::string rest;  // text after the key, for free-text fields
};

[[noreturn]] void ParseFail(int line, const std::string& message) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message);
}

int ToInt(const Line& l, const std::string& w) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) {
    ParseFail(l.number, "expected an integer, got '" + w + "'");
  }
  return value;
}

std::vector<int> Ints(const Line& l, size_t from = 1) {
  std::vector<int> out;
  for (size_t i = from; i < l.words.size(); ++i) {
    out.push_back(ToInt(l, l.words[i]));
  }
  return out;
}

void Arity(const Line& l, size_t n) {
  if (l.words.size() != n + 1) {
    ParseFail(l.number, "'" + l.words[0] + "' takes " + std::to_string(n) +
                            " values");
  }
}

// Splits a document into keyed lines, checking the header and the end line.
// Written at the top of every file produced by the writers.
constexpr const char* kFileHeader =
    "# Copyright 2026 The Equivariant Trisection Diagrams Authors.\n"
    "#\n"
    "# Licensed under the Apache License, Version 2.0 (the \"License\");\n"
    "# you may not use this file except in compliance with the License.\n"
    "# You may obtain a copy of the License at\n"
    "#\n"
    "#      http://www.apache.org/licenses/LICENSE-2.0\n"
    "#\n"
    "# Unless required by applicable law or agreed to in writing, software\n"
    "# distributed under the License is distributed on an \"AS IS\" BASIS,\n"
    "# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.\n"
    "# See the License for the specific language governing permissions and\n"
    "# limitations under the License.\n";

std::vector<Line> Tokenize(const std::string& text, const std::string& magic) {
  std::istringstream in(text);
  std::string raw;
  std::vector<Line> lines;
  int number = 0;
  bool header = false, ended = false;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto words = Split(raw);
    if (words.empty() || words[0][0] == '#') continue;
    if (ended) ParseFail(number, "content after 'end'");
    if (!header) {
      if (words.size() != 2 || words[0] != magic) {
        ParseFail(number, "expected header '" + magic + " " +
                              std::to_string(kFormatVersion) + "'");
      }
      if (words[1] != std::to_string(kFormatVersion)) {
        ParseFail(number, "unsupported format version " + words[1]);
      }
      header = true;
      continue;
    }
    if (words.size() == 1 && words[0] == "end") {
      ended = true;
      continue;
    }
    Line l;
    l.number = number;
    l.words = words;
    const size_t at = raw.find(words[0]) + words[0].size();
    l.rest = raw.substr(at);
    const size_t start = l.rest.find_first_not_of(" \t");
    l.rest = start == std::string::npos ? "" : l.rest.substr(start);
    lines.push_back(std::move(l));
  }
  if (!header) ParseFail(number, "missing header");
  if (!ended) ParseFail(number, "missing 'end' (truncated file?)");
  return lines;
}

std::string JoinInts(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += " " + std::to_string(x);
  return out;
}

void CheckWord(const std::string& w, const std::string& what) {
  if (w.empty() || w.find_first_of(" \t\r\n") != std::string::npos ||
      w[0] == '#') {
    throw Error(ErrorCode::kParse, what + " '" + w + "' is not a single word");
  }
}

ExpectedReport ParseParameters(const Line& l) {
  Arity(l, 4);
  const auto v = Ints(l);
  ExpectedReport r;
  r.genus = v[0];
  r.k = {v[1], v[2], v[3]};
  return r;
}

std::string ParametersLine(const std::string& key, const ExpectedReport& r) {
  return key + " " + std::to_string(r.genus) + " " + std::to_string(r.k[0]) +
         " " + std::to_string(r.k[1]) + " " + std::to_string(r.k[2]) + "\n";
}

}  // namespace

DiagramFile ParseDiagram(const std::string& text) {
  const std::vector<Line> lines = Tokenize(text, "etd-diagram");
  DiagramFile file;
  int darts = -1;
  std::optional<Perm> e, r;
  std::vector<std::string> color_tags;
  std::vector<int> marked;
  std::vector<std::string> group_names;
  std::vector<std::vector<int>> group_rows;
  int group_order = -1;
  std::vector<std::string> edge_volt, corner_volt;
  std::vector<std::pair<int, std::string>> meridians;
  std::vector<int> voltage_cones;
  std::set<std::string> seen;
  std::optional<ExpectedReport> expect;
  int expect_line = 0;
  const std::set<std::string> repeatable = {"generator", "group_row",
                                            "meridian", "cone_point"};
  for (const Line& l : lines) {
    const std::string& key = l.words[0];
    if (!repeatable.count(key) && !seen.insert(key).second) {
      ParseFail(l.number, "duplicate key '" + key + "'");
    }
    auto need_darts = [&] {
      if (darts < 0) ParseFail(l.number, "'" + key + "' before 'darts'");
    };
    if (key == "name") {
      Arity(l, 1);
      file.name = l.words[1];
    } else if (key == "note") {
      file.note = l.rest;
    } else if (key == "darts") {
      Arity(l, 1);
      darts = ToInt(l, l.words[1]);
      if (darts < 0) ParseFail(l.number, "negative dart count");
    } else if (key == "edge_pairing" || key == "rotation") {
      need_darts();
      Arity(l, darts);
      (key == "edge_pairing" ? e : r) = Ints(l);
    } else if (key == "colors") {
      color_tags.assign(l.words.begin() + 1, l.words.end());
    } else if (key == "marked") {
      marked = Ints(l);
    } else if (key == "generator") {
      need_darts();
      Arity(l, darts + 1);
      CheckWord(l.words[1], "generator name");
      file.action.names.push_back(l.words[1]);
      file.action.generators.push_back(Ints(l, 2));
    } else if (key == "group") {
      if (l.words.size() < 2) ParseFail(l.number, "'group' needs an order");
      group_order = ToInt(l, l.words[1]);
      if (group_order < 1) ParseFail(l.number, "group order must be positive");
      Arity(l, group_order + 1);
      group_names.assign(l.words.begin() + 2, l.words.end());
    } else if (key == "group_row") {
      if (group_order < 0) ParseFail(l.number, "'group_row' before 'group'");
      Arity(l, group_order);
      group_rows.push_back(Ints(l));
    } else if (key == "edge_voltages" || key == "corner_voltages") {
      need_darts();
      Arity(l, darts);
      (key == "edge_voltages" ? edge_volt : corner_volt)
          .assign(l.words.begin() + 1, l.words.end());
    } else if (key == "meridian") {
      Arity(l, 2);
      meridians.push_back({ToInt(l, l.words[1]), l.words[2]});
    } else if (key == "voltage_cones") {
      voltage_cones = Ints(l);
    } else if (key == "cone_point") {
      Arity(l, 3);
      ConePoint c;
      if (l.words[1] == "vertex") {
        c.cell.kind = CellKind::kVertex;
      } else if (l.words[1] == "face") {
        c.cell.kind = CellKind::kFace;
      } else {
        ParseFail(l.number, "cone_point kind must be vertex or face");
      }
      c.cell.rep = ToInt(l, l.words[2]);
      c.order = ToInt(l, l.words[3]);
      file.cones.push_back(c);
    } else if (key == "expect") {
      expect = ParseParameters(l);
      expect_line = l.number;
    } else if (key == "expect_bridge" || key == "expect_h1" ||
               key == "expect_order") {
      // Attached after the loop, once 'expect' is known.
    } else if (key == "lift_expect") {
      file.lift_expect = ParseParameters(l);
    } else {
      ParseFail(l.number, "unknown key '" + key + "'");
    }
  }
  for (const Line& l : lines) {
    const std::string& key = l.words[0];
    if (key != "expect_bridge" && key != "expect_h1" && key != "expect_order") {
      continue;
    }
    if (!expect) ParseFail(l.number, "'" + key + "' without 'expect'");
    if (key == "expect_bridge") {
      Arity(l, 4);
      const auto v = Ints(l);
      expect->bridge = ExpectedBridge{v[0], {v[1], v[2], v[3]}};
    } else if (key == "expect_h1") {
      if (l.words.size() < 2) ParseFail(l.number, "'expect_h1' needs a rank");
      const auto v = Ints(l);
      AbelianGroup h;
      h.rank = v[0];
      h.torsion.assign(v.begin() + 1, v.end());
      expect->h1 = h;
    } else {
      Arity(l, 1);
      expect->action_order = ToInt(l, l.words[1]);
    }
  }
  (void)expect_line;
  file.expect = expect;
  if (darts < 0 || !e || !r) {
    throw Error(ErrorCode::kParse,
                "'darts', 'edge_pairing' and 'rotation' are required");
  }
  try {
    CombMap map = CombMap::Build(*e, *r);
    if (static_cast<int>(color_tags.size()) != map.num_edges()) {
      throw Error(ErrorCode::kParse,
                  "'colors' needs one tag per edge (" +
                      std::to_string(map.num_edges()) + ")");
    }
    std::vector<Color> colors(darts);
    for (int i = 0; i < map.num_edges(); ++i) {
      const auto c = Color::FromTag(color_tags[i]);
      if (!c) throw Error(ErrorCode::kParse, "unknown color tag '" +
                                                 color_tags[i] + "'");
      for (Dart d : map.edge_orbits()[i]) colors[d] = *c;
    }
    for (int d : marked) {
      if (d < 0 || d >= darts) {
        throw Error(ErrorCode::kParse, "marked dart out of range");
      }
    }
    for (const Perm& g : file.action.generators) {
      if (!IsPermutation(g)) {
        throw Error(ErrorCode::kParse, "generator is not a permutation");
      }
    }
    file.diagram = ShadowDiagram(std::move(map), std::move(colors), marked);
    if (group_order >= 0) {
      if (static_cast<int>(group_rows.size()) != group_order) {
        throw Error(ErrorCode::kParse,
                    "'group' needs " + std::to_string(group_order) +
                        " 'group_row' lines");
      }
      VoltageAssignment v;
      v.group = FiniteGroup::FromTable(group_names, group_rows);
      auto element = [&](const std::string& name) {
        const auto x = v.group.Find(name);
        if (!x) throw Error(ErrorCode::kParse, "unknown element '" + name + "'");
        return *x;
      };
      if (edge_volt.empty()) {
        throw Error(ErrorCode::kParse, "'group' without 'edge_voltages'");
      }
      for (const auto& name : edge_volt) v.edge.push_back(element(name));
      for (const auto& name : corner_volt) v.corner.push_back(element(name));
      for (const auto& [d, name] : meridians) {
        if (d < 0 || d >= darts) {
          throw Error(ErrorCode::kParse, "meridian dart out of range");
        }
        v.meridians[d] = element(name);
      }
      v.cones = voltage_cones;
      file.voltages = std::move(v);
    } else if (!edge_volt.empty() || !corner_volt.empty() ||
               !meridians.empty()) {
      throw Error(ErrorCode::kParse, "voltages without 'group'");
    }
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, err.what());
  }
  return file;
}

std::string WriteDiagram(const DiagramFile& file) {
  std::ostringstream out;
  const ShadowDiagram& d = file.diagram;
  const CombMap& m = d.surface();
  out << kFileHeader << "\n";
  out << "etd-diagram " << kFormatVersion << "\n";
  if (!file.name.empty()) {
    CheckWord(file.name, "name");
    out << "name " << file.name << "\n";
  }
  if (!file.note.empty()) {
    if (file.note.find('\n') != std::string::npos) {
      throw Error(ErrorCode::kParse, "note spans several lines");
    }
    out << "note " << file.note << "\n";
  }
  out << "darts " << m.num_darts() << "\n";
  out << "edge_pairing" << JoinInts(m.edge_pairing()) << "\n";
  out << "rotation" << JoinInts(m.rotation()) << "\n";
  out << "colors";
  for (const auto& orbit : m.edge_orbits()) out << " " << d.color(orbit[0]).Tag();
  out << "\n";
  out << "marked" << JoinInts(d.marked()) << "\n";
  for (size_t i = 0; i < file.action.generators.size(); ++i) {
    const std::string name = file.action.NameOf(i);
    CheckWord(name, "generator name");
    out << "generator " << name << JoinInts(file.action.generators[i]) << "\n";
  }
  if (file.voltages) {
    const VoltageAssignment& v = *file.voltages;
    const FiniteGroup& g = v.group;
    out << "group " << g.order();
    for (const auto& name : g.names()) {
      CheckWord(name, "element name");
      out << " " << name;
    }
    out << "\n";
    for (const auto& row : g.table()) out << "group_row" << JoinInts(row) << "\n";
    out << "edge_voltages";
    for (int x : v.edge) out << " " << g.Name(x);
    out << "\n";
    if (!v.corner.empty()) {
      out << "corner_voltages";
      for (int x : v.corner) out << " " << g.Name(x);
      out << "\n";
    }
    for (const auto& [dart, x] : v.meridians) {
      out << "meridian " << dart << " " << g.Name(x) << "\n";
    }
    if (!v.cones.empty()) out << "voltage_cones" << JoinInts(v.cones) << "\n";
  }
  for (const ConePoint& c : file.cones) {
    out << "cone_point "
        << (c.cell.kind == CellKind::kFace ? "face" : "vertex") << " "
        << c.cell.rep << " " << c.order << "\n";
  }
  if (file.expect) {
    const ExpectedReport& x = *file.expect;
    out << ParametersLine("expect", x);
    if (x.bridge) {
      out << "expect_bridge " << x.bridge->b << " " << x.bridge->p[0] << " "
          << x.bridge->p[1] << " " << x.bridge->p[2] << "\n";
    }
    if (x.h1) {
      out << "expect_h1 " << x.h1->rank;
      for (auto t : x.h1->torsion) out << " " << t;
      out << "\n";
    }
    out << "expect_order " << x.action_order << "\n";
  }
  if (file.lift_expect) out << ParametersLine("lift_expect", *file.lift_expect);
  out << "end\n";
  return out.str();
}

GTriangulation ParseTriangulation(const std::string& text) {
  const std::vector<Line> lines = Tokenize(text, "etd-triangulation");
  GTriangulation k;
  k.num_vertices = -1;
  std::set<std::string> seen;
  for (const Line& l : lines) {
    const std::string& key = l.words[0];
    if ((key == "name" || key == "vertices") && !seen.insert(key).second) {
      ParseFail(l.number, "duplicate key '" + key + "'");
    }
    if (key == "name") {
      Arity(l, 1);
      k.name = l.words[1];
    } else if (key == "vertices") {
      Arity(l, 1);
      k.num_vertices = ToInt(l, l.words[1]);
      if (k.num_vertices < 1) ParseFail(l.number, "need at least one vertex");
    } else if (key == "pentachoron") {
      Arity(l, 5);
      const auto v = Ints(l);
      k.pentachora.push_back({v[0], v[1], v[2], v[3], v[4]});
    } else if (key == "gluing") {
      Arity(l, 4);
      const auto v = Ints(l);
      k.gluings.push_back({v[0], v[1], v[2], v[3]});
    } else if (key == "generator") {
      if (k.num_vertices < 0) ParseFail(l.number, "'generator' before 'vertices'");
      Arity(l, k.num_vertices + 1);
      CheckWord(l.words[1], "generator name");
      k.generator_names.push_back(l.words[1]);
      k.generators.push_back(Ints(l, 2));
    } else if (key == "surface") {
      Arity(l, 1);
      k.surfaces.push_back({l.words[1], {}});
    } else if (key == "triangle") {
      if (k.surfaces.empty()) ParseFail(l.number, "'triangle' before 'surface'");
      Arity(l, 3);
      const auto v = Ints(l);
      k.surfaces.back().triangles.push_back({v[0], v[1], v[2]});
    } else {
      ParseFail(l.number, "unknown key '" + key + "'");
    }
  }
  if (k.num_vertices < 0) throw Error(ErrorCode::kParse, "'vertices' is required");
  return k;
}

std::string WriteTriangulation(const GTriangulation& k) {
  std::ostringstream out;
  out << kFileHeader << "\n";
  out << "etd-triangulation " << kFormatVersion << "\n";
  if (!k.name.empty()) {
    CheckWord(k.name, "name");
    out << "name " << k.name << "\n";
  }
  out << "vertices " << k.num_vertices << "\n";
  for (const auto& p : k.pentachora) {
    out << "pentachoron" << JoinInts({p.begin(), p.end()}) << "\n";
  }
  for (const auto& g : k.gluings) {
    out << "gluing " << g.p << " " << g.f << " " << g.q << " " << g.g << "\n";
  }
  for (size_t i = 0; i < k.generators.size(); ++i) {
    const std::string name = i < k.generator_names.size()
                                 ? k.generator_names[i]
                                 : "g" + std::to_string(i);
    CheckWord(name, "generator name");
    out << "generator " << name << JoinInts(k.generators[i]) << "\n";
  }
  for (const TriSurface& s : k.surfaces) {
    CheckWord(s.name, "surface name");
    out << "surface " << s.name << "\n";
    for (const Triangle& t : s.triangles) {
      out << "triangle " << t[0] << " " << t[1] << " " << t[2] << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << text;
}

DiagramFile FileOf(const CatalogEntry& entry) {
  DiagramFile f;
  f.name = entry.name;
  f.note = entry.note;
  f.diagram = entry.diagram;
  f.action = entry.action;
  f.voltages = entry.voltages;
  f.expect = entry.expected;
  if (entry.voltages) {
    for (const VoltageReduction& r : entry.reductions) {
      if (r.voltages.group.order() == entry.voltages->group.order() &&
          r.voltages.edge == entry.voltages->edge &&
          r.voltages.corner == entry.voltages->corner) {
        f.lift_expect = r.expected;
      }
    }
  }
  return f;
}

std::vector<DiagramFile> ReductionFiles(const CatalogEntry& entry) {
  std::vector<DiagramFile> out;
  for (const VoltageReduction& r : entry.reductions) {
    DiagramFile f;
    f.name = entry.name + "." + r.name;
    f.note = "voltages of " + entry.name + " pushed forward to " + r.name;
    f.diagram = entry.diagram;
    f.voltages = r.voltages;
    f.expect = entry.expected;
    f.expect->action_order = 1;
    f.lift_expect = r.expected;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace etd

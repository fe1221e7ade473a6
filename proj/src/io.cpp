// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ntucore/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ntucore/errors.hpp"

namespace ntucore {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

// Field access with format errors turned into InputError.
template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": field \"" + key + "\": " + e.what());
  }
}

std::vector<Edge> edge_list(const json& j, const char* key, const char* what) {
  std::vector<Edge> out;
  for (const auto& [a, b] : field<std::vector<std::pair<int, int>>>(j, key, what)) {
    out.push_back(make_edge(a, b));
  }
  return out;
}

json edges_json(std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  json out = json::array();
  for (const Edge& e : sorted) out.push_back({e.u, e.v});
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

Certificate make_certificate(CoreKind kind, const MembershipVerdict& verdict) {
  Certificate c;
  c.in_core = verdict.in_core;
  c.kind = kind;
  if (verdict.certificate) {
    c.coalition = verdict.certificate->coalition;
    c.witness = verdict.certificate->witness;
  }
  return c;
}

Instance parse_instance(std::string_view text) {
  const json j = parse_json(text, "instance");
  const int n = field<int>(j, "n", "instance");
  if (n < 0) throw InputError("instance: negative vertex count");
  auto players = field<std::vector<std::vector<Vertex>>>(j, "players", "instance");
  return Instance(Graph(n, edge_list(j, "edges", "instance")), std::move(players));
}

Matching parse_matching(std::string_view text) {
  return Matching(edge_list(parse_json(text, "matching"), "edges", "matching"));
}

Certificate parse_certificate(std::string_view text) {
  const json j = parse_json(text, "certificate");
  Certificate c;
  const auto verdict = field<std::string>(j, "verdict", "certificate");
  if (verdict != "in_core" && verdict != "blocked") {
    throw InputError("certificate: verdict must be \"in_core\" or \"blocked\"");
  }
  c.in_core = verdict == "in_core";
  c.kind = parse_core_kind(field<std::string>(j, "kind", "certificate"));
  c.coalition = field<std::vector<PlayerId>>(j, "coalition", "certificate");
  c.witness = Matching(edge_list(j, "witness", "certificate"));
  return c;
}

X3CInstance parse_x3c(std::string_view text) {
  const json j = parse_json(text, "x3c");
  X3CInstance x;
  x.elements = field<int>(j, "elements", "x3c");
  x.sets = field<std::vector<std::array<int, 3>>>(j, "sets", "x3c");
  validate(x);
  return x;
}

CnfFormula parse_cnf(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  CnfFormula f;
  if (first != std::string_view::npos && text[first] == '{') {
    const json j = parse_json(text, "cnf");
    f.variables = field<int>(j, "variables", "cnf");
    f.clauses = field<std::vector<std::array<int, 3>>>(j, "clauses", "cnf");
    validate(f);
    return f;
  }
  // DIMACS: comment lines, one "p cnf V C" line, clauses terminated by 0.
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::vector<int> current;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string kind;
      int clauses = 0;
      if (!(ls >> kind >> f.variables >> clauses) || kind != "cnf") {
        throw InputError("cnf: malformed DIMACS header");
      }
      header = true;
      continue;
    }
    if (!header) throw InputError("cnf: clause before DIMACS header");
    std::istringstream rest(line);
    int lit = 0;
    while (rest >> lit) {
      if (lit != 0) {
        current.push_back(lit);
        continue;
      }
      if (current.size() != 3) throw InputError("cnf: every clause needs exactly 3 literals");
      f.clauses.push_back({current[0], current[1], current[2]});
      current.clear();
    }
    if (!rest.eof()) throw InputError("cnf: non-integer token in DIMACS clause");
  }
  if (!header) throw InputError("cnf: missing DIMACS header");
  if (!current.empty()) throw InputError("cnf: unterminated DIMACS clause");
  validate(f);
  return f;
}

std::string serialize(const Instance& inst) {
  json j;
  j["n"] = inst.vertex_count();
  j["edges"] = edges_json(inst.graph().edges());
  json players = json::array();
  for (const auto& p : inst.players()) players.push_back(p);
  j["players"] = std::move(players);
  return dump(j);
}

std::string serialize(const Matching& m) {
  json j;
  j["edges"] = edges_json(m.edges());
  return dump(j);
}

std::string serialize(const Certificate& cert) {
  json j;
  j["verdict"] = cert.in_core ? "in_core" : "blocked";
  j["kind"] = std::string(to_string(cert.kind));
  j["coalition"] = cert.coalition;
  j["witness"] = edges_json(cert.witness.edges());
  return dump(j);
}

std::string serialize_names(const GeneratedInstance& g) {
  json j;
  j["vertices"] = g.vertex_names;
  j["players"] = g.player_names;
  return dump(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw InputError("cannot write " + path);
  }
}

}  // namespace ntucore

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

#include "ntucore/gallai_edmonds.hpp"

#include <algorithm>
#include <functional>

#include "ntucore/errors.hpp"
#include "ntucore/matching.hpp"

namespace ntucore {

namespace {

inline std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// Perfect matching of G[vertices] lifted back to parent ids.
std::vector<Edge> perfect_on(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return {};
  const auto sub = induced_subgraph(g, vertices);
  const auto pm = perfect_matching(sub.graph);
  if (!pm) throw InternalError("expected a perfect matching on a decomposition part");
  std::vector<Edge> out;
  for (const auto& e : pm->edges()) {
    out.push_back(make_edge(sub.to_parent[at(e.u)], sub.to_parent[at(e.v)]));
  }
  return out;
}

}  // namespace

GallaiEdmonds gallai_edmonds(const Graph& g) {
  const int n = g.vertex_count();
  GallaiEdmonds ge;
  ge.witness = max_matching(g);
  const auto mate = ge.witness.mates(n);

  // For a maximum matching, D(G) is what even alternating paths from the
  // exposed vertices reach.
  std::vector<char> in_d(at(n), 0);
  for (Vertex r = 0; r < n; ++r) {
    if (mate[at(r)] != kNoVertex) continue;
    const auto forest = alternating_reach(g, mate, r);
    for (Vertex v = 0; v < n; ++v) {
      if (forest.is_even(v)) in_d[at(v)] = 1;
    }
  }

  std::vector<char> in_a(at(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (in_d[at(v)]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (in_d[at(w)]) {
        in_a[at(v)] = 1;
        break;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[at(v)]) ge.cut_set.push_back(v);
    else if (!in_d[at(v)]) ge.even_part.push_back(v);
  }

  ge.component_of.assign(at(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (!in_d[at(s)] || ge.component_of[at(s)] != -1) continue;
    const int id = static_cast<int>(ge.odd_components.size());
    std::vector<Vertex> comp{s};
    ge.component_of[at(s)] = id;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (in_d[at(w)] && ge.component_of[at(w)] == -1) {
          ge.component_of[at(w)] = id;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    ge.odd_components.push_back(std::move(comp));
  }
  return ge;
}

CoverageOracle::CoverageOracle(Graph g) : g_(std::move(g)), ge_(gallai_edmonds(g_)) {
  const std::size_t k = ge_.odd_components.size();
  cut_neighbours_.assign(k, {});
  cut_components_.assign(at(g_.vertex_count()), {});
  for (Vertex a : ge_.cut_set) {
    auto& list = cut_components_[at(a)];
    for (Vertex w : g_.neighbors(a)) {
      if (ge_.component_of[at(w)] >= 0) list.push_back(ge_.component_of[at(w)]);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (int c : cut_components_[at(a)]) cut_neighbours_[static_cast<std::size_t>(c)].push_back(a);
  }
}

std::optional<std::vector<Vertex>> CoverageOracle::saturate_tight(
    std::span<const char> tight) const {
  const std::size_t k = ge_.odd_components.size();
  std::vector<Vertex> comp_mate(k, kNoVertex);
  std::vector<int> owner(at(g_.vertex_count()), -1);
  std::vector<char> visited(at(g_.vertex_count()), 0);

  std::function<bool(int)> try_component = [&](int c) -> bool {
    for (Vertex a : cut_neighbours_[static_cast<std::size_t>(c)]) {
      if (visited[at(a)]) continue;
      visited[at(a)] = 1;
      if (owner[at(a)] == -1 || try_component(owner[at(a)])) {
        owner[at(a)] = c;
        comp_mate[static_cast<std::size_t>(c)] = a;
        return true;
      }
    }
    return false;
  };
  for (std::size_t c = 0; c < k; ++c) {
    if (!tight[c]) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_component(static_cast<int>(c))) return std::nullopt;
  }
  return comp_mate;
}

bool CoverageOracle::coverable_mask(std::span<const char> in_set) const {
  const std::size_t k = ge_.odd_components.size();
  std::vector<char> tight(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& comp = ge_.odd_components[c];
    tight[c] = std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return in_set[at(v)] != 0; });
  }
  return saturate_tight(tight).has_value();
}

bool CoverageOracle::coverable(std::span<const Vertex> x) const {
  std::vector<char> mask(at(g_.vertex_count()), 0);
  for (Vertex v : x) mask[at(v)] = 1;
  return coverable_mask(mask);
}

std::optional<Matching> CoverageOracle::cover(std::span<const Vertex> x) const {
  const int n = g_.vertex_count();
  std::vector<char> mask(at(n), 0);
  for (Vertex v : x) {
    if (v < 0 || v >= n) throw InputError("coverable: vertex out of range");
    mask[at(v)] = 1;
  }
  const std::size_t k = ge_.odd_components.size();
  std::vector<char> tight(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& comp = ge_.odd_components[c];
    tight[c] = std::all_of(comp.begin(), comp.end(), [&](Vertex v) { return mask[at(v)] != 0; });
  }
  auto matched = saturate_tight(tight);
  if (!matched) return std::nullopt;
  auto& comp_mate = *matched;

  // Extend to saturate A(G); augmenting from the cut side keeps every covered
  // component covered.
  std::vector<int> owner(at(n), -1);
  for (std::size_t c = 0; c < k; ++c) {
    if (comp_mate[c] != kNoVertex) owner[at(comp_mate[c])] = static_cast<int>(c);
  }
  std::vector<char> visited(k, 0);
  std::function<bool(Vertex)> try_cut = [&](Vertex a) -> bool {
    for (int c : cut_components_[at(a)]) {
      const auto cc = static_cast<std::size_t>(c);
      if (visited[cc]) continue;
      visited[cc] = 1;
      if (comp_mate[cc] == kNoVertex || try_cut(comp_mate[cc])) {
        comp_mate[cc] = a;
        owner[at(a)] = c;
        return true;
      }
    }
    return false;
  };
  for (Vertex a : ge_.cut_set) {
    if (owner[at(a)] != -1) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_cut(a)) throw InternalError("cut set cannot be saturated");
  }

  std::vector<Edge> edges = perfect_on(g_, ge_.even_part);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& comp = ge_.odd_components[c];
    Vertex left_out = kNoVertex;
    if (comp_mate[c] != kNoVertex) {
      const Vertex a = comp_mate[c];
      for (Vertex w : g_.neighbors(a)) {
        if (ge_.component_of[at(w)] == static_cast<int>(c)) {
          left_out = w;
          break;
        }
      }
      edges.push_back(make_edge(a, left_out));
    } else {
      for (Vertex v : comp) {
        if (!mask[at(v)]) {
          left_out = v;
          break;
        }
      }
    }
    if (left_out == kNoVertex) throw InternalError("no vertex to leave out of odd component");
    std::vector<Vertex> rest;
    for (Vertex v : comp) {
      if (v != left_out) rest.push_back(v);
    }
    const auto inner = perfect_on(g_, rest);
    edges.insert(edges.end(), inner.begin(), inner.end());
  }
  return Matching(std::move(edges));
}

std::optional<Matching> coverable(const Graph& g, std::span<const Vertex> x) {
  return CoverageOracle(g).cover(x);
}

}  // namespace ntucore

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

#include "ntucore/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ntucore/errors.hpp"

namespace ntucore {

namespace {

void check_endpoints(int n, const Edge& e) {
  if (e.u == e.v) {
    throw InputError("self-loop at vertex " + std::to_string(e.u));
  }
  if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
    throw InputError("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + ") with n=" + std::to_string(n));
  }
}

std::vector<Edge> normalized_sorted(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  edges_ = normalized_sorted(std::move(edges));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    check_endpoints(n, edges_[i]);
    if (i > 0 && edges_[i] == edges_[i - 1]) {
      throw InputError("parallel edge (" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + ")");
    }
  }
  build_adjacency();
}

Graph Graph::with_duplicates_merged(int n, std::vector<Edge> edges) {
  edges = normalized_sorted(std::move(edges));
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

void Graph::build_adjacency() {
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& list = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  drop = normalized_sorted(std::move(drop));
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(kept));
}

Graph add_edges(const Graph& g, std::span<const Edge> added) {
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  all.insert(all.end(), added.begin(), added.end());
  return Graph::with_duplicates_merged(g.vertex_count(), std::move(all));
}

Graph isolate_vertices(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : vertices) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)]) {
      kept.push_back(e);
    }
  }
  return Graph(g.vertex_count(), std::move(kept));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  sub.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw InputError("induced subgraph vertex out of range");
    if (sub.from_parent[static_cast<std::size_t>(v)] != kNoVertex) {
      throw InputError("induced subgraph vertex listed twice");
    }
    sub.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  std::vector<Edge> local;
  for (const auto& e : g.edges()) {
    const Vertex a = sub.from_parent[static_cast<std::size_t>(e.u)];
    const Vertex b = sub.from_parent[static_cast<std::size_t>(e.v)];
    if (a != kNoVertex && b != kNoVertex) local.push_back(make_edge(a, b));
  }
  sub.graph = Graph(static_cast<int>(vertices.size()), std::move(local));
  return sub;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[static_cast<std::size_t>(s)] != -1) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Matching::Matching(std::vector<Edge> edges) : edges_(normalized_sorted(std::move(edges))) {
  for (const auto& e : edges_) {
    if (e.u == e.v) throw InputError("matching edge is a self-loop");
    covered_.push_back(e.u);
    covered_.push_back(e.v);
  }
  std::sort(covered_.begin(), covered_.end());
  if (std::adjacent_find(covered_.begin(), covered_.end()) != covered_.end()) {
    throw InputError("matching edges share a vertex");
  }
}

Matching Matching::from_mates(std::span<const Vertex> mate) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    const Vertex w = mate[v];
    if (w != kNoVertex && static_cast<Vertex>(v) < w) edges.push_back(Edge{static_cast<Vertex>(v), w});
  }
  return Matching(std::move(edges));
}

bool Matching::covers(Vertex v) const {
  return std::binary_search(covered_.begin(), covered_.end(), v);
}

bool Matching::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
}

std::vector<Vertex> Matching::mates(int n) const {
  std::vector<Vertex> mate(static_cast<std::size_t>(n), kNoVertex);
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v >= n) throw InputError("matching endpoint out of range");
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  return mate;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  return std::all_of(m.edges().begin(), m.edges().end(),
                     [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

void validate_matching(const Graph& g, const Matching& m) {
  for (const auto& e : m.edges()) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("matching edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") is not an edge of the graph");
    }
  }
}

}  // namespace ntucore

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

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace ntucore {

/// Vertices are dense ids 0..n-1.
using Vertex = int;

inline constexpr Vertex kNoVertex = -1;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes the endpoint order.
constexpr Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Strict constructor: throws InputError on self-loops, parallel edges or
  /// out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  /// Like the strict constructor, but silently drops repeated edges.
  static Graph with_duplicates_merged(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Same vertex set, every listed edge dropped (absent edges are ignored).
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

/// Same vertex set, listed edges added (already present ones are ignored).
Graph add_edges(const Graph& g, std::span<const Edge> added);

/// Same vertex set, every edge incident to a listed vertex dropped.
Graph isolate_vertices(const Graph& g, std::span<const Vertex> vertices);

/// Subgraph induced by a vertex subset, relabelled densely in the order given.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // local id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> local id or kNoVertex
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components, each sorted; components ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Two-colouring test.
bool is_bipartite(const Graph& g);

/// A set of pairwise vertex-disjoint edges, kept in canonical sorted order.
class Matching {
 public:
  Matching() = default;

  /// Throws InputError on self-loops or edges sharing a vertex.
  explicit Matching(std::vector<Edge> edges);

  /// Builds a matching from a mate array (mate[v] == kNoVertex if exposed).
  static Matching from_mates(std::span<const Vertex> mate);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  /// V(M), sorted ascending.
  std::span<const Vertex> covered() const { return covered_; }
  bool covers(Vertex v) const;
  bool contains(Edge e) const;

  /// Mate array over 0..n-1. Throws InputError if an endpoint is >= n.
  std::vector<Vertex> mates(int n) const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

 private:
  std::vector<Edge> edges_;
  std::vector<Vertex> covered_;
};

/// True iff every edge of m is an edge of g.
bool is_matching_of(const Graph& g, const Matching& m);

/// Throws InputError unless is_matching_of(g, m).
void validate_matching(const Graph& g, const Matching& m);

}  // namespace ntucore

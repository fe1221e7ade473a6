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

#include <optional>
#include <span>
#include <vector>

#include "ntucore/graph.hpp"

namespace ntucore {

/// Gallai-Edmonds decomposition.
///
/// D(G) is the set of vertices left exposed by at least one maximum matching,
/// A(G) its neighbourhood outside D(G), C(G) everything else. The components
/// of G[D(G)] are odd and hypomatchable, and every maximum matching leaves
/// exactly (#odd components - |A(G)|) vertices exposed.
struct GallaiEdmonds {
  std::vector<Vertex> cut_set;                      // A(G)
  std::vector<Vertex> even_part;                    // C(G)
  std::vector<std::vector<Vertex>> odd_components;  // components of G[D(G)]
  std::vector<int> component_of;                    // vertex -> odd component, or -1
  Matching witness;                                 // a maximum matching
};

GallaiEdmonds gallai_edmonds(const Graph& g);

/// Answers "is there a matching covering X?" for one fixed graph, reusing a
/// single decomposition across queries.
///
/// X is coverable iff the bipartite graph between A(G) and the odd components
/// has a matching saturating every odd component that lies inside X. Not
/// thread-safe for concurrent use of one instance; construct one per thread.
class CoverageOracle {
 public:
  explicit CoverageOracle(Graph g);

  const Graph& graph() const { return g_; }
  const GallaiEdmonds& decomposition() const { return ge_; }

  /// `in_set` is a 0/1 mask over the vertices.
  bool coverable_mask(std::span<const char> in_set) const;
  bool coverable(std::span<const Vertex> x) const;

  /// A matching covering x, if any.
  std::optional<Matching> cover(std::span<const Vertex> x) const;

 private:
  // Kuhn matching from the tight components; returns component -> cut vertex.
  std::optional<std::vector<Vertex>> saturate_tight(std::span<const char> tight) const;

  Graph g_;
  GallaiEdmonds ge_;
  std::vector<std::vector<Vertex>> cut_neighbours_;  // per odd component
  std::vector<std::vector<int>> cut_components_;     // per cut vertex (indexed by vertex)
};

/// Convenience wrapper building a one-shot oracle.
std::optional<Matching> coverable(const Graph& g, std::span<const Vertex> x);

}  // namespace ntucore

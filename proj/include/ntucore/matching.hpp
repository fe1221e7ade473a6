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

/// Maximum-cardinality matching (Edmonds, blossom contraction, exposed
/// vertices scanned in ascending id order).
///
/// When a seed is given the search starts from it; augmenting paths never
/// uncover a vertex, so every vertex covered by the seed stays covered.
/// Throws InputError if the seed is not a matching of g.
Matching max_matching(const Graph& g, const std::optional<Matching>& seed = std::nullopt);

/// Witness perfect matching, or nullopt.
std::optional<Matching> perfect_matching(const Graph& g);

inline bool perfect_matching_exists(const Graph& g) { return perfect_matching(g).has_value(); }

/// A matching leaving exactly `missing` vertices exposed, if the maximum
/// matching leaves at most that many and the parity fits. Surplus edges are
/// dropped from the end of the canonical edge order.
std::optional<Matching> matching_missing_exactly(const Graph& g, int missing);

/// Vertices reachable from an exposed root by an alternating path whose last
/// edge is matched (the root itself counts, via the empty path).
class AlternatingForest {
 public:
  Vertex root() const { return root_; }
  bool is_even(Vertex v) const { return even_[static_cast<std::size_t>(v)] != 0; }
  std::vector<Vertex> even_set() const;

  /// root, ..., v. Alternates non-matching / matching edges and ends with a
  /// matching edge (or is just {root}). Throws InputError if v is not even.
  std::vector<Vertex> path_to(Vertex v) const;

 private:
  friend AlternatingForest alternating_reach(const Graph&, std::span<const Vertex>, Vertex);

  Vertex root_ = kNoVertex;
  std::vector<char> even_;
  std::vector<std::vector<Vertex>> paths_;
};

/// Throws InputError if root is covered by m.
AlternatingForest alternating_reach(const Graph& g, const Matching& m, Vertex root);

/// Same, with the matching given as a mate array over g's vertices.
AlternatingForest alternating_reach(const Graph& g, std::span<const Vertex> mate, Vertex root);

/// An augmenting path from exposed `from` to exposed `to`, as a vertex
/// sequence from..to, if one exists.
std::optional<std::vector<Vertex>> augmenting_path_between(const Graph& g,
                                                           std::span<const Vertex> mate,
                                                           Vertex from, Vertex to);

}  // namespace ntucore

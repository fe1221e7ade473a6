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

#include <vector>

#include "ntucore/graph.hpp"

namespace ntucore::detail {

// Single-root alternating tree search with blossom contraction.
//
// After grow(root, ...) returns, outer_[v] marks every vertex reachable from
// root by an alternating path ending in a matched edge (root included), and
// walk_to_root(v) recovers one such path for any outer v.
class EdmondsSearch {
 public:
  EdmondsSearch(const Graph& g, std::vector<Vertex>& mate);

  // Grows the tree from an exposed root. With stop_on_augment, returns the
  // first exposed vertex reached through an outer vertex (the tail of an
  // augmenting path); otherwise keeps growing and returns kNoVertex.
  Vertex grow(Vertex root, bool stop_on_augment);

  // Flips the augmenting path ending at the exposed vertex returned by grow().
  void augment(Vertex exposed_end);

  bool outer(Vertex v) const { return outer_[static_cast<std::size_t>(v)] != 0; }

  // Path from v back to the root (v first); v must be outer.
  std::vector<Vertex> walk_to_root(Vertex v) const;

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) const;
  void mark_blossom_path(Vertex v, Vertex b, Vertex child);

  const Graph& g_;
  std::vector<Vertex>& mate_;
  Vertex root_ = kNoVertex;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> outer_;
  std::vector<char> in_blossom_;
};

}  // namespace ntucore::detail

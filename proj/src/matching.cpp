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

#include "ntucore/matching.hpp"

#include <algorithm>

#include "edmonds_search.hpp"
#include "ntucore/errors.hpp"

namespace ntucore {

Matching max_matching(const Graph& g, const std::optional<Matching>& seed) {
  const int n = g.vertex_count();
  std::vector<Vertex> mate(static_cast<std::size_t>(n), kNoVertex);
  if (seed) {
    validate_matching(g, *seed);
    mate = seed->mates(n);
  }
  // No augmenting path from v now means none later, so one pass suffices.
  detail::EdmondsSearch search(g, mate);
  for (Vertex v = 0; v < n; ++v) {
    if (mate[static_cast<std::size_t>(v)] != kNoVertex) continue;
    const Vertex end = search.grow(v, /*stop_on_augment=*/true);
    if (end != kNoVertex) search.augment(end);
  }
  return Matching::from_mates(mate);
}

std::optional<Matching> perfect_matching(const Graph& g) {
  Matching m = max_matching(g);
  if (2 * m.size() == static_cast<std::size_t>(g.vertex_count())) return m;
  return std::nullopt;
}

std::optional<Matching> matching_missing_exactly(const Graph& g, int missing) {
  const int n = g.vertex_count();
  if (missing < 0 || missing > n || (n - missing) % 2 != 0) return std::nullopt;
  Matching m = max_matching(g);
  const auto target = static_cast<std::size_t>((n - missing) / 2);
  if (m.size() < target) return std::nullopt;
  std::vector<Edge> edges(m.edges().begin(), m.edges().end());
  edges.resize(target);
  return Matching(std::move(edges));
}

std::vector<Vertex> AlternatingForest::even_set() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < even_.size(); ++v) {
    if (even_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> AlternatingForest::path_to(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= even_.size() || !is_even(v)) {
    throw InputError("vertex is not reachable by an even alternating path");
  }
  return paths_[static_cast<std::size_t>(v)];
}

AlternatingForest alternating_reach(const Graph& g, const Matching& m, Vertex root) {
  validate_matching(g, m);
  const auto mate = m.mates(g.vertex_count());
  return alternating_reach(g, mate, root);
}

AlternatingForest alternating_reach(const Graph& g, std::span<const Vertex> mate, Vertex root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw InputError("root out of range");
  if (mate[static_cast<std::size_t>(root)] != kNoVertex) {
    throw InputError("alternating_reach root is covered by the matching");
  }
  std::vector<Vertex> mate_copy(mate.begin(), mate.end());
  detail::EdmondsSearch search(g, mate_copy);
  search.grow(root, /*stop_on_augment=*/false);

  AlternatingForest forest;
  forest.root_ = root;
  forest.even_.assign(static_cast<std::size_t>(n), 0);
  forest.paths_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (!search.outer(v)) continue;
    forest.even_[static_cast<std::size_t>(v)] = 1;
    auto path = search.walk_to_root(v);
    std::reverse(path.begin(), path.end());
    forest.paths_[static_cast<std::size_t>(v)] = std::move(path);
  }
  return forest;
}

std::optional<std::vector<Vertex>> augmenting_path_between(const Graph& g,
                                                           std::span<const Vertex> mate,
                                                           Vertex from, Vertex to) {
  if (mate[static_cast<std::size_t>(to)] != kNoVertex) {
    throw InputError("augmenting path target is covered");
  }
  const auto forest = alternating_reach(g, mate, from);
  for (Vertex x : g.neighbors(to)) {
    if (!forest.is_even(x)) continue;
    auto path = forest.path_to(x);
    path.push_back(to);
    return path;
  }
  return std::nullopt;
}

}  // namespace ntucore

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

#include "edmonds_search.hpp"

#include <numeric>

#include "ntucore/errors.hpp"

namespace ntucore::detail {

namespace {
inline std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }
}  // namespace

EdmondsSearch::EdmondsSearch(const Graph& g, std::vector<Vertex>& mate) : g_(g), mate_(mate) {}

Vertex EdmondsSearch::lowest_common_base(Vertex a, Vertex b) const {
  std::vector<char> seen(at(g_.vertex_count()), 0);
  for (;;) {
    a = base_[at(a)];
    seen[at(a)] = 1;
    if (mate_[at(a)] == kNoVertex) break;
    a = parent_[at(mate_[at(a)])];
  }
  for (;;) {
    b = base_[at(b)];
    if (seen[at(b)]) return b;
    b = parent_[at(mate_[at(b)])];
  }
}

void EdmondsSearch::mark_blossom_path(Vertex v, Vertex b, Vertex child) {
  while (base_[at(v)] != b) {
    in_blossom_[at(base_[at(v)])] = 1;
    in_blossom_[at(base_[at(mate_[at(v)])])] = 1;
    parent_[at(v)] = child;
    child = mate_[at(v)];
    v = parent_[at(mate_[at(v)])];
  }
}

Vertex EdmondsSearch::grow(Vertex root, bool stop_on_augment) {
  const int n = g_.vertex_count();
  if (mate_[at(root)] != kNoVertex) throw InternalError("search root is matched");
  root_ = root;
  parent_.assign(at(n), kNoVertex);
  base_.resize(at(n));
  std::iota(base_.begin(), base_.end(), 0);
  outer_.assign(at(n), 0);
  outer_[at(root)] = 1;

  std::vector<Vertex> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex to : g_.neighbors(v)) {
      if (base_[at(v)] == base_[at(to)] || mate_[at(v)] == to) continue;
      const bool to_outer =
          to == root || (mate_[at(to)] != kNoVertex && parent_[at(mate_[at(to)])] != kNoVertex);
      if (to_outer) {
        const Vertex b = lowest_common_base(v, to);
        in_blossom_.assign(at(n), 0);
        mark_blossom_path(v, b, to);
        mark_blossom_path(to, b, v);
        for (Vertex i = 0; i < n; ++i) {
          if (in_blossom_[at(base_[at(i)])]) {
            base_[at(i)] = b;
            if (!outer_[at(i)]) {
              outer_[at(i)] = 1;
              queue.push_back(i);
            }
          }
        }
      } else if (parent_[at(to)] == kNoVertex) {
        parent_[at(to)] = v;
        if (mate_[at(to)] == kNoVertex) {
          if (stop_on_augment) return to;
          continue;
        }
        const Vertex next = mate_[at(to)];
        outer_[at(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  return kNoVertex;
}

void EdmondsSearch::augment(Vertex exposed_end) {
  Vertex v = exposed_end;
  while (v != kNoVertex) {
    const Vertex pv = parent_[at(v)];
    const Vertex next = mate_[at(pv)];
    mate_[at(v)] = pv;
    mate_[at(pv)] = v;
    v = next;
  }
}

std::vector<Vertex> EdmondsSearch::walk_to_root(Vertex v) const {
  if (!outer(v)) throw InternalError("walk_to_root from a non-outer vertex");
  std::vector<Vertex> path{v};
  if (v == root_) return path;
  const std::size_t limit = at(g_.vertex_count()) + 1;
  Vertex odd = mate_[at(v)];
  while (true) {
    path.push_back(odd);
    const Vertex even = parent_[at(odd)];
    path.push_back(even);
    if (even == root_) break;
    odd = mate_[at(even)];
    if (path.size() > limit) throw InternalError("alternating path reconstruction loops");
  }
  return path;
}

}  // namespace ntucore::detail

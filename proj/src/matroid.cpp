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

#include "ntucore/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ntucore/errors.hpp"

namespace ntucore {

namespace {
inline std::size_t at(int v) { return static_cast<std::size_t>(v); }
}  // namespace

std::vector<int> matroid_intersection_max(const IndependenceOracle& first,
                                          const IndependenceOracle& second, int ground_size) {
  const std::size_t n = at(ground_size);
  std::vector<char> in_set(n, 0);

  auto test_with = [&](const IndependenceOracle& oracle, int add, int drop) {
    if (add >= 0) in_set[at(add)] = 1;
    if (drop >= 0) in_set[at(drop)] = 0;
    const bool ok = oracle(in_set);
    if (add >= 0) in_set[at(add)] = 0;
    if (drop >= 0) in_set[at(drop)] = 1;
    return ok;
  };

  for (int e = 0; e < ground_size; ++e) {
    if (test_with(first, e, -1) && test_with(second, e, -1)) in_set[at(e)] = 1;
  }

  std::vector<char> sink(n, 0);
  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);
  for (;;) {
    std::vector<int> queue;
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int y = 0; y < ground_size; ++y) {
      if (in_set[at(y)]) continue;
      sink[at(y)] = test_with(second, y, -1) ? 1 : 0;
      if (test_with(first, y, -1)) {
        seen[at(y)] = 1;
        queue.push_back(y);
      }
    }

    int found = -1;
    for (std::size_t head = 0; head < queue.size() && found < 0; ++head) {
      const int z = queue[head];
      if (!in_set[at(z)]) {
        if (sink[at(z)]) {
          found = z;
          break;
        }
        // z outside I: arc z -> x (x in I) when I - x + z stays independent in the second matroid.
        for (int x = 0; x < ground_size; ++x) {
          if (!in_set[at(x)] || seen[at(x)]) continue;
          if (test_with(second, z, x)) {
            seen[at(x)] = 1;
            parent[at(x)] = z;
            queue.push_back(x);
          }
        }
      } else {
        // z in I: arc z -> y (y outside I) when I - z + y stays independent in the first matroid.
        for (int y = 0; y < ground_size; ++y) {
          if (in_set[at(y)] || seen[at(y)]) continue;
          if (test_with(first, y, z)) {
            seen[at(y)] = 1;
            parent[at(y)] = z;
            queue.push_back(y);
          }
        }
      }
    }
    if (found < 0) break;
    for (int v = found; v >= 0; v = parent[at(v)]) in_set[at(v)] = in_set[at(v)] ? 0 : 1;
  }

  std::vector<int> out;
  for (int e = 0; e < ground_size; ++e) {
    if (in_set[at(e)]) out.push_back(e);
  }
  return out;
}

int PartitionQuota::total() const { return std::accumulate(quotas.begin(), quotas.end(), 0); }

PartitionMatroid::PartitionMatroid(int ground_size, PartitionQuota pq)
    : ground_size_(ground_size), pq_(std::move(pq)), group_of_(at(ground_size), -1) {
  if (pq_.groups.size() != pq_.quotas.size()) {
    throw InputError("partition quota: group and quota counts differ");
  }
  for (std::size_t i = 0; i < pq_.groups.size(); ++i) {
    const int q = pq_.quotas[i];
    if (q < 0 || q > static_cast<int>(pq_.groups[i].size())) {
      throw InputError("partition quota " + std::to_string(q) + " out of range for group " +
                       std::to_string(i) + " of size " + std::to_string(pq_.groups[i].size()));
    }
    for (Vertex v : pq_.groups[i]) {
      if (v < 0 || v >= ground_size) throw InputError("partition group element out of range");
      if (group_of_[at(v)] != -1) throw InputError("partition groups overlap");
      group_of_[at(v)] = static_cast<int>(i);
    }
  }
}

bool PartitionMatroid::independent(std::span<const char> mask) const {
  std::vector<int> count(pq_.groups.size(), 0);
  for (int v = 0; v < ground_size_; ++v) {
    if (!mask[at(v)]) continue;
    const int g = group_of_[at(v)];
    if (g < 0) return false;
    if (++count[at(g)] > pq_.quotas[at(g)]) return false;
  }
  return true;
}

std::optional<Matching> matching_with_lower_bounds(const Graph& g, const PartitionQuota& pq) {
  return matching_with_lower_bounds(MatchingMatroid(g), pq);
}

std::optional<Matching> matching_with_lower_bounds(const MatchingMatroid& mm,
                                                   const PartitionQuota& pq) {
  const int n = mm.graph().vertex_count();
  const PartitionMatroid partition(n, pq);
  if (partition.rank() == 0) return Matching{};
  if (partition.rank() > mm.rank()) return std::nullopt;

  const auto common = matroid_intersection_max(
      [&](std::span<const char> mask) { return partition.independent(mask); },
      [&](std::span<const char> mask) { return mm.independent(mask); }, n);
  if (static_cast<int>(common.size()) < partition.rank()) return std::nullopt;

  std::vector<Vertex> cover_set(common.begin(), common.end());
  auto m = mm.coverage().cover(cover_set);
  if (!m) throw InternalError("common independent set is not coverable");
  return m;
}

}  // namespace ntucore

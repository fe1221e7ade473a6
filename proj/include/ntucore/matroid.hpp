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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ntucore/gallai_edmonds.hpp"
#include "ntucore/graph.hpp"

namespace ntucore {

/// Independence oracle over ground elements 0..N-1. The argument is a 0/1
/// membership mask of length N.
using IndependenceOracle = std::function<bool(std::span<const char>)>;

/// Maximum-cardinality common independent set of two matroids on 0..N-1.
///
/// Greedy start, then repeated shortest augmenting paths in the exchange
/// graph (single-element swap tests), BFS with lowest-id tie-breaking.
/// Returns the set in ascending order.
std::vector<int> matroid_intersection_max(const IndependenceOracle& first,
                                          const IndependenceOracle& second, int ground_size);

/// Disjoint vertex groups with per-group quotas 0 <= q_i <= |group_i|.
struct PartitionQuota {
  std::vector<std::vector<Vertex>> groups;
  std::vector<int> quotas;

  int total() const;
};

/// Generalized partition matroid: at most q_i elements from group i; elements
/// outside every group form an implicit group with quota 0.
class PartitionMatroid {
 public:
  /// Throws InputError on overlapping groups, out-of-range elements or quotas
  /// outside [0, |group|].
  PartitionMatroid(int ground_size, PartitionQuota pq);

  bool independent(std::span<const char> mask) const;
  int rank() const { return pq_.total(); }
  const PartitionQuota& quota() const { return pq_; }

 private:
  int ground_size_;
  PartitionQuota pq_;
  std::vector<int> group_of_;  // -1 for the implicit quota-0 group
};

/// Matching matroid of a graph: X is independent iff some matching covers X.
class MatchingMatroid {
 public:
  explicit MatchingMatroid(Graph g) : oracle_(std::move(g)) {}

  bool independent(std::span<const char> mask) const { return oracle_.coverable_mask(mask); }
  int rank() const { return 2 * static_cast<int>(oracle_.decomposition().witness.size()); }
  const CoverageOracle& coverage() const { return oracle_; }
  const Graph& graph() const { return oracle_.graph(); }

 private:
  CoverageOracle oracle_;
};

/// A matching M with |V(M) ∩ group_i| >= q_i for every group, or nullopt.
///
/// Feasible iff the matching matroid and the partition matroid have a common
/// independent set of size sum(q_i); the covering matching is then recovered
/// from that set. Throws InputError on invalid quotas.
std::optional<Matching> matching_with_lower_bounds(const Graph& g, const PartitionQuota& pq);

/// Same, reusing a prepared matching matroid (one decomposition per graph).
std::optional<Matching> matching_with_lower_bounds(const MatchingMatroid& mm,
                                                   const PartitionQuota& pq);

}  // namespace ntucore

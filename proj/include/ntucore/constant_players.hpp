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

// Exact algorithms for a small number of players, through the component-wise
// maximal achievable utility vectors.

#include <cstdint>
#include <optional>
#include <vector>

#include "ntucore/game.hpp"

namespace ntucore {

inline constexpr std::int64_t kDefaultFrontierBudget = 10'000'000;

struct AchievableFrontier {
  std::vector<UtilityVector> maximal_vectors;  // lexicographically ascending
  std::vector<Matching> witnesses;             // utility(witnesses[i]) == maximal_vectors[i]
};

/// A matching covering at least x_i vertices of every player, or nullopt.
/// Throws InputError when some x_i is outside [0, |V_i|].
std::optional<Matching> achievable(const Instance& inst, const UtilityVector& x);

/// Walks the lattice prod [0, |V_i|] in lexicographic order. A point is
/// unachievable as soon as one of its lower neighbours is; a point below the
/// utility of a witness found earlier is achievable without a new query.
/// Throws ResourceError when the lattice has more than budget points.
AchievableFrontier frontier(const Instance& inst, std::int64_t budget = kDefaultFrontierBudget);

/// Witness matchings of the frontier vectors that lie in the core, in
/// lexicographically decreasing order of their vectors.
std::vector<Matching> frontier_core_matchings(const Instance& inst, CoreKind kind,
                                              std::int64_t budget = kDefaultFrontierBudget);

/// The first matching of frontier_core_matchings, or nullopt when the core
/// is empty.
std::optional<Matching> find_core_matching(const Instance& inst, CoreKind kind,
                                           std::int64_t budget = kDefaultFrontierBudget);

inline bool core_empty(const Instance& inst, CoreKind kind,
                       std::int64_t budget = kDefaultFrontierBudget) {
  return !find_core_matching(inst, kind, budget).has_value();
}

}  // namespace ntucore

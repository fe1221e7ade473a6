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

// Exhaustive reference implementations for small inputs. Everything here is
// exponential and guarded; the polynomial algorithms are tested against it.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ntucore/couples.hpp"
#include "ntucore/game.hpp"
#include "ntucore/graph.hpp"

namespace ntucore::oracle {

inline constexpr std::int64_t kDefaultMatchingCap = 10'000'000;

/// Every matching of g (the empty one included) exactly once, by
/// include/exclude recursion over the edges in order. Throws ResourceError
/// once more than cap matchings have been produced.
std::vector<Matching> all_matchings(const Graph& g, std::int64_t cap = kDefaultMatchingCap);

/// Streaming form; stops early when visit returns true.
void for_each_matching(const Graph& g, const std::function<bool(const Matching&)>& visit,
                       std::int64_t cap = kDefaultMatchingCap);

std::int64_t count_matchings(const Graph& g, std::int64_t cap = kDefaultMatchingCap);
int max_matching_size(const Graph& g, std::int64_t cap = kDefaultMatchingCap);

/// Vertices reachable from an exposed root by a simple alternating path that
/// ends with a matching edge (root included), by path enumeration.
std::vector<Vertex> even_reach(const Graph& g, const Matching& m, Vertex root);

struct CoreOutcome {
  std::map<UtilityVector, Matching> in_core;            // representative per vector
  std::map<UtilityVector, BlockCertificate> blocked;    // certificate per vector
};

/// Core of the game by enumerating all matchings: a matching M' blocks u on
/// the coalition of players it touches.
CoreOutcome oracle_core(const Instance& inst, CoreKind kind,
                        std::int64_t cap = kDefaultMatchingCap);

MembershipVerdict oracle_membership(const Instance& inst, const Matching& m, CoreKind kind,
                                    std::int64_t cap = kDefaultMatchingCap);

// Alternating structures in a couples game, by enumerating player-edge
// sequences. Guarded by kMaxCouplesVertices.
inline constexpr int kMaxCouplesVertices = 14;

bool has_alternating_cycle(const CouplesGame& cg, PlayerId p);
bool has_alternating_path(const CouplesGame& cg, PlayerId p, PlayerId q);
bool has_ordered_triple_path(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c);
std::optional<DeltaPath> find_delta_path(const CouplesGame& cg, PlayerId a, PlayerId b,
                                         PlayerId c);
inline bool has_delta_path(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c) {
  return find_delta_path(cg, a, b, c).has_value();
}

/// The K, K0, L, L*, pair and component sets evaluated straight from their
/// definitions with the enumerators above.
StrongCoreStructure strong_core_structure(const CouplesGame& cg);

}  // namespace ntucore::oracle

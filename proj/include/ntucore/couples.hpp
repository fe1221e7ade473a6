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

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ntucore/game.hpp"
#include "ntucore/graph.hpp"
#include "ntucore/matroid.hpp"

namespace ntucore {

/// A game in which every player owns exactly two vertices. The pair of a
/// player is its "player edge"; the player edges form the perfect matching M0,
/// which is not part of the graph (the graph may still hold a parallel edge).
class CouplesGame {
 public:
  CouplesGame() = default;

  /// Throws InputError unless every player of inst has exactly two vertices.
  explicit CouplesGame(Instance inst);

  const Instance& instance() const { return inst_; }
  const Graph& graph() const { return inst_.graph(); }
  int vertex_count() const { return inst_.vertex_count(); }
  int player_count() const { return inst_.player_count(); }
  std::span<const Vertex> player(PlayerId p) const { return inst_.player(p); }
  PlayerId owner(Vertex v) const { return inst_.owner(v); }
  Vertex partner(Vertex v) const { return partner_[static_cast<std::size_t>(v)]; }
  Edge player_edge(PlayerId p) const { return make_edge(player(p)[0], player(p)[1]); }

  /// Vertex count before padding; padded vertices are n0..n-1.
  int original_vertex_count() const { return original_n_; }

 private:
  friend CouplesGame normalize(const Instance& inst);

  Instance inst_;
  std::vector<Vertex> partner_;
  int original_n_ = 0;
};

/// True iff every player has at most two vertices.
bool is_couples_instance(const Instance& inst);

/// Pads each size-1 player with a fresh isolated vertex (appended in player
/// order). Matchings, utilities and certificates carry over unchanged.
/// Throws InputError if some player has three or more vertices.
CouplesGame normalize(const Instance& inst);

/// Graph on the same vertices with the edges of E, the player edges of every
/// player not in `dropped`, and `extra`.
Graph alternating_graph(const CouplesGame& cg, std::span<const PlayerId> dropped,
                        std::span<const Edge> extra = {});

/// An M0-alternating cycle through p's player edge, as the vertex sequence
/// p0, x1, x1', ..., xk', p1 (the closing edge p1 p0 is the player edge).
std::optional<std::vector<Vertex>> alternating_cycle_through(const CouplesGame& cg, PlayerId p);

bool on_alternating_cycle(const CouplesGame& cg, PlayerId p);

MembershipVerdict weak_membership(const CouplesGame& cg, const Matching& m);
MembershipVerdict strong_membership(const CouplesGame& cg, const Matching& m);

/// Always returns a weak-core matching.
Matching weak_construct(const CouplesGame& cg);

/// Is there an M0-alternating path whose end player edges are a and c and
/// which traverses b? All three must be distinct members of K.
bool ordered_triple_path_exists(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c);

/// An odd cycle and an M0-alternating path sharing exactly the vertex v.
/// cycle = v, x1, x1', ..., xk' (both cycle edges at v are graph edges, the
/// rest alternate starting with the player edge x1 x1'); path = v, v', ...,
/// tip, starting and ending with a player edge.
struct DeltaPath {
  std::vector<Vertex> cycle;
  std::vector<Vertex> path;
};

/// Checks a DeltaPath against the definition, with a, b on the cycle and c
/// owning the tip.
bool delta_path_valid(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c,
                      const DeltaPath& dp);

/// Decides (a, b; c) delta-path existence for members of K, caching one
/// decomposition per deleted player edge. Not thread-safe.
class DeltaPathSolver {
 public:
  explicit DeltaPathSolver(const CouplesGame& cg);

  bool in_k(PlayerId p) const { return in_k_[static_cast<std::size_t>(p)] != 0; }

  /// Throws InputError unless a, b, c are distinct members of K.
  std::optional<DeltaPath> find(PlayerId a, PlayerId b, PlayerId c);
  bool exists(PlayerId a, PlayerId b, PlayerId c) { return find(a, b, c).has_value(); }

  struct Removed;

 private:
  const Removed& removed(PlayerId a);

  const CouplesGame* cg_;
  std::vector<char> in_k_;
  std::map<PlayerId, std::shared_ptr<const Removed>> cache_;
};

bool delta_path_exists(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c);

struct StrongCoreStructure {
  std::vector<PlayerId> k_set;
  std::vector<PlayerId> k0_set;
  std::vector<PlayerId> l_set;
  std::vector<PlayerId> l_star;
  std::vector<std::pair<PlayerId, PlayerId>> pairs;   // first < second, among L
  std::vector<std::vector<PlayerId>> components;      // of the pair graph on L*
};

/// Throws InternalError if a pair-graph component is not a clique.
StrongCoreStructure strong_core_structure(const CouplesGame& cg);

/// Lower-bound quotas whose feasible matchings are exactly the strong core.
PartitionQuota strong_core_quotas(const CouplesGame& cg, const StrongCoreStructure& s);

/// Whether a utility vector meets the quotas above.
bool meets_strong_core_quotas(const CouplesGame& cg, const StrongCoreStructure& s,
                              const UtilityVector& u);

/// A strong-core matching, or nullopt when the strong core is empty.
std::optional<Matching> strong_core_solve(const CouplesGame& cg);

}  // namespace ntucore

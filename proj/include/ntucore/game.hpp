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
#include <string_view>
#include <vector>

#include "ntucore/graph.hpp"

namespace ntucore {

using PlayerId = int;

/// u_i = number of player i's vertices covered by a matching.
using UtilityVector = std::vector<int>;

/// Weak core: no strongly blocking coalition. Strong core: no weakly
/// blocking coalition.
enum class CoreKind { weak, strong };

/// Strong block: every coalition member strictly improves. Weak block: all
/// weakly improve and at least one strictly.
enum class BlockKind { strong, weak };

/// The blocking notion that refutes membership in a core.
constexpr BlockKind refuting_block(CoreKind core) {
  return core == CoreKind::weak ? BlockKind::strong : BlockKind::weak;
}

std::string_view to_string(CoreKind kind);
std::string_view to_string(BlockKind kind);
CoreKind parse_core_kind(std::string_view text);

/// A graph whose vertices are partitioned among players.
class Instance {
 public:
  Instance() = default;

  /// Throws InputError unless the players partition 0..n-1 into non-empty
  /// classes. Each class is stored sorted.
  Instance(Graph graph, std::vector<std::vector<Vertex>> players);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int player_count() const { return static_cast<int>(players_.size()); }
  std::span<const std::vector<Vertex>> players() const { return players_; }
  std::span<const Vertex> player(PlayerId p) const { return players_[static_cast<std::size_t>(p)]; }
  PlayerId owner(Vertex v) const { return owner_[static_cast<std::size_t>(v)]; }
  int max_player_size() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph_ == b.graph_ && a.players_ == b.players_;
  }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> players_;
  std::vector<PlayerId> owner_;
};

/// A coalition together with a matching inside its induced subgraph that
/// improves on a challenged utility vector.
struct BlockCertificate {
  std::vector<PlayerId> coalition;  // sorted
  Matching witness;                 // in instance vertex ids
  BlockKind kind = BlockKind::strong;
};

struct MembershipVerdict {
  bool in_core = true;
  std::optional<BlockCertificate> certificate;
};

/// Throws InputError if m is not a matching of the instance graph.
UtilityVector utility(const Instance& inst, const Matching& m);

/// Utility vector of m restricted to the players, without graph validation.
UtilityVector coverage_counts(const Instance& inst, const Matching& m);

/// Re-checks a certificate from scratch against the challenged vector.
bool certificate_valid(const Instance& inst, const UtilityVector& challenged,
                       const BlockCertificate& cert);

/// Looks for a blocking matching of the given kind inside the coalition's
/// induced subgraph, through lower-bounded matchings. Strong: quotas u_j + 1
/// for every member. Weak: for each pivot in coalition order, quota u_pivot + 1
/// and u_j for the others. A quota above the player's size rules that
/// configuration out. Returns the witness in instance ids.
std::optional<Matching> find_block_for_coalition(const Instance& inst, const UtilityVector& u,
                                                 std::span<const PlayerId> coalition,
                                                 BlockKind kind);

inline constexpr int kDefaultMaxPlayers = 20;

/// Definitional membership test: tries every coalition in order of size, then
/// lexicographically, and returns the first block found. Throws ResourceError
/// when the instance has more than max_players players.
MembershipVerdict core_membership_by_enumeration(const Instance& inst, const Matching& m,
                                                 CoreKind core,
                                                 int max_players = kDefaultMaxPlayers);

/// Same, for a bare utility vector.
MembershipVerdict core_membership_of_vector(const Instance& inst, const UtilityVector& u,
                                            CoreKind core, int max_players = kDefaultMaxPlayers);

/// Visits the non-empty coalitions of {0..players-1} by size, then
/// lexicographically, stopping early once visit returns true. Returns whether
/// it stopped early.
bool for_each_coalition(int players, const std::function<bool(std::span<const PlayerId>)>& visit);

}  // namespace ntucore

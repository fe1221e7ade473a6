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

#include "ntucore/game.hpp"

#include <algorithm>
#include <string>

#include "ntucore/errors.hpp"
#include "ntucore/matroid.hpp"

namespace ntucore {

namespace {
inline std::size_t at(int v) { return static_cast<std::size_t>(v); }
}  // namespace

std::string_view to_string(CoreKind kind) { return kind == CoreKind::weak ? "weak" : "strong"; }

std::string_view to_string(BlockKind kind) { return kind == BlockKind::weak ? "weak" : "strong"; }

CoreKind parse_core_kind(std::string_view text) {
  if (text == "weak") return CoreKind::weak;
  if (text == "strong") return CoreKind::strong;
  throw InputError("unknown core kind '" + std::string(text) + "' (expected weak|strong)");
}

Instance::Instance(Graph graph, std::vector<std::vector<Vertex>> players)
    : graph_(std::move(graph)), players_(std::move(players)) {
  const int n = graph_.vertex_count();
  owner_.assign(at(n), -1);
  for (std::size_t p = 0; p < players_.size(); ++p) {
    auto& cls = players_[p];
    if (cls.empty()) throw InputError("player " + std::to_string(p) + " has no vertices");
    std::sort(cls.begin(), cls.end());
    for (Vertex v : cls) {
      if (v < 0 || v >= n) {
        throw InputError("player " + std::to_string(p) + " lists vertex " + std::to_string(v) +
                         " outside 0.." + std::to_string(n - 1));
      }
      if (owner_[at(v)] != -1) {
        throw InputError("vertex " + std::to_string(v) + " belongs to two players");
      }
      owner_[at(v)] = static_cast<PlayerId>(p);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner_[at(v)] == -1) throw InputError("vertex " + std::to_string(v) + " has no player");
  }
}

int Instance::max_player_size() const {
  std::size_t best = 0;
  for (const auto& cls : players_) best = std::max(best, cls.size());
  return static_cast<int>(best);
}

UtilityVector coverage_counts(const Instance& inst, const Matching& m) {
  UtilityVector u(at(inst.player_count()), 0);
  for (Vertex v : m.covered()) {
    if (v < 0 || v >= inst.vertex_count()) throw InputError("matching vertex out of range");
    ++u[at(inst.owner(v))];
  }
  return u;
}

UtilityVector utility(const Instance& inst, const Matching& m) {
  validate_matching(inst.graph(), m);
  return coverage_counts(inst, m);
}

bool certificate_valid(const Instance& inst, const UtilityVector& challenged,
                       const BlockCertificate& cert) {
  if (cert.coalition.empty()) return false;
  if (challenged.size() != at(inst.player_count())) return false;
  std::vector<char> member(at(inst.player_count()), 0);
  for (PlayerId p : cert.coalition) {
    if (p < 0 || p >= inst.player_count() || member[at(p)]) return false;
    member[at(p)] = 1;
  }
  if (!is_matching_of(inst.graph(), cert.witness)) return false;
  for (const auto& e : cert.witness.edges()) {
    if (!member[at(inst.owner(e.u))] || !member[at(inst.owner(e.v))]) return false;
  }
  const auto gained = coverage_counts(inst, cert.witness);
  bool some_strict = false;
  for (PlayerId p : cert.coalition) {
    const int before = challenged[at(p)];
    const int after = gained[at(p)];
    if (after > before) some_strict = true;
    if (cert.kind == BlockKind::strong && after <= before) return false;
    if (cert.kind == BlockKind::weak && after < before) return false;
  }
  return some_strict;
}

std::optional<Matching> find_block_for_coalition(const Instance& inst, const UtilityVector& u,
                                                 std::span<const PlayerId> coalition,
                                                 BlockKind kind) {
  if (coalition.empty()) throw InputError("empty coalition");
  std::vector<Vertex> vertices;
  PartitionQuota pq;
  for (PlayerId p : coalition) {
    if (p < 0 || p >= inst.player_count()) throw InputError("coalition player out of range");
    std::vector<Vertex> group;
    for (Vertex v : inst.player(p)) {
      group.push_back(static_cast<Vertex>(vertices.size()));
      vertices.push_back(v);
    }
    pq.groups.push_back(std::move(group));
    pq.quotas.push_back(0);
  }
  const auto sub = induced_subgraph(inst.graph(), vertices);
  const MatchingMatroid matroid(sub.graph);

  auto lift = [&](const Matching& local) {
    std::vector<Edge> edges;
    for (const auto& e : local.edges()) {
      edges.push_back(make_edge(sub.to_parent[at(e.u)], sub.to_parent[at(e.v)]));
    }
    return Matching(std::move(edges));
  };
  auto size_of = [&](std::size_t i) { return static_cast<int>(pq.groups[i].size()); };

  if (kind == BlockKind::strong) {
    for (std::size_t i = 0; i < coalition.size(); ++i) {
      pq.quotas[i] = u[at(coalition[i])] + 1;
      if (pq.quotas[i] > size_of(i)) return std::nullopt;
    }
    if (pq.total() > matroid.rank()) return std::nullopt;
    if (auto m = matching_with_lower_bounds(matroid, pq)) return lift(*m);
    return std::nullopt;
  }

  for (std::size_t pivot = 0; pivot < coalition.size(); ++pivot) {
    bool feasible = true;
    for (std::size_t i = 0; i < coalition.size(); ++i) {
      pq.quotas[i] = u[at(coalition[i])] + (i == pivot ? 1 : 0);
      if (pq.quotas[i] > size_of(i)) feasible = false;
    }
    if (!feasible || pq.total() > matroid.rank()) continue;
    if (auto m = matching_with_lower_bounds(matroid, pq)) return lift(*m);
  }
  return std::nullopt;
}

bool for_each_coalition(int players,
                        const std::function<bool(std::span<const PlayerId>)>& visit) {
  for (int size = 1; size <= players; ++size) {
    std::vector<PlayerId> pick(at(size));
    for (int i = 0; i < size; ++i) pick[at(i)] = i;
    for (;;) {
      if (visit(pick)) return true;
      int i = size - 1;
      while (i >= 0 && pick[at(i)] == players - size + i) --i;
      if (i < 0) break;
      ++pick[at(i)];
      for (int j = i + 1; j < size; ++j) pick[at(j)] = pick[at(j - 1)] + 1;
    }
  }
  return false;
}

MembershipVerdict core_membership_of_vector(const Instance& inst, const UtilityVector& u,
                                            CoreKind core, int max_players) {
  if (inst.player_count() > max_players) {
    throw ResourceError("coalition enumeration over " + std::to_string(inst.player_count()) +
                        " players exceeds the guard of " + std::to_string(max_players) +
                        "; use the couples method or the oracle");
  }
  if (u.size() != at(inst.player_count())) throw InputError("utility vector has wrong length");
  const BlockKind kind = refuting_block(core);
  std::vector<char> saturated(at(inst.player_count()), 0);
  for (PlayerId p = 0; p < inst.player_count(); ++p) {
    saturated[at(p)] = u[at(p)] >= static_cast<int>(inst.player(p).size());
  }

  MembershipVerdict verdict;
  for_each_coalition(inst.player_count(), [&](std::span<const PlayerId> coalition) {
    // Saturated players can never strictly improve; for strong blocks every
    // member must, for weak blocks at least one must.
    const auto full = std::count_if(coalition.begin(), coalition.end(),
                                    [&](PlayerId p) { return saturated[at(p)] != 0; });
    if (kind == BlockKind::strong && full > 0) return false;
    if (kind == BlockKind::weak && full == static_cast<long>(coalition.size())) return false;
    auto witness = find_block_for_coalition(inst, u, coalition, kind);
    if (!witness) return false;
    BlockCertificate cert{{coalition.begin(), coalition.end()}, std::move(*witness), kind};
    if (!certificate_valid(inst, u, cert)) {
      throw InternalError("lower-bound search returned an invalid blocking matching");
    }
    verdict.in_core = false;
    verdict.certificate = std::move(cert);
    return true;
  });
  return verdict;
}

MembershipVerdict core_membership_by_enumeration(const Instance& inst, const Matching& m,
                                                 CoreKind core, int max_players) {
  return core_membership_of_vector(inst, utility(inst, m), core, max_players);
}

}  // namespace ntucore

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

#include "ntucore/couples.hpp"

#include <algorithm>
#include <string>

#include "couples_detail.hpp"
#include "ntucore/errors.hpp"
#include "ntucore/matching.hpp"

namespace ntucore {

namespace {

inline std::size_t at(int v) { return static_cast<std::size_t>(v); }

// The game restricted to a set of players, with ids mapped back.
struct SubGame {
  CouplesGame game;
  std::vector<Vertex> to_parent;
};

SubGame restrict_to(const CouplesGame& cg, std::span<const PlayerId> players) {
  std::vector<Vertex> vertices;
  std::vector<std::vector<Vertex>> local_players;
  for (PlayerId p : players) {
    const auto local = static_cast<Vertex>(vertices.size());
    local_players.push_back({local, local + 1});
    vertices.push_back(cg.player(p)[0]);
    vertices.push_back(cg.player(p)[1]);
  }
  auto sub = induced_subgraph(cg.graph(), vertices);
  return {CouplesGame(Instance(std::move(sub.graph), std::move(local_players))),
          std::move(sub.to_parent)};
}

BlockCertificate certify(const CouplesGame& cg, const UtilityVector& u,
                         std::span<const Vertex> vertices, std::vector<Edge> witness,
                         BlockKind kind) {
  BlockCertificate cert;
  for (Vertex v : vertices) cert.coalition.push_back(cg.owner(v));
  std::sort(cert.coalition.begin(), cert.coalition.end());
  cert.coalition.erase(std::unique(cert.coalition.begin(), cert.coalition.end()),
                       cert.coalition.end());
  cert.witness = Matching(std::move(witness));
  cert.kind = kind;
  if (!certificate_valid(cg.instance(), u, cert)) {
    throw InternalError("alternating structure does not yield a valid blocking certificate");
  }
  return cert;
}

// Graph edges of a cycle p0, x1, x1', ..., p1.
std::vector<Edge> cycle_edges(std::span<const Vertex> cycle, std::span<const Vertex> map) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < cycle.size(); i += 2) {
    out.push_back(make_edge(map[at(cycle[i])], map[at(cycle[i + 1])]));
  }
  return out;
}

// Graph edges of a path x', x, ..., y, y' that starts and ends with player edges.
std::vector<Edge> path_edges(std::span<const Vertex> path) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i + 2 < path.size(); i += 2) out.push_back(make_edge(path[i], path[i + 1]));
  return out;
}

MembershipVerdict blocked_by(BlockCertificate cert) {
  MembershipVerdict verdict;
  verdict.in_core = false;
  verdict.certificate = std::move(cert);
  return verdict;
}

std::vector<Vertex> full_path(const CouplesGame& cg, const std::vector<Vertex>& inner) {
  std::vector<Vertex> out{cg.partner(inner.front())};
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(cg.partner(inner.back()));
  return out;
}

// An M0-alternating path with end players p and q, when the graph without
// their player edges has a matching missing only two vertices.
std::optional<std::vector<Vertex>> path_between(const CouplesGame& cg, PlayerId p, PlayerId q) {
  const PlayerId dropped[] = {p, q};
  const auto w = matching_missing_exactly(alternating_graph(cg, dropped), 2);
  if (!w) return std::nullopt;
  for (const auto& inner : detail::difference_paths(cg, *w, dropped)) {
    const PlayerId x = cg.owner(inner.front());
    const PlayerId y = cg.owner(inner.back());
    if ((x == p && y == q) || (x == q && y == p)) return full_path(cg, inner);
  }
  throw InternalError("augmenting path between two deleted player edges not found");
}

bool ordered_triple_unchecked(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c) {
  const PlayerId dropped[] = {a, b, c};
  const Graph g = alternating_graph(cg, dropped);
  for (Vertex x : cg.player(a)) {
    for (Vertex y : cg.player(c)) {
      std::vector<Vertex> keep;
      for (Vertex v = 0; v < cg.vertex_count(); ++v) {
        if (v != x && v != y) keep.push_back(v);
      }
      if (perfect_matching_exists(induced_subgraph(g, keep).graph)) return true;
    }
  }
  return false;
}

void require_triple_in_k(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c) {
  for (PlayerId p : {a, b, c}) {
    if (p < 0 || p >= cg.player_count()) throw InputError("player id out of range");
  }
  if (a == b || a == c || b == c) throw InputError("players must be distinct");
  for (PlayerId p : {a, b, c}) {
    if (on_alternating_cycle(cg, p)) {
      throw InputError("player " + std::to_string(p) + " lies on an alternating cycle");
    }
  }
}

}  // namespace

namespace detail {

std::vector<Vertex> modified_mates(const CouplesGame& cg, std::span<const PlayerId> dropped,
                                   std::span<const Edge> extra) {
  std::vector<Vertex> mate(at(cg.vertex_count()), kNoVertex);
  for (Vertex v = 0; v < cg.vertex_count(); ++v) mate[at(v)] = cg.partner(v);
  for (PlayerId p : dropped) {
    for (Vertex v : cg.player(p)) mate[at(v)] = kNoVertex;
  }
  for (const Edge& e : extra) {
    mate[at(e.u)] = e.v;
    mate[at(e.v)] = e.u;
  }
  return mate;
}

std::vector<std::vector<Vertex>> difference_paths(const CouplesGame& cg, const Matching& w,
                                                  std::span<const PlayerId> dropped) {
  const auto wmate = w.mates(cg.vertex_count());
  const auto m0 = modified_mates(cg, dropped, {});
  std::vector<Vertex> starts;
  for (PlayerId p : dropped) {
    for (Vertex v : cg.player(p)) starts.push_back(v);
  }
  std::sort(starts.begin(), starts.end());
  std::vector<std::vector<Vertex>> out;
  for (Vertex s : starts) {
    std::vector<Vertex> seq{s};
    Vertex x = s;
    for (;;) {
      const Vertex y = wmate[at(x)];
      if (y == kNoVertex) break;
      seq.push_back(y);
      const Vertex z = m0[at(y)];
      if (z == kNoVertex) break;
      seq.push_back(z);
      x = z;
    }
    const Vertex t = seq.back();
    if (seq.size() % 2 == 0 && m0[at(t)] == kNoVertex && s < t) out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace detail

CouplesGame::CouplesGame(Instance inst) : inst_(std::move(inst)) {
  partner_.assign(at(inst_.vertex_count()), kNoVertex);
  for (PlayerId p = 0; p < inst_.player_count(); ++p) {
    const auto cls = inst_.player(p);
    if (cls.size() != 2) {
      throw InputError("player " + std::to_string(p) + " does not have exactly two vertices");
    }
    partner_[at(cls[0])] = cls[1];
    partner_[at(cls[1])] = cls[0];
  }
  original_n_ = inst_.vertex_count();
}

bool is_couples_instance(const Instance& inst) { return inst.max_player_size() <= 2; }

CouplesGame normalize(const Instance& inst) {
  int n = inst.vertex_count();
  std::vector<std::vector<Vertex>> players;
  for (PlayerId p = 0; p < inst.player_count(); ++p) {
    const auto cls = inst.player(p);
    if (cls.size() > 2) {
      throw InputError("player " + std::to_string(p) + " has " + std::to_string(cls.size()) +
                       " vertices; the couples method needs at most 2 (use const or oracle)");
    }
    std::vector<Vertex> padded(cls.begin(), cls.end());
    if (padded.size() == 1) padded.push_back(n++);
    players.push_back(std::move(padded));
  }
  const auto edges = inst.graph().edges();
  CouplesGame cg(Instance(Graph(n, {edges.begin(), edges.end()}), std::move(players)));
  cg.original_n_ = inst.vertex_count();
  return cg;
}

Graph alternating_graph(const CouplesGame& cg, std::span<const PlayerId> dropped,
                        std::span<const Edge> extra) {
  std::vector<char> gone(at(cg.player_count()), 0);
  for (PlayerId p : dropped) gone[at(p)] = 1;
  const auto base = cg.graph().edges();
  std::vector<Edge> edges(base.begin(), base.end());
  for (PlayerId p = 0; p < cg.player_count(); ++p) {
    if (!gone[at(p)]) edges.push_back(cg.player_edge(p));
  }
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::with_duplicates_merged(cg.vertex_count(), std::move(edges));
}

std::optional<std::vector<Vertex>> alternating_cycle_through(const CouplesGame& cg, PlayerId p) {
  const PlayerId dropped[] = {p};
  const auto w = perfect_matching(alternating_graph(cg, dropped));
  if (!w) return std::nullopt;
  const auto paths = detail::difference_paths(cg, *w, dropped);
  if (paths.size() != 1) throw InternalError("perfect matching without a p0-p1 alternating path");
  auto cycle = paths.front();
  if (cycle.front() != cg.player(p)[0]) std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

bool on_alternating_cycle(const CouplesGame& cg, PlayerId p) {
  const PlayerId dropped[] = {p};
  return perfect_matching_exists(alternating_graph(cg, dropped));
}

MembershipVerdict weak_membership(const CouplesGame& cg, const Matching& m) {
  validate_matching(cg.graph(), m);
  const auto u = coverage_counts(cg.instance(), m);
  std::vector<PlayerId> open;
  for (PlayerId p = 0; p < cg.player_count(); ++p) {
    if (u[at(p)] <= 1) open.push_back(p);
  }
  const auto sub = restrict_to(cg, open);
  const auto& game = sub.game;
  for (PlayerId p = 0; p < game.player_count(); ++p) {
    auto cycle = alternating_cycle_through(game, p);
    if (!cycle) continue;
    std::vector<Vertex> global;
    for (Vertex v : *cycle) global.push_back(sub.to_parent[at(v)]);
    return blocked_by(certify(cg, u, global, cycle_edges(*cycle, sub.to_parent), BlockKind::strong));
  }
  std::vector<PlayerId> zero;
  for (PlayerId p = 0; p < game.player_count(); ++p) {
    if (u[at(open[at(p)])] == 0) zero.push_back(p);
  }
  for (std::size_t i = 0; i < zero.size(); ++i) {
    for (std::size_t j = i + 1; j < zero.size(); ++j) {
      auto path = path_between(game, zero[i], zero[j]);
      if (!path) continue;
      for (Vertex& v : *path) v = sub.to_parent[at(v)];
      return blocked_by(certify(cg, u, *path, path_edges(*path), BlockKind::strong));
    }
  }
  return {};
}

MembershipVerdict strong_membership(const CouplesGame& cg, const Matching& m) {
  validate_matching(cg.graph(), m);
  const auto u = coverage_counts(cg.instance(), m);
  const int players = cg.player_count();
  std::vector<Vertex> identity(at(cg.vertex_count()));
  for (Vertex v = 0; v < cg.vertex_count(); ++v) identity[at(v)] = v;

  for (PlayerId p = 0; p < players; ++p) {
    if (u[at(p)] > 1) continue;
    auto cycle = alternating_cycle_through(cg, p);
    if (!cycle) continue;
    return blocked_by(certify(cg, u, *cycle, cycle_edges(*cycle, identity), BlockKind::weak));
  }
  for (PlayerId p = 0; p < players; ++p) {
    for (PlayerId q = p + 1; q < players; ++q) {
      const bool eligible = (u[at(p)] == 0 && u[at(q)] <= 1) || (u[at(q)] == 0 && u[at(p)] <= 1);
      if (!eligible) continue;
      auto path = path_between(cg, p, q);
      if (!path) continue;
      return blocked_by(certify(cg, u, *path, path_edges(*path), BlockKind::weak));
    }
  }
  std::vector<PlayerId> half;
  for (PlayerId p = 0; p < players; ++p) {
    if (u[at(p)] == 1) half.push_back(p);
  }
  for (std::size_t i = 0; i < half.size(); ++i) {
    for (std::size_t j = i + 1; j < half.size(); ++j) {
      for (std::size_t k = j + 1; k < half.size(); ++k) {
        const PlayerId dropped[] = {half[i], half[j], half[k]};
        const auto w = matching_missing_exactly(alternating_graph(cg, dropped), 2);
        if (!w) continue;
        const auto paths = detail::difference_paths(cg, *w, dropped);
        // Two of the augmenting paths share a middle player; join them there.
        for (const auto& first : paths) {
          for (const auto& second : paths) {
            if (&first == &second) continue;
            for (int flip = 0; flip < 4; ++flip) {
              auto x = first;
              auto y = second;
              if (flip & 1) std::reverse(x.begin(), x.end());
              if (flip & 2) std::reverse(y.begin(), y.end());
              if (cg.partner(x.back()) != y.front()) continue;
              if (cg.owner(x.front()) == cg.owner(y.back())) continue;
              std::vector<Vertex> inner = x;
              inner.insert(inner.end(), y.begin(), y.end());
              const auto path = full_path(cg, inner);
              return blocked_by(certify(cg, u, path, path_edges(path), BlockKind::weak));
            }
          }
        }
        throw InternalError("three deleted player edges admit no joined alternating path");
      }
    }
  }
  return {};
}

Matching weak_construct(const CouplesGame& cg) {
  std::vector<char> alive(at(cg.player_count()), 1);
  std::vector<Edge> chosen;
  for (PlayerId p = 0; p < cg.player_count(); ++p) {
    if (!alive[at(p)]) continue;
    std::vector<PlayerId> rest;
    PlayerId local_p = -1;
    for (PlayerId q = 0; q < cg.player_count(); ++q) {
      if (!alive[at(q)]) continue;
      if (q == p) local_p = static_cast<PlayerId>(rest.size());
      rest.push_back(q);
    }
    const auto sub = restrict_to(cg, rest);
    const auto cycle = alternating_cycle_through(sub.game, local_p);
    if (!cycle) continue;
    const auto edges = cycle_edges(*cycle, sub.to_parent);
    chosen.insert(chosen.end(), edges.begin(), edges.end());
    for (Vertex v : *cycle) alive[at(cg.owner(sub.to_parent[at(v)]))] = 0;
  }
  return max_matching(cg.graph(), Matching(std::move(chosen)));
}

bool ordered_triple_path_exists(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c) {
  require_triple_in_k(cg, a, b, c);
  return ordered_triple_unchecked(cg, a, b, c);
}

bool delta_path_exists(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c) {
  return DeltaPathSolver(cg).exists(a, b, c);
}

StrongCoreStructure strong_core_structure(const CouplesGame& cg) {
  const int m = cg.player_count();
  DeltaPathSolver solver(cg);
  StrongCoreStructure s;
  for (PlayerId p = 0; p < m; ++p) {
    if (solver.in_k(p)) s.k_set.push_back(p);
  }
  for (PlayerId p : s.k_set) {
    const bool isolated = std::none_of(s.k_set.begin(), s.k_set.end(), [&](PlayerId q) {
      if (q == p) return false;
      const PlayerId dropped[] = {p, q};
      return matching_missing_exactly(alternating_graph(cg, dropped), 2).has_value();
    });
    if (isolated) s.k0_set.push_back(p);
  }
  // The A-B-C and C-B-A readings are the same path, so unordered ends suffice.
  for (PlayerId b : s.k_set) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < s.k_set.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < s.k_set.size(); ++j) {
        const PlayerId a = s.k_set[i];
        const PlayerId c = s.k_set[j];
        if (a == b || c == b || !ordered_triple_unchecked(cg, a, b, c)) continue;
        if (!solver.exists(a, b, c) && !solver.exists(c, b, a)) ok = false;
      }
    }
    if (ok) s.l_set.push_back(b);
  }
  std::vector<std::vector<char>> pair(at(m), std::vector<char>(at(m), 0));
  for (std::size_t i = 0; i < s.l_set.size(); ++i) {
    for (std::size_t j = i + 1; j < s.l_set.size(); ++j) {
      const PlayerId x = s.l_set[i];
      const PlayerId y = s.l_set[j];
      const bool linked = std::any_of(s.k_set.begin(), s.k_set.end(), [&](PlayerId c) {
        return c != x && c != y && solver.exists(x, y, c);
      });
      if (!linked) continue;
      pair[at(x)][at(y)] = pair[at(y)][at(x)] = 1;
      s.pairs.emplace_back(x, y);
    }
  }
  for (PlayerId x : s.l_set) {
    bool ok = true;
    for (PlayerId y : s.l_set) {
      for (PlayerId z : s.l_set) {
        if (y == x || z == x || y == z) continue;
        if (pair[at(x)][at(y)] && pair[at(x)][at(z)] && !pair[at(y)][at(z)]) ok = false;
      }
    }
    if (ok) s.l_star.push_back(x);
  }

  std::vector<Edge> star_edges;
  for (const auto& [x, y] : s.pairs) {
    const bool both = std::binary_search(s.l_star.begin(), s.l_star.end(), x) &&
                      std::binary_search(s.l_star.begin(), s.l_star.end(), y);
    if (both) star_edges.push_back(make_edge(x, y));
  }
  const Graph star(m, std::move(star_edges));
  for (auto& component : connected_components(star)) {
    if (!std::binary_search(s.l_star.begin(), s.l_star.end(), component.front())) continue;
    for (PlayerId x : component) {
      for (PlayerId y : component) {
        if (x != y && !pair[at(x)][at(y)]) {
          throw InternalError("pair-graph component is not a clique");
        }
      }
    }
    s.components.push_back(std::move(component));
  }
  return s;
}

PartitionQuota strong_core_quotas(const CouplesGame& cg, const StrongCoreStructure& s) {
  PartitionQuota pq;
  for (PlayerId p = 0; p < cg.player_count(); ++p) {
    if (std::binary_search(s.l_star.begin(), s.l_star.end(), p)) continue;
    pq.groups.push_back({cg.player(p).begin(), cg.player(p).end()});
    pq.quotas.push_back(2);
  }
  for (const auto& component : s.components) {
    std::vector<Vertex> group;
    for (PlayerId p : component) group.insert(group.end(), cg.player(p).begin(), cg.player(p).end());
    const bool exempt = component.size() == 1 &&
                        std::binary_search(s.k0_set.begin(), s.k0_set.end(), component.front());
    pq.quotas.push_back(exempt ? 0 : static_cast<int>(group.size()) - 1);
    pq.groups.push_back(std::move(group));
  }
  return pq;
}

bool meets_strong_core_quotas(const CouplesGame& cg, const StrongCoreStructure& s,
                              const UtilityVector& u) {
  for (PlayerId p = 0; p < cg.player_count(); ++p) {
    if (!std::binary_search(s.l_star.begin(), s.l_star.end(), p) && u[at(p)] != 2) return false;
  }
  for (const auto& component : s.components) {
    int covered = 0;
    for (PlayerId p : component) covered += u[at(p)];
    const bool exempt = component.size() == 1 &&
                        std::binary_search(s.k0_set.begin(), s.k0_set.end(), component.front());
    if (!exempt && covered < 2 * static_cast<int>(component.size()) - 1) return false;
  }
  return true;
}

std::optional<Matching> strong_core_solve(const CouplesGame& cg) {
  const auto s = strong_core_structure(cg);
  return matching_with_lower_bounds(cg.graph(), strong_core_quotas(cg, s));
}

}  // namespace ntucore

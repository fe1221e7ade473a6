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

// (a, b; c) delta-path detection.
//
// With A's player edge removed, M0 - A is a maximum matching of
// G' = E + M0 - A leaving a and a' exposed, so G' has a Gallai-Edmonds
// decomposition whose odd components are Q_a, Q_a' and Q_1..Q_k, where Q_j is
// entered from outside by exactly one player edge S_j = s_j s'_j (s'_j in Q_j).
// B and C must meet different components and C's must be one of Q_1..Q_k.
// Case 1 (B meets Q_a): a path P1 from a' to C, and a path from a through B
// to s_j, found as an augmenting path b..b' once a s_j is matched; splice
// them at their first common vertex. Case 2 (B meets Q_i): disjoint paths
// from {a, a'} to {s_i, s_j}; a path from s_i through B to s_j; a path from
// s_j into Q_j ending at C; splice again.

#include <algorithm>
#include <string>

#include "couples_detail.hpp"
#include "ntucore/couples.hpp"
#include "ntucore/errors.hpp"
#include "ntucore/matching.hpp"

namespace ntucore {

namespace {

inline std::size_t at(int v) { return static_cast<std::size_t>(v); }

using Path = std::vector<Vertex>;

// p runs between two exposed vertices and contains x, y consecutively, with
// x y matched. Returns the alternating path x, (p back to its start), (p from
// its end back to) y: the two ends are joined by the deleted player edge.
Path thread_through(Path p, Vertex x, Vertex y) {
  std::size_t k = 0;
  for (; k + 1 < p.size(); ++k) {
    if ((p[k] == x && p[k + 1] == y) || (p[k] == y && p[k + 1] == x)) break;
  }
  if (k + 1 >= p.size()) throw InternalError("augmenting path misses the added edge");
  if (p[k] == y) {
    std::reverse(p.begin(), p.end());
    k = p.size() - 2 - k;
  }
  Path out(p.rend() - static_cast<std::ptrdiff_t>(k) - 1, p.rend());
  out.insert(out.end(), p.rbegin(), p.rend() - static_cast<std::ptrdiff_t>(k) - 1);
  return out;
}

std::optional<std::size_t> position(const Path& p, Vertex v) {
  const auto it = std::find(p.begin(), p.end(), v);
  if (it == p.end()) return std::nullopt;
  return static_cast<std::size_t>(it - p.begin());
}

// First vertex of `walker` (from index `from`) that lies on `target`.
std::optional<std::pair<std::size_t, std::size_t>> first_meeting(const Path& walker,
                                                                 std::size_t from,
                                                                 const Path& target) {
  for (std::size_t t = from; t < walker.size(); ++t) {
    if (auto pos = position(target, walker[t])) return std::make_pair(t, *pos);
  }
  return std::nullopt;
}

}  // namespace

struct DeltaPathSolver::Removed {
  Vertex a = kNoVertex;
  Vertex a2 = kNoVertex;
  AlternatingForest from_a;
  AlternatingForest from_a2;
  std::vector<int> comp;
  int comp_a = -1;
  int comp_a2 = -1;
  std::vector<Vertex> s_inner;  // s'_j per component
  std::vector<Vertex> s_outer;  // s_j per component
};

bool delta_path_valid(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c,
                      const DeltaPath& dp) {
  const auto& cyc = dp.cycle;
  const auto& pth = dp.path;
  const Graph& g = cg.graph();
  if (a == b || a == c || b == c) return false;
  if (cyc.size() < 3 || cyc.size() % 2 == 0 || pth.size() < 2 || pth.size() % 2 != 0) return false;
  if (cyc.front() != pth.front()) return false;
  std::vector<char> seen(at(cg.vertex_count()), 0);
  for (const auto* seq : {&cyc, &pth}) {
    for (std::size_t i = (seq == &pth ? 1 : 0); i < seq->size(); ++i) {
      const Vertex v = (*seq)[i];
      if (v < 0 || v >= cg.vertex_count() || seen[at(v)]) return false;
      seen[at(v)] = 1;
    }
  }
  const std::size_t len = cyc.size();
  if (!g.has_edge(cyc[0], cyc[1]) || !g.has_edge(cyc[len - 1], cyc[0])) return false;
  for (std::size_t t = 1; t + 1 < len; ++t) {
    const bool ok = (t % 2 == 1) ? cg.partner(cyc[t]) == cyc[t + 1] : g.has_edge(cyc[t], cyc[t + 1]);
    if (!ok) return false;
  }
  for (std::size_t t = 0; t + 1 < pth.size(); ++t) {
    const bool ok = (t % 2 == 0) ? cg.partner(pth[t]) == pth[t + 1] : g.has_edge(pth[t], pth[t + 1]);
    if (!ok) return false;
  }
  auto on_cycle = [&](PlayerId p) {
    return std::find(cyc.begin() + 1, cyc.end(), cg.player(p)[0]) != cyc.end();
  };
  return on_cycle(a) && on_cycle(b) && cg.owner(pth.back()) == c;
}

DeltaPathSolver::DeltaPathSolver(const CouplesGame& cg) : cg_(&cg) {
  in_k_.assign(at(cg.player_count()), 0);
  for (PlayerId p = 0; p < cg.player_count(); ++p) in_k_[at(p)] = on_alternating_cycle(cg, p) ? 0 : 1;
}

const DeltaPathSolver::Removed& DeltaPathSolver::removed(PlayerId a_id) {
  if (auto it = cache_.find(a_id); it != cache_.end()) return *it->second;
  const CouplesGame& cg = *cg_;
  const PlayerId dropped[] = {a_id};
  const Graph g = alternating_graph(cg, dropped);
  const auto mate = detail::modified_mates(cg, dropped, {});

  auto r = std::make_shared<Removed>();
  r->a = cg.player(a_id)[0];
  r->a2 = cg.player(a_id)[1];
  r->from_a = alternating_reach(g, mate, r->a);
  r->from_a2 = alternating_reach(g, mate, r->a2);

  std::vector<Vertex> d;
  for (Vertex v = 0; v < cg.vertex_count(); ++v) {
    if (r->from_a.is_even(v) || r->from_a2.is_even(v)) d.push_back(v);
  }
  const auto sub = induced_subgraph(g, d);
  const auto parts = connected_components(sub.graph);
  r->comp.assign(at(cg.vertex_count()), -1);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (Vertex local : parts[j]) r->comp[at(sub.to_parent[at(local)])] = static_cast<int>(j);
  }
  r->comp_a = r->comp[at(r->a)];
  r->comp_a2 = r->comp[at(r->a2)];
  if (r->comp_a == r->comp_a2) throw InternalError("a and a' share an odd component");
  r->s_inner.assign(parts.size(), kNoVertex);
  r->s_outer.assign(parts.size(), kNoVertex);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (static_cast<int>(j) == r->comp_a || static_cast<int>(j) == r->comp_a2) continue;
    for (Vertex local : parts[j]) {
      const Vertex v = sub.to_parent[at(local)];
      const Vertex w = mate[at(v)];
      if (w == kNoVertex || r->comp[at(w)] >= 0) continue;
      if (r->s_inner[j] != kNoVertex) throw InternalError("odd component entered twice");
      r->s_inner[j] = v;
      r->s_outer[j] = w;
    }
    if (r->s_inner[j] == kNoVertex) throw InternalError("odd component without entering edge");
  }
  return *cache_.emplace(a_id, std::move(r)).first->second;
}

std::optional<DeltaPath> DeltaPathSolver::find(PlayerId a_id, PlayerId b_id, PlayerId c_id) {
  const CouplesGame& cg = *cg_;
  for (PlayerId p : {a_id, b_id, c_id}) {
    if (p < 0 || p >= cg.player_count()) throw InputError("player id out of range");
    if (!in_k(p)) throw InputError("player " + std::to_string(p) + " lies on an alternating cycle");
  }
  if (a_id == b_id || a_id == c_id || b_id == c_id) throw InputError("players must be distinct");

  const Removed& r = removed(a_id);
  auto meet = [&](PlayerId p) -> std::pair<int, Vertex> {
    for (Vertex v : cg.player(p)) {
      if (r.comp[at(v)] >= 0) return {r.comp[at(v)], v};
    }
    return {-1, kNoVertex};
  };
  const auto [bi, b] = meet(b_id);
  const auto [cj, c_in] = meet(c_id);
  if (bi < 0 || cj < 0 || cj == bi || cj == r.comp_a || cj == r.comp_a2) return std::nullopt;
  const Vertex b2 = cg.partner(b);
  const Vertex sj = r.s_outer[at(cj)];
  const Vertex sj_in = r.s_inner[at(cj)];
  const PlayerId sj_owner = cg.owner(sj);

  auto augment = [&](std::span<const PlayerId> dropped, std::span<const Edge> extra, Vertex from,
                     Vertex to) {
    return augmenting_path_between(alternating_graph(cg, dropped, extra),
                                   detail::modified_mates(cg, dropped, extra), from, to);
  };
  auto check = [&](DeltaPath dp) -> std::optional<DeltaPath> {
    if (delta_path_valid(cg, a_id, b_id, c_id, dp)) return dp;
    return std::nullopt;
  };

  if (bi == r.comp_a || bi == r.comp_a2) {
    Vertex a = r.a;
    const AlternatingForest* far = &r.from_a2;
    if (bi == r.comp_a2) {
      a = r.a2;
      far = &r.from_a;
    }
    const PlayerId dropped[] = {a_id, b_id, sj_owner};
    const Edge extra[] = {make_edge(a, sj)};
    const auto through_b = augment(dropped, extra, b, b2);
    if (!through_b) return std::nullopt;
    const Path p2 = thread_through(*through_b, a, sj);
    bool reached = false;
    for (Vertex tip : cg.player(c_id)) {
      if (!far->is_even(tip)) continue;
      reached = true;
      const Path p1 = far->path_to(tip);
      const auto m = first_meeting(p2, 0, p1);
      if (!m) continue;
      const auto [t, i1] = *m;
      DeltaPath dp;
      dp.cycle.push_back(p2[t]);
      for (std::size_t i = i1; i-- > 0;) dp.cycle.push_back(p1[i]);
      dp.cycle.insert(dp.cycle.end(), p2.begin(), p2.begin() + static_cast<std::ptrdiff_t>(t));
      dp.path.assign(p1.begin() + static_cast<std::ptrdiff_t>(i1), p1.end());
      if (auto ok = check(std::move(dp))) return ok;
    }
    if (!reached) return std::nullopt;
    throw InternalError("delta-path pieces found but do not assemble (case 1)");
  }

  const Vertex si = r.s_outer[at(bi)];
  const Vertex si_in = r.s_inner[at(bi)];
  const PlayerId si_owner = cg.owner(si);

  const PlayerId drop_s[] = {a_id, si_owner, sj_owner};
  const Edge link[] = {make_edge(si, sj)};
  const auto both = augment(drop_s, link, r.a, r.a2);
  if (!both) return std::nullopt;
  Path p1;
  Path p2;
  {
    const Path& p = *both;
    std::size_t k = 0;
    while (k + 1 < p.size() && make_edge(p[k], p[k + 1]) != link[0]) ++k;
    if (k + 1 >= p.size()) throw InternalError("augmenting path misses s_i s_j");
    Path head(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    Path tail(p.rbegin(), p.rend() - static_cast<std::ptrdiff_t>(k) - 1);
    if (head.back() == si) {
      p1 = std::move(head);
      p2 = std::move(tail);
    } else {
      p1 = std::move(tail);
      p2 = std::move(head);
    }
  }

  Path p3{si};
  if (b_id == si_owner) {
    const auto rest = augment(drop_s, {}, si_in, sj);
    if (!rest) return std::nullopt;
    p3.insert(p3.end(), rest->begin(), rest->end());
  } else {
    const PlayerId dropped[] = {a_id, b_id, si_owner, sj_owner};
    const Edge extra[] = {make_edge(si_in, sj)};
    const auto through_b = augment(dropped, extra, b, b2);
    if (!through_b) return std::nullopt;
    const Path rest = thread_through(*through_b, si_in, sj);
    p3.insert(p3.end(), rest.begin(), rest.end());
  }

  std::vector<Path> p4s;
  if (c_id == sj_owner) {
    p4s.push_back({sj, sj_in});
  } else {
    const PlayerId dropped[] = {a_id, sj_owner};
    const auto forest = alternating_reach(alternating_graph(cg, dropped),
                                          detail::modified_mates(cg, dropped, {}), sj_in);
    for (Vertex tip : cg.player(c_id)) {
      if (!forest.is_even(tip)) continue;
      Path p4{sj};
      const auto tail = forest.path_to(tip);
      p4.insert(p4.end(), tail.begin(), tail.end());
      p4s.push_back(std::move(p4));
    }
  }
  if (p4s.empty()) return std::nullopt;

  const auto m = first_meeting(p3, 1, p2);
  if (!m) throw InternalError("path through B never meets the second path");
  const auto [t, i2] = *m;
  for (const Path& p4 : p4s) {
    DeltaPath dp;
    dp.cycle.push_back(p3[t]);
    for (std::size_t i = t; i-- > 0;) dp.cycle.push_back(p3[i]);
    for (std::size_t i = p1.size() - 1; i-- > 0;) dp.cycle.push_back(p1[i]);
    dp.cycle.insert(dp.cycle.end(), p2.begin(), p2.begin() + static_cast<std::ptrdiff_t>(i2));
    dp.path.assign(p2.begin() + static_cast<std::ptrdiff_t>(i2), p2.end());
    dp.path.insert(dp.path.end(), p4.begin() + 1, p4.end());
    if (auto ok = check(std::move(dp))) return ok;
  }
  throw InternalError("delta-path pieces found but do not assemble (case 2)");
}

}  // namespace ntucore

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

#include "ntucore/oracle.hpp"

#include <algorithm>
#include <string>

#include "ntucore/errors.hpp"

namespace ntucore::oracle {

namespace {

inline std::size_t at(int v) { return static_cast<std::size_t>(v); }

struct MatchingWalk {
  std::span<const Edge> edges;
  std::int64_t cap;
  std::int64_t produced = 0;
  std::vector<char> used;
  std::vector<Edge> current;
  const std::function<bool(const Matching&)>* visit;

  bool run(std::size_t i) {
    if (i == edges.size()) {
      if (++produced > cap) {
        throw ResourceError("matching enumeration exceeded the cap of " + std::to_string(cap));
      }
      return (*visit)(Matching(current));
    }
    const Edge e = edges[i];
    if (!used[at(e.u)] && !used[at(e.v)]) {
      used[at(e.u)] = used[at(e.v)] = 1;
      current.push_back(e);
      const bool stop = run(i + 1);
      current.pop_back();
      used[at(e.u)] = used[at(e.v)] = 0;
      if (stop) return true;
    }
    return run(i + 1);
  }
};

// Enumerates M0-alternating paths that start with the player edge
// start, partner(start) and end with a player edge. visit sees every such
// path (as a vertex sequence) and may stop the search by returning true.
class PathWalk {
 public:
  PathWalk(const CouplesGame& cg, const std::function<bool(const std::vector<Vertex>&)>& visit)
      : cg_(cg), visit_(visit), used_(at(cg.vertex_count()), 0) {}

  bool from(Vertex start) {
    path_ = {start, cg_.partner(start)};
    used_.assign(used_.size(), 0);
    used_[at(start)] = used_[at(cg_.partner(start))] = 1;
    return extend();
  }

 private:
  bool extend() {
    if (visit_(path_)) return true;
    const Vertex last = path_.back();
    for (Vertex y : cg_.graph().neighbors(last)) {
      const Vertex y2 = cg_.partner(y);
      if (used_[at(y)] || used_[at(y2)]) continue;
      used_[at(y)] = used_[at(y2)] = 1;
      path_.push_back(y);
      path_.push_back(y2);
      const bool stop = extend();
      path_.pop_back();
      path_.pop_back();
      used_[at(y)] = used_[at(y2)] = 0;
      if (stop) return true;
    }
    return false;
  }

  const CouplesGame& cg_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
  std::vector<char> used_;
  std::vector<Vertex> path_;
};

void guard(const CouplesGame& cg) {
  if (cg.vertex_count() > kMaxCouplesVertices) {
    throw ResourceError("alternating-structure enumeration is limited to " +
                        std::to_string(kMaxCouplesVertices) + " vertices");
  }
}

bool touches(const CouplesGame& cg, const std::vector<Vertex>& path, PlayerId p) {
  return std::any_of(path.begin(), path.end(), [&](Vertex v) { return cg.owner(v) == p; });
}

bool blocks(const UtilityVector& u, const UtilityVector& w, BlockKind kind) {
  bool any = false;
  bool strict = false;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (w[j] == 0) continue;
    any = true;
    if (w[j] > u[j]) strict = true;
    if (kind == BlockKind::strong && w[j] <= u[j]) return false;
    if (kind == BlockKind::weak && w[j] < u[j]) return false;
  }
  return any && strict;
}

BlockCertificate certificate_from(const UtilityVector& w, const Matching& witness,
                                  BlockKind kind) {
  BlockCertificate cert;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] > 0) cert.coalition.push_back(static_cast<PlayerId>(j));
  }
  cert.witness = witness;
  cert.kind = kind;
  return cert;
}

std::map<UtilityVector, Matching> realized_vectors(const Instance& inst, std::int64_t cap) {
  std::map<UtilityVector, Matching> out;
  for_each_matching(
      inst.graph(),
      [&](const Matching& m) {
        out.try_emplace(coverage_counts(inst, m), m);
        return false;
      },
      cap);
  return out;
}

}  // namespace

void for_each_matching(const Graph& g, const std::function<bool(const Matching&)>& visit,
                       std::int64_t cap) {
  MatchingWalk walk{g.edges(), cap, 0, std::vector<char>(at(g.vertex_count()), 0), {}, &visit};
  walk.run(0);
}

std::vector<Matching> all_matchings(const Graph& g, std::int64_t cap) {
  std::vector<Matching> out;
  for_each_matching(
      g,
      [&](const Matching& m) {
        out.push_back(m);
        return false;
      },
      cap);
  return out;
}

std::int64_t count_matchings(const Graph& g, std::int64_t cap) {
  std::int64_t count = 0;
  for_each_matching(
      g,
      [&](const Matching&) {
        ++count;
        return false;
      },
      cap);
  return count;
}

int max_matching_size(const Graph& g, std::int64_t cap) {
  std::size_t best = 0;
  for_each_matching(
      g,
      [&](const Matching& m) {
        best = std::max(best, m.size());
        return false;
      },
      cap);
  return static_cast<int>(best);
}

std::vector<Vertex> even_reach(const Graph& g, const Matching& m, Vertex root) {
  const int n = g.vertex_count();
  const auto mate = m.mates(n);
  if (root < 0 || root >= n || mate[at(root)] != kNoVertex) {
    throw InputError("even_reach root must be an exposed vertex");
  }
  std::vector<char> used(at(n), 0);
  std::vector<char> even(at(n), 0);
  std::function<void(Vertex)> grow = [&](Vertex x) {
    even[at(x)] = 1;
    for (Vertex y : g.neighbors(x)) {
      if (used[at(y)] || mate[at(x)] == y) continue;
      const Vertex z = mate[at(y)];
      if (z == kNoVertex || used[at(z)]) continue;
      used[at(y)] = used[at(z)] = 1;
      grow(z);
      used[at(y)] = used[at(z)] = 0;
    }
  };
  used[at(root)] = 1;
  grow(root);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (even[at(v)]) out.push_back(v);
  }
  return out;
}

CoreOutcome oracle_core(const Instance& inst, CoreKind kind, std::int64_t cap) {
  const auto realized = realized_vectors(inst, cap);
  const BlockKind block = refuting_block(kind);
  CoreOutcome outcome;
  for (const auto& [u, rep] : realized) {
    bool blocked = false;
    for (const auto& [w, witness] : realized) {
      if (!blocks(u, w, block)) continue;
      outcome.blocked.emplace(u, certificate_from(w, witness, block));
      blocked = true;
      break;
    }
    if (!blocked) outcome.in_core.emplace(u, rep);
  }
  return outcome;
}

MembershipVerdict oracle_membership(const Instance& inst, const Matching& m, CoreKind kind,
                                    std::int64_t cap) {
  const auto u = utility(inst, m);
  const BlockKind block = refuting_block(kind);
  MembershipVerdict verdict;
  for (const auto& [w, witness] : realized_vectors(inst, cap)) {
    if (!blocks(u, w, block)) continue;
    verdict.in_core = false;
    verdict.certificate = certificate_from(w, witness, block);
    break;
  }
  return verdict;
}

bool has_alternating_cycle(const CouplesGame& cg, PlayerId p) {
  guard(cg);
  const Vertex p0 = cg.player(p)[0];
  const std::function<bool(const std::vector<Vertex>&)> closes =
      [&](const std::vector<Vertex>& path) { return cg.graph().has_edge(path.back(), p0); };
  return PathWalk(cg, closes).from(p0);
}

bool has_alternating_path(const CouplesGame& cg, PlayerId p, PlayerId q) {
  guard(cg);
  const std::function<bool(const std::vector<Vertex>&)> ends =
      [&](const std::vector<Vertex>& path) { return cg.owner(path.back()) == q; };
  PathWalk walk(cg, ends);
  return walk.from(cg.player(p)[0]) || walk.from(cg.player(p)[1]);
}

bool has_ordered_triple_path(const CouplesGame& cg, PlayerId a, PlayerId b, PlayerId c) {
  guard(cg);
  const std::function<bool(const std::vector<Vertex>&)> ends =
      [&](const std::vector<Vertex>& path) {
        return cg.owner(path.back()) == c && touches(cg, path, b);
      };
  PathWalk walk(cg, ends);
  return walk.from(cg.player(a)[0]) || walk.from(cg.player(a)[1]);
}

std::optional<DeltaPath> find_delta_path(const CouplesGame& cg, PlayerId a, PlayerId b,
                                         PlayerId c) {
  guard(cg);
  if (a == b || a == c || b == c) return std::nullopt;
  const Graph& g = cg.graph();
  std::vector<char> used(at(cg.vertex_count()), 0);
  std::optional<DeltaPath> found;

  // Cycle v, y1, y1', ..., yk' closed by the graph edge yk' v.
  std::vector<Vertex> cycle;
  std::function<bool()> close_cycle = [&]() {
    const Vertex last = cycle.back();
    if (cycle.size() >= 3 && g.has_edge(last, cycle.front()) &&
        std::find(cycle.begin() + 1, cycle.end(), cg.player(a)[0]) != cycle.end() &&
        std::find(cycle.begin() + 1, cycle.end(), cg.player(b)[0]) != cycle.end()) {
      return true;
    }
    for (Vertex y : g.neighbors(last)) {
      const Vertex y2 = cg.partner(y);
      if (used[at(y)] || used[at(y2)]) continue;
      used[at(y)] = used[at(y2)] = 1;
      cycle.push_back(y);
      cycle.push_back(y2);
      if (close_cycle()) return true;
      cycle.pop_back();
      cycle.pop_back();
      used[at(y)] = used[at(y2)] = 0;
    }
    return false;
  };

  const std::function<bool(const std::vector<Vertex>&)> at_v =
      [&](const std::vector<Vertex>& tip_path) {
        std::fill(used.begin(), used.end(), 0);
        for (Vertex x : tip_path) used[at(x)] = 1;
        cycle = {tip_path.back()};
        if (!close_cycle()) return false;
        found = DeltaPath{cycle, {tip_path.rbegin(), tip_path.rend()}};
        return true;
      };
  PathWalk walk(cg, at_v);
  for (Vertex tip : cg.player(c)) {
    if (walk.from(tip)) break;
  }
  return found;
}

StrongCoreStructure strong_core_structure(const CouplesGame& cg) {
  guard(cg);
  const int m = cg.player_count();
  StrongCoreStructure s;
  std::vector<char> in_k(at(m), 0);
  for (PlayerId p = 0; p < m; ++p) {
    if (!has_alternating_cycle(cg, p)) {
      in_k[at(p)] = 1;
      s.k_set.push_back(p);
    }
  }
  for (PlayerId p : s.k_set) {
    const bool isolated = std::none_of(s.k_set.begin(), s.k_set.end(), [&](PlayerId q) {
      return q != p && has_alternating_path(cg, p, q);
    });
    if (isolated) s.k0_set.push_back(p);
  }
  for (PlayerId b : s.k_set) {
    bool ok = true;
    for (PlayerId a : s.k_set) {
      for (PlayerId c : s.k_set) {
        if (!ok || a == b || c == b || a == c) continue;
        if (!has_ordered_triple_path(cg, a, b, c)) continue;
        if (!has_delta_path(cg, a, b, c) && !has_delta_path(cg, c, b, a)) ok = false;
      }
    }
    if (ok) s.l_set.push_back(b);
  }
  std::vector<std::vector<char>> pair(at(m), std::vector<char>(at(m), 0));
  for (PlayerId x : s.l_set) {
    for (PlayerId y : s.l_set) {
      if (x >= y) continue;
      for (PlayerId c : s.k_set) {
        if (c == x || c == y || !has_delta_path(cg, x, y, c)) continue;
        pair[at(x)][at(y)] = pair[at(y)][at(x)] = 1;
        s.pairs.emplace_back(x, y);
        break;
      }
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
  std::vector<int> comp(at(m), -1);
  for (PlayerId x : s.l_star) {
    if (comp[at(x)] >= 0) continue;
    comp[at(x)] = static_cast<int>(s.components.size());
    std::vector<PlayerId> members{x};
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (PlayerId y : s.l_star) {
        if (comp[at(y)] < 0 && pair[at(members[i])][at(y)]) {
          comp[at(y)] = comp[at(x)];
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    s.components.push_back(std::move(members));
  }
  return s;
}

}  // namespace ntucore::oracle

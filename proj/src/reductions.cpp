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


#include "ntucore/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <utility>

#include "ntucore/errors.hpp"

namespace ntucore {

namespace {

inline std::size_t at(int v) { return static_cast<std::size_t>(v); }

class Builder {
 public:
  Builder() = default;
  explicit Builder(const GeneratedInstance& base) : names_(base.vertex_names), player_names_(base.player_names) {
    const auto e = base.instance.graph().edges();
    edges_.assign(e.begin(), e.end());
    for (const auto& p : base.instance.players()) players_.push_back(p);
    if (base.matching) {
      const auto me = base.matching->edges();
      matching_.emplace(me.begin(), me.end());
    }
  }

  Vertex vertex(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Vertex>(names_.size() - 1);
  }
  void edge(Vertex a, Vertex b) { edges_.push_back(make_edge(a, b)); }
  void player(std::string name, std::vector<Vertex> vs) {
    player_names_.push_back(std::move(name));
    players_.push_back(std::move(vs));
  }
  void start_matching() {
    if (!matching_) matching_.emplace();
  }
  bool has_matching() const { return matching_.has_value(); }
  void match(Vertex a, Vertex b) { matching_->push_back(make_edge(a, b)); }

  GeneratedInstance finish() {
    GeneratedInstance out;
    const int n = static_cast<int>(names_.size());
    out.instance = Instance(Graph(n, std::move(edges_)), std::move(players_));
    if (matching_) {
      out.matching = Matching(std::move(*matching_));
      validate_matching(out.instance.graph(), *out.matching);
    }
    out.vertex_names = std::move(names_);
    out.player_names = std::move(player_names_);
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> players_;
  std::vector<std::string> player_names_;
  std::optional<std::vector<Edge>> matching_;
};

// Vertices of one copy of the seven-vertex-player instance; at(letter, i)
// with letter 0, 1, 2 for a, b, c and i in 1..7.
struct Triad {
  std::array<std::array<Vertex, 7>, 3> id{};
  Vertex operator()(int letter, int i) const { return id[at(letter % 3)][at(i - 1)]; }
};

Triad add_triad(Builder& b, const std::string& prefix) {
  Triad t;
  static constexpr char kLetters[] = {'a', 'b', 'c'};
  for (int l = 0; l < 3; ++l) {
    for (int i = 1; i <= 7; ++i) {
      t.id[at(l)][at(i - 1)] = b.vertex(prefix + kLetters[l] + std::to_string(i));
    }
  }
  using Slot = std::pair<int, int>;
  const std::vector<std::vector<Slot>> cliques = {
      {{0, 1}, {2, 2}, {2, 3}, {1, 4}, {1, 5}},
      {{1, 1}, {0, 2}, {0, 3}, {2, 4}, {2, 5}},
      {{2, 1}, {1, 2}, {1, 3}, {0, 4}, {0, 5}},
      {{0, 6}, {1, 6}, {2, 6}},
      {{0, 7}, {1, 7}, {2, 7}},
  };
  for (const auto& q : cliques) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        b.edge(t(q[i].first, q[i].second), t(q[j].first, q[j].second));
      }
    }
  }
  for (int l = 0; l < 3; ++l) {
    std::vector<Vertex> vs(t.id[at(l)].begin(), t.id[at(l)].end());
    b.player(prefix + static_cast<char>('A' + l), std::move(vs));
  }
  return t;
}

// The maximum matching leaving a1, b1, c1, a6, a7 exposed, with letters
// rotated by `shift` (a -> b -> c -> a maps the instance onto itself).
void match_triad(Builder& b, const Triad& t, int shift) {
  static constexpr int kPairs[][4] = {{2, 2, 2, 3}, {1, 4, 1, 5}, {0, 2, 0, 3}, {2, 4, 2, 5},
                                      {1, 2, 1, 3}, {0, 4, 0, 5}, {1, 6, 2, 6}, {1, 7, 2, 7}};
  for (const auto& p : kPairs) b.match(t(p[0] + shift, p[1]), t(p[2] + shift, p[3]));
}

void check_gadget_claims(const GeneratedInstance& g) {
  if (!is_bipartite(g.instance.graph())) throw InternalError("generated graph is not bipartite");
  if (g.instance.max_player_size() > 3) throw InternalError("generated class exceeds size 3");
}

}  // namespace

void validate(const X3CInstance& x3c) {
  if (x3c.elements <= 0 || x3c.elements % 3 != 0) {
    throw InputError("x3c: element count must be a positive multiple of 3");
  }
  for (const auto& s : x3c.sets) {
    if (!(1 <= s[0] && s[0] < s[1] && s[1] < s[2] && s[2] <= x3c.elements)) {
      throw InputError("x3c: sets must be strictly ascending triples within 1.." +
                       std::to_string(x3c.elements));
    }
  }
}

void validate(const CnfFormula& cnf) {
  if (cnf.variables < 0) throw InputError("cnf: negative variable count");
  for (const auto& c : cnf.clauses) {
    for (int lit : c) {
      if (lit == 0 || lit > cnf.variables || -lit > cnf.variables) {
        throw InputError("cnf: literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

GeneratedInstance gen_example1() {
  Builder b;
  b.start_matching();
  match_triad(b, add_triad(b, ""), 0);
  return b.finish();
}

GeneratedInstance attach_special_edge(const GeneratedInstance& host, Vertex u, Vertex v,
                                      const std::string& label) {
  const int n = host.instance.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
    throw InputError("special edge endpoints must be two distinct host vertices");
  }
  Builder b(host);
  const Triad h = add_triad(b, label + ".");
  Vertex s[5];
  for (int i = 1; i <= 4; ++i) s[i] = b.vertex(label + ".s" + std::to_string(i));
  const Vertex t1 = b.vertex(label + ".t1");
  const Vertex t2 = b.vertex(label + ".t2");
  b.player(label + ".S", {s[1], s[2], s[3], s[4]});
  b.player(label + ".T", {t1, t2});
  b.edge(s[2], h(0, 1));
  b.edge(s[1], t1);
  b.edge(s[4], t2);
  b.edge(u, s[1]);
  b.edge(s[4], v);
  b.edge(s[2], s[3]);
  if (b.has_matching()) {
    b.match(s[1], t1);
    b.match(s[2], h(0, 1));
    b.match(s[4], t2);
    match_triad(b, h, 0);
  }
  return b.finish();
}

GeneratedInstance gen_x3c_weak(const X3CInstance& x3c) {
  validate(x3c);
  const int e = x3c.elements;
  Builder b;
  b.start_matching();
  std::vector<Vertex> a(at(e) + 1);
  for (int i = 1; i <= e; ++i) a[at(i)] = b.vertex("a" + std::to_string(i));
  // lo[i] = b^i_{i,i+1}, hi[i] = b^{i+1}_{i,i+1}
  std::vector<Vertex> lo(at(e) + 1, kNoVertex), hi(at(e) + 1, kNoVertex);
  for (int i = 1; i < e; ++i) {
    const std::string tag = "b" + std::to_string(i) + "," + std::to_string(i + 1);
    lo[at(i)] = b.vertex(tag + "^" + std::to_string(i));
    hi[at(i)] = b.vertex(tag + "^" + std::to_string(i + 1));
    b.edge(lo[at(i)], hi[at(i)]);
    b.match(lo[at(i)], hi[at(i)]);
  }
  for (int i = 1; i <= e; ++i) {
    std::vector<Vertex> vs;
    if (i > 1) vs.push_back(hi[at(i - 1)]);
    vs.push_back(a[at(i)]);
    if (i < e) vs.push_back(lo[at(i)]);
    b.player("A" + std::to_string(i), std::move(vs));
  }
  for (std::size_t j = 0; j < x3c.sets.size(); ++j) {
    const std::string tag = std::to_string(j + 1);
    Vertex c[3], d[2];
    for (int l = 0; l < 3; ++l) c[l] = b.vertex("c" + tag + "^" + std::to_string(l + 1));
    for (int l = 0; l < 2; ++l) d[l] = b.vertex("d" + tag + "^" + std::to_string(l + 1));
    for (int l = 0; l < 2; ++l) {
      b.edge(c[l], d[l]);
      b.match(c[l], d[l]);
    }
    for (int l = 0; l < 3; ++l) b.edge(c[l], a[at(x3c.sets[j][at(l)])]);
    b.player("C" + tag, {c[0], c[1], c[2]});
    b.player("D" + tag, {d[0], d[1]});
  }
  auto out = b.finish();
  check_gadget_claims(out);
  return out;
}

GeneratedInstance gen_x3c_strong(const X3CInstance& x3c) {
  validate(x3c);
  const int e = x3c.elements;
  const int last = e - 1;  // index of the last A and X player
  Builder b;
  b.start_matching();
  std::vector<Vertex> a(at(e) + 1), x(at(e), kNoVertex);
  for (int i = 1; i <= e; ++i) a[at(i)] = b.vertex("a" + std::to_string(i));
  for (int i = 1; i < e; ++i) {
    x[at(i)] = b.vertex("x" + std::to_string(i));
    b.edge(x[at(i)], a[at(i)]);
    b.match(x[at(i)], a[at(i)]);
  }
  auto chain = [&](char letter, std::vector<Vertex>& lo, std::vector<Vertex>& hi) {
    lo.assign(at(e), kNoVertex);
    hi.assign(at(e), kNoVertex);
    for (int i = 1; i < last; ++i) {
      const std::string tag = letter + std::to_string(i) + "," + std::to_string(i + 1);
      lo[at(i)] = b.vertex(tag + "^" + std::to_string(i));
      hi[at(i)] = b.vertex(tag + "^" + std::to_string(i + 1));
      b.edge(lo[at(i)], hi[at(i)]);
      b.match(lo[at(i)], hi[at(i)]);
    }
  };
  std::vector<Vertex> blo, bhi, ylo, yhi;
  chain('b', blo, bhi);
  chain('y', ylo, yhi);
  for (int i = 1; i <= last; ++i) {
    std::vector<Vertex> vs;
    if (i > 1) vs.push_back(bhi[at(i - 1)]);
    vs.push_back(a[at(i)]);
    if (i < last) vs.push_back(blo[at(i)]);
    if (i == last) vs.push_back(a[at(e)]);
    b.player("A" + std::to_string(i), std::move(vs));
  }
  for (int i = 1; i <= last; ++i) {
    std::vector<Vertex> vs;
    if (i > 1) vs.push_back(yhi[at(i - 1)]);
    vs.push_back(x[at(i)]);
    if (i < last) vs.push_back(ylo[at(i)]);
    b.player("X" + std::to_string(i), std::move(vs));
  }
  for (std::size_t j = 0; j < x3c.sets.size(); ++j) {
    const std::string tag = std::to_string(j + 1);
    Vertex c[3], d[3];
    for (int l = 0; l < 3; ++l) c[l] = b.vertex("c" + tag + "^" + std::to_string(l + 1));
    for (int l = 0; l < 3; ++l) d[l] = b.vertex("d" + tag + "^" + std::to_string(l + 1));
    for (int l = 0; l < 3; ++l) {
      b.edge(c[l], d[l]);
      b.match(c[l], d[l]);
      b.edge(c[l], a[at(x3c.sets[j][at(l)])]);
    }
    b.player("C" + tag, {c[0], c[1], c[2]});
    b.player("D" + tag, {d[0], d[1], d[2]});
  }
  auto out = b.finish();
  check_gadget_claims(out);
  const auto covered = out.matching->covered();
  if (static_cast<int>(covered.size()) != out.instance.vertex_count() - 1 ||
      out.matching->covers(a[at(e)])) {
    throw InternalError("strong-core candidate must expose exactly a_3n");
  }
  return out;
}

GeneratedInstance gen_3sat_weak_emptiness(const CnfFormula& cnf,
                                          const std::optional<std::vector<bool>>& assignment) {
  validate(cnf);
  const std::size_t nv = at(cnf.variables);
  // occ[sign][var] lists (clause, position) of each occurrence.
  std::vector<std::vector<std::pair<std::size_t, int>>> occ[2];
  occ[0].resize(nv + 1);
  occ[1].resize(nv + 1);
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    for (int k = 0; k < 3; ++k) {
      const int lit = cnf.clauses[j][at(k)];
      occ[lit < 0 ? 1 : 0][at(std::abs(lit))].emplace_back(j, k);
    }
  }
  for (int s = 0; s < 2; ++s) {
    for (std::size_t v = 1; v <= nv; ++v) {
      if (occ[s][v].size() > 7) {
        throw InputError("cnf: literal " + std::string(s ? "-" : "") + std::to_string(v) +
                         " occurs more than 7 times");
      }
    }
  }
  if (assignment) {
    if (assignment->size() != nv) throw InputError("assignment length differs from variable count");
    for (const auto& c : cnf.clauses) {
      if (std::none_of(c.begin(), c.end(), [&](int lit) { return (*assignment)[at(std::abs(lit) - 1)] == (lit > 0); })) {
        throw InputError("assignment does not satisfy the formula");
      }
    }
  }

  Builder b;
  if (assignment) b.start_matching();
  // lit_vertex[j][k]: occurrence vertex of clause j, position k.
  std::vector<std::array<Vertex, 3>> lit_vertex(cnf.clauses.size());
  std::vector<std::vector<Vertex>> y[2];
  y[0].resize(nv + 1);
  y[1].resize(nv + 1);
  for (std::size_t v = 1; v <= nv; ++v) {
    const std::string var = std::to_string(v);
    std::vector<Vertex> xs[2];
    for (int s = 0; s < 2; ++s) {
      for (std::size_t o = 0; o < occ[s][v].size(); ++o) {
        const Vertex w = b.vertex(std::string(s ? "xbar" : "x") + var + "_" + std::to_string(o + 1));
        xs[s].push_back(w);
        lit_vertex[occ[s][v][o].first][at(occ[s][v][o].second)] = w;
      }
    }
    for (int s = 0; s < 2; ++s) {
      for (std::size_t o = 0; o < xs[s].size(); ++o) {
        const Vertex w = b.vertex(std::string(s ? "ybar" : "y") + var + "_" + std::to_string(o + 1));
        y[s][v].push_back(w);
        b.edge(xs[s][o], w);
      }
    }
    for (int s = 0; s < 2; ++s) {
      if (!xs[s].empty()) b.player(std::string(s ? "Xbar" : "X") + var, xs[s]);
    }
    for (int s = 0; s < 2; ++s) {
      for (std::size_t o = 0; o < y[s][v].size(); ++o) {
        b.player(std::string(s ? "Ybar" : "Y") + var + "_" + std::to_string(o + 1), {y[s][v][o]});
      }
    }
    if (assignment) {
      // The false literal's occurrences go to their Y vertices.
      const int s = (*assignment)[v - 1] ? 1 : 0;
      for (std::size_t o = 0; o < xs[s].size(); ++o) b.match(xs[s][o], y[s][v][o]);
    }
  }
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    const Triad t = add_triad(b, "cl" + std::to_string(j + 1) + ".");
    int first_true = -1;
    for (int k = 0; k < 3; ++k) {
      b.edge(t(k, 1), lit_vertex[j][at(k)]);
      if (!assignment) continue;
      const int lit = cnf.clauses[j][at(k)];
      if ((*assignment)[at(std::abs(lit) - 1)] == (lit > 0)) {
        b.match(t(k, 1), lit_vertex[j][at(k)]);
        if (first_true < 0) first_true = k;
      }
    }
    if (assignment) match_triad(b, t, first_true);
  }
  GeneratedInstance out = b.finish();
  int label = 0;
  for (std::size_t v = 1; v <= nv; ++v) {
    for (Vertex p : y[0][v]) {
      for (Vertex q : y[1][v]) out = attach_special_edge(out, p, q, "se" + std::to_string(++label));
    }
  }
  return out;
}

GeneratedInstance gen_random(int n, int class_cap, double edge_prob, std::uint64_t seed) {
  if (n < 1 || class_cap < 1 || !(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw InputError("random instance needs n >= 1, class_cap >= 1, 0 <= edge_prob <= 1");
  }
  std::mt19937_64 rng(seed);
  // Portable coin and range draws: the standard distributions are not
  // specified bit-for-bit across library implementations.
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < edge_prob; };
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin()) edges.push_back(make_edge(u, v));
    }
  }
  std::vector<Vertex> order(at(n));
  for (Vertex v = 0; v < n; ++v) order[at(v)] = v;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(i)]);
  std::vector<std::vector<Vertex>> players;
  for (std::size_t i = 0; i < order.size();) {
    const std::size_t size = std::min<std::size_t>(1 + below(at(class_cap)), order.size() - i);
    players.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i),
                         order.begin() + static_cast<std::ptrdiff_t>(i + size));
    i += size;
  }
  GeneratedInstance out;
  out.instance = Instance(Graph(n, std::move(edges)), std::move(players));
  for (Vertex v = 0; v < n; ++v) out.vertex_names.push_back("v" + std::to_string(v));
  for (PlayerId p = 0; p < out.instance.player_count(); ++p) out.player_names.push_back("P" + std::to_string(p));
  return out;
}

}  // namespace ntucore

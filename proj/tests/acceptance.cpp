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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ntucore/cli.hpp"
#include "ntucore/constant_players.hpp"
#include "ntucore/couples.hpp"
#include "ntucore/errors.hpp"
#include "ntucore/gallai_edmonds.hpp"
#include "ntucore/io.hpp"
#include "ntucore/matching.hpp"
#include "ntucore/matroid.hpp"
#include "ntucore/oracle.hpp"
#include "ntucore/reductions.hpp"
#include "test_support.hpp"

namespace ntucore {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks still run.
struct Check {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

Outcome example_one() {
  Check c;
  const auto ex = gen_example1();
  const Matching m = max_matching(ex.instance.graph());
  c.expect(m.size() == 8 && m.covered().size() == 16, "maximum matching does not cover 16 vertices");
  const std::string path = "acceptance_example1.json";
  std::ostringstream out, err;
  c.expect(cli::run({"gen", "example1", "--out", path}, out, err) == 0, "gen example1 failed");
  std::ostringstream out2, err2;
  const int code = cli::run({"core-empty", "--core", "weak", "--instance", path, "--method", "const"}, out2, err2);
  c.expect(code == cli::kBlocked && out2.str() == "{\"kind\":\"weak\",\"empty\":true}\n",
           "core-empty did not report an empty weak core: " + out2.str() + err2.str());
  std::remove(path.c_str());
  c.out.detail = c.out.pass ? "16 vertices covered, weak core empty" : c.out.detail;
  return c.out;
}

Outcome couples_weak_nonempty() {
  Check c;
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 2 + static_cast<int>(seed % 39);
    const CouplesGame cg = normalize(testing::random_instance(seed, n, 2, testing::pick_prob(seed)));
    const Matching m = weak_construct(cg);
    const bool in = is_matching_of(cg.graph(), m) && weak_membership(cg, m).in_core;
    c.expect(in, "seed " + std::to_string(seed));
    ok += in ? 1 : 0;
  }
  c.out.detail = std::to_string(ok) + "/500 constructed matchings in the weak core";
  return c.out;
}

Outcome couples_oracle_equivalence() {
  Check c;
  std::int64_t matchings = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const CouplesGame cg = testing::random_couples(seed, 12);
    const Instance& inst = cg.instance();
    const auto weak = oracle::oracle_core(inst, CoreKind::weak);
    const auto strong = oracle::oracle_core(inst, CoreKind::strong);
    const std::string tag = "seed " + std::to_string(seed);
    std::set<UtilityVector> realized;
    for (const auto& m : oracle::all_matchings(inst.graph())) {
      ++matchings;
      const auto u = utility(inst, m);
      realized.insert(u);
      c.expect(weak_membership(cg, m).in_core == weak.in_core.contains(u), tag + ": weak verdict");
      c.expect(strong_membership(cg, m).in_core == strong.in_core.contains(u), tag + ": strong verdict");
    }
    c.expect(strong_core_solve(cg).has_value() == !strong.in_core.empty(), tag + ": strong emptiness");
    const auto s = strong_core_structure(cg);
    std::set<UtilityVector> by_quota, by_oracle;
    for (const auto& u : realized) {
      if (meets_strong_core_quotas(cg, s, u)) by_quota.insert(u);
    }
    for (const auto& [u, m] : strong.in_core) by_oracle.insert(u);
    c.expect(by_quota == by_oracle, tag + ": quota vectors differ from the strong core");
  }
  if (c.out.pass) c.out.detail = std::to_string(matchings) + " matchings checked on 300 instances";
  return c.out;
}

Outcome delta_paths() {
  Check c;
  std::int64_t triples = 0;
  {
    const CouplesGame ex = testing::delta_example();
    c.expect(delta_path_exists(ex, 0, 1, 2), "example (A,B;C) not found");
    c.expect(!delta_path_exists(ex, 0, 2, 1), "example (A,C;B) wrongly found");
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CouplesGame cg = testing::random_couples(seed + 5000, 12);
    DeltaPathSolver solver(cg);
    std::vector<PlayerId> k;
    for (PlayerId p = 0; p < cg.player_count(); ++p) {
      if (solver.in_k(p)) k.push_back(p);
    }
    for (PlayerId a : k) {
      for (PlayerId b : k) {
        for (PlayerId x : k) {
          if (a == b || a == x || b == x) continue;
          ++triples;
          const auto got = solver.find(a, b, x);
          c.expect(got.has_value() == oracle::has_delta_path(cg, a, b, x),
                   "seed " + std::to_string(seed) + " triple mismatch");
          if (got) c.expect(delta_path_valid(cg, a, b, x, *got), "invalid delta-path returned");
        }
      }
    }
  }
  if (c.out.pass) c.out.detail = std::to_string(triples) + " triples agree with the oracle";
  return c.out;
}

Instance few_players(std::uint64_t seed) {
  const int n = 2 + static_cast<int>(seed % 9);
  for (std::uint64_t s = seed;; s += 1000) {
    Instance inst = testing::random_instance(s, n, (n + 1) / 2 + 1, testing::pick_prob(seed));
    if (inst.player_count() <= 4) return inst;
  }
}

Outcome constant_players() {
  Check c;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = few_players(seed + 7000);
    const std::string tag = "seed " + std::to_string(seed);
    const int nu = static_cast<int>(max_matching(inst.graph()).size());
    for (const auto& x : frontier(inst).maximal_vectors) {
      c.expect(std::accumulate(x.begin(), x.end(), 0) == 2 * nu, tag + ": frontier sum");
    }
    for (CoreKind kind : {CoreKind::weak, CoreKind::strong}) {
      c.expect(core_empty(inst, kind) == oracle::oracle_core(inst, kind).in_core.empty(),
               tag + ": " + std::string(to_string(kind)) + " emptiness");
    }
  }
  if (c.out.pass) c.out.detail = "200 instances, frontier sums and both emptiness verdicts agree";
  return c.out;
}

Outcome matroid_layer() {
  Check c;
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = testing::random_instance(rng(), n, 1, testing::pick_prob(rng())).graph();
    const int groups = 1 + static_cast<int>(rng() % 4);
    PartitionQuota pq;
    pq.groups.resize(static_cast<std::size_t>(groups));
    for (Vertex v = 0; v < n; ++v) {
      const auto gi = rng() % static_cast<std::uint64_t>(groups + 1);
      if (gi < static_cast<std::uint64_t>(groups)) pq.groups[gi].push_back(v);
    }
    for (const auto& grp : pq.groups) pq.quotas.push_back(static_cast<int>(rng() % (grp.size() + 1)));
    bool expect = false;
    for (const auto& m : oracle::all_matchings(g)) {
      bool ok = true;
      for (std::size_t i = 0; i < pq.groups.size() && ok; ++i) {
        int cnt = 0;
        for (Vertex v : pq.groups[i]) cnt += m.covers(v) ? 1 : 0;
        ok = cnt >= pq.quotas[i];
      }
      if (ok) {
        expect = true;
        break;
      }
    }
    c.expect(matching_with_lower_bounds(g, pq).has_value() == expect,
             "lower-bound trial " + std::to_string(trial));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const Graph g = testing::random_instance(seed + 9000, n, 1, testing::pick_prob(seed)).graph();
    const auto truth = testing::coverable_masks(g);
    const CoverageOracle co(g);
    for (std::size_t mask = 0; mask < truth.size(); ++mask) {
      std::vector<Vertex> x;
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1u) x.push_back(v);
      }
      c.expect(co.coverable(x) == (truth[mask] != 0), "coverable graph " + std::to_string(seed));
    }
  }
  if (c.out.pass) c.out.detail = "500 lower-bound instances and 100 graphs of subsets agree";
  return c.out;
}

// Every weak-core matching must hold s2a1, s1t1, s4t2 and avoid us1, s4v. Checked on
// the frontier outcomes and, through the oracle, on every matching whose utility
// vector lies in the weak core.
Outcome special_edge_host(Check& c, const GeneratedInstance& host, const std::string& label,
                          std::size_t& outcomes) {
  const auto g = attach_special_edge(host, 0, 1);
  auto id = [&](const std::string& name) {
    return static_cast<Vertex>(std::find(g.vertex_names.begin(), g.vertex_names.end(), name) -
                               g.vertex_names.begin());
  };
  auto forced = [&](const Matching& m) {
    return m.contains(make_edge(id("se.s2"), id("se.a1"))) && m.contains(make_edge(id("se.s1"), id("se.t1"))) &&
           m.contains(make_edge(id("se.s4"), id("se.t2"))) && !m.contains(make_edge(id("u"), id("se.s1"))) &&
           !m.contains(make_edge(id("se.s4"), id("v")));
  };
  const auto core = frontier_core_matchings(g.instance, CoreKind::weak);
  for (const auto& m : core) c.expect(forced(m), label + ": frontier outcome misses a forced edge");
  const auto truth = oracle::oracle_core(g.instance, CoreKind::weak, 100'000'000);
  c.expect(core.empty() == truth.in_core.empty(), label + ": emptiness differs from the oracle");
  oracle::for_each_matching(
      g.instance.graph(),
      [&](const Matching& m) {
        if (truth.in_core.contains(coverage_counts(g.instance, m))) {
          ++outcomes;
          c.expect(forced(m), label + ": weak-core matching misses a forced edge");
        }
        return false;
      },
      100'000'000);
  return c.out;
}

Outcome special_edge() {
  Check c;
  // The host of the criterion: singletons u, v and nothing else. Its weak core
  // is empty, since {U, V, S} blocks whenever u and v are exposed.
  GeneratedInstance bare;
  bare.instance = Instance(Graph(2), {{0}, {1}});
  bare.vertex_names = {"u", "v"};
  bare.player_names = {"U", "V"};
  std::size_t bare_outcomes = 0;
  special_edge_host(c, bare, "bare host", bare_outcomes);
  // u and v also own pendant edges to singletons w and x.
  GeneratedInstance pendant;
  pendant.instance = Instance(Graph(4, {make_edge(0, 2), make_edge(1, 3)}), {{0}, {1}, {2}, {3}});
  pendant.vertex_names = {"u", "v", "w", "x"};
  pendant.player_names = {"U", "V", "W", "X"};
  std::size_t pendant_outcomes = 0;
  special_edge_host(c, pendant, "pendant host", pendant_outcomes);
  c.expect(pendant_outcomes > 0, "pendant host: no weak-core matching to check");
  if (c.out.pass) {
    c.out.detail = "bare host: " + std::to_string(bare_outcomes) +
                   " weak-core matchings (core empty, oracle agrees); pendant host: " +
                   std::to_string(pendant_outcomes) + " weak-core matchings, all with the forced edges";
  }
  return c.out;
}

Outcome reductions() {
  Check c;
  const X3CInstance yes{3, {{1, 2, 3}}};
  const X3CInstance no{3, {}};
  for (const auto* x : {&yes, &no}) {
    const bool expect_in = x == &no;
    const auto weak = gen_x3c_weak(*x);
    const auto strong = gen_x3c_strong(*x);
    for (const auto* g : {&weak, &strong}) {
      c.expect(is_bipartite(g->instance.graph()), "graph not bipartite");
      c.expect(g->instance.max_player_size() <= 3, "class above 3");
    }
    c.expect(core_membership_by_enumeration(weak.instance, *weak.matching, CoreKind::weak).in_core == expect_in,
             std::string("weak verdict on the ") + (expect_in ? "no" : "yes") + "-instance");
    c.expect(core_membership_by_enumeration(strong.instance, *strong.matching, CoreKind::strong).in_core == expect_in,
             std::string("strong verdict on the ") + (expect_in ? "no" : "yes") + "-instance");
  }
  if (c.out.pass) c.out.detail = "yes-instance blocked, no-instance in core, for both constructions";
  return c.out;
}

}  // namespace
}  // namespace ntucore

int main() {
  using namespace ntucore;
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_s;
  };
  const Criterion criteria[] = {
      {"Example-1 reproduction", example_one, 60},
      {"couples weak core non-empty", couples_weak_nonempty, 300},
      {"couples oracle equivalence", couples_oracle_equivalence, 900},
      {"delta-path correctness", delta_paths, 900},
      {"constant players", constant_players, 900},
      {"matroid layer", matroid_layer, 900},
      {"special-edge lemma", special_edge, 900},
      {"reduction spot-checks", reductions, 900},
  };
  bool all = true;
  bool gadgets = true;
  int index = 0;
  for (const auto& cr : criteria) {
    ++index;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.pass && secs > cr.limit_s) o = {false, "took longer than " + std::to_string(cr.limit_s) + " s"};
    all = all && o.pass;
    if (index >= 7) gadgets = gadgets && o.pass;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", index, cr.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%s criterion 9 (asymptotic hardness): not an experiment; covered by criteria 7 and 8\n",
              gadgets ? "PASS" : "FAIL");
  return all && gadgets ? 0 : 1;
}

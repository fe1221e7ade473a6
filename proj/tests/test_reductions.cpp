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

#include <gtest/gtest.h>

#include <algorithm>

#include "ntucore/constant_players.hpp"
#include "ntucore/errors.hpp"
#include "ntucore/io.hpp"
#include "ntucore/matching.hpp"

namespace ntucore {
namespace {

Vertex id_of(const GeneratedInstance& g, const std::string& name) {
  const auto it = std::find(g.vertex_names.begin(), g.vertex_names.end(), name);
  if (it == g.vertex_names.end()) throw std::out_of_range(name);
  return static_cast<Vertex>(it - g.vertex_names.begin());
}

bool in_core(const GeneratedInstance& g, CoreKind kind) {
  return core_membership_by_enumeration(g.instance, *g.matching, kind).in_core;
}

TEST(ExampleOne, Shape) {
  const auto ex = gen_example1();
  EXPECT_EQ(ex.instance.vertex_count(), 21);
  EXPECT_EQ(ex.instance.graph().edge_count(), 36u);
  ASSERT_EQ(ex.instance.player_count(), 3);
  for (PlayerId p = 0; p < 3; ++p) EXPECT_EQ(ex.instance.player(p).size(), 7u);
  EXPECT_EQ(ex.matching->size(), 8u);
  EXPECT_EQ(max_matching(ex.instance.graph()).size(), 8u);
  EXPECT_TRUE(ex.instance.graph().has_edge(id_of(ex, "a1"), id_of(ex, "b5")));
  EXPECT_TRUE(ex.instance.graph().has_edge(id_of(ex, "a7"), id_of(ex, "c7")));
  EXPECT_FALSE(ex.instance.graph().has_edge(id_of(ex, "a1"), id_of(ex, "a2")));
}

TEST(SpecialEdge, Shape) {
  GeneratedInstance host;
  host.instance = Instance(Graph(2), {{0}, {1}});
  host.vertex_names = {"u", "v"};
  host.player_names = {"U", "V"};
  const auto g = attach_special_edge(host, 0, 1);
  EXPECT_EQ(g.instance.vertex_count(), 2 + 27);
  EXPECT_EQ(g.instance.player_count(), 2 + 5);
  const auto& gr = g.instance.graph();
  EXPECT_TRUE(gr.has_edge(id_of(g, "se.s2"), id_of(g, "se.a1")));
  EXPECT_TRUE(gr.has_edge(id_of(g, "se.s1"), id_of(g, "se.t1")));
  EXPECT_TRUE(gr.has_edge(id_of(g, "se.s4"), id_of(g, "se.t2")));
  EXPECT_TRUE(gr.has_edge(0, id_of(g, "se.s1")));
  EXPECT_TRUE(gr.has_edge(id_of(g, "se.s4"), 1));
  EXPECT_TRUE(gr.has_edge(id_of(g, "se.s2"), id_of(g, "se.s3")));
  EXPECT_FALSE(gr.has_edge(0, 1));
  EXPECT_THROW(attach_special_edge(host, 0, 0), InputError);
}

TEST(X3CWeak, ShapeAndClaims) {
  const X3CInstance x{6, {{1, 2, 3}, {2, 4, 6}, {4, 5, 6}}};
  const auto g = gen_x3c_weak(x);
  // 3n + 2(3n-1) + 5m
  EXPECT_EQ(g.instance.vertex_count(), 6 + 10 + 15);
  EXPECT_LE(g.instance.max_player_size(), 3);
  EXPECT_TRUE(is_bipartite(g.instance.graph()));
  EXPECT_EQ(g.matching->size(), 2u * 3 + 5);
}

TEST(X3CWeak, SoundOnTinyInputs) {
  EXPECT_FALSE(in_core(gen_x3c_weak({3, {{1, 2, 3}}}), CoreKind::weak));
  EXPECT_TRUE(in_core(gen_x3c_weak({3, {}}), CoreKind::weak));
  EXPECT_FALSE(in_core(gen_x3c_weak({6, {{1, 2, 3}, {4, 5, 6}}}), CoreKind::weak));
  EXPECT_TRUE(in_core(gen_x3c_weak({6, {{1, 2, 3}, {3, 4, 5}}}), CoreKind::weak));
}

TEST(X3CWeak, RejectsMalformed) {
  EXPECT_THROW(gen_x3c_weak({4, {}}), InputError);
  EXPECT_THROW(gen_x3c_weak({3, {{1, 1, 2}}}), InputError);
  EXPECT_THROW(gen_x3c_weak({3, {{1, 2, 4}}}), InputError);
}

TEST(X3CStrong, ShapeAndClaims) {
  const X3CInstance x{6, {{1, 2, 3}, {2, 4, 6}}};
  const auto g = gen_x3c_strong(x);
  // 3n + (3n-1) + 4(3n-2) + 6m
  EXPECT_EQ(g.instance.vertex_count(), 6 + 5 + 16 + 12);
  EXPECT_LE(g.instance.max_player_size(), 3);
  EXPECT_TRUE(is_bipartite(g.instance.graph()));
  const auto covered = g.matching->covered();
  EXPECT_EQ(static_cast<int>(covered.size()), g.instance.vertex_count() - 1);
  EXPECT_FALSE(g.matching->covers(id_of(g, "a6")));
}

TEST(X3CStrong, SoundOnTinyInputs) {
  EXPECT_FALSE(in_core(gen_x3c_strong({3, {{1, 2, 3}}}), CoreKind::strong));
  EXPECT_TRUE(in_core(gen_x3c_strong({3, {}}), CoreKind::strong));
  EXPECT_FALSE(in_core(gen_x3c_strong({6, {{1, 2, 3}, {4, 5, 6}}}), CoreKind::strong));
  EXPECT_TRUE(in_core(gen_x3c_strong({6, {{1, 2, 3}, {3, 4, 5}}}), CoreKind::strong));
}

TEST(Sat, ShapeAndSpecialEdgeCount) {
  const CnfFormula f{3, {{1, -2, 3}, {-1, 2, -3}, {1, 2, 3}}};
  const auto g = gen_3sat_weak_emptiness(f);
  EXPECT_LE(g.instance.max_player_size(), 7);
  // |Y_i| * |Ybar_i| = 2*1 for each variable.
  int special = 0;
  for (const auto& name : g.vertex_names) special += name.ends_with(".s1") ? 1 : 0;
  EXPECT_EQ(special, 6);
  // Occurrence blocks, clause gadgets and 27 vertices per special edge.
  EXPECT_EQ(g.instance.vertex_count(), 2 * 9 + 3 * 21 + 6 * 27);
}

TEST(Sat, RejectsBadInput) {
  EXPECT_THROW(gen_3sat_weak_emptiness({1, {{1, 2, 1}}}), InputError);
  EXPECT_THROW(gen_3sat_weak_emptiness({1, {{1, 1, 0}}}), InputError);
  CnfFormula many{1, {}};
  for (int i = 0; i < 3; ++i) many.clauses.push_back({1, 1, 1});
  EXPECT_THROW(gen_3sat_weak_emptiness(many), InputError);
  EXPECT_THROW(gen_3sat_weak_emptiness({1, {{1, 1, 1}}}, std::vector<bool>{false}), InputError);
}

TEST(Sat, ConstructedMatchingStructure) {
  const CnfFormula f{3, {{1, -2, 3}, {-1, 2, -3}, {1, 2, 3}}};
  const std::vector<bool> assignment{true, true, false};
  const auto g = gen_3sat_weak_emptiness(f, assignment);
  ASSERT_TRUE(g.matching.has_value());
  const auto& m = *g.matching;
  // Special-edge gadgets: s1t1, s2a1, s4t2 matched; the attaching edges are not.
  for (const auto& name : g.vertex_names) {
    if (!name.ends_with(".s1")) continue;
    const std::string se = name.substr(0, name.size() - 3);
    EXPECT_TRUE(m.contains(make_edge(id_of(g, se + ".s1"), id_of(g, se + ".t1"))));
    EXPECT_TRUE(m.contains(make_edge(id_of(g, se + ".s2"), id_of(g, se + ".a1"))));
    EXPECT_TRUE(m.contains(make_edge(id_of(g, se + ".s4"), id_of(g, se + ".t2"))));
  }
  // Occurrences of false literals are matched to their Y vertices, true ones into clauses.
  EXPECT_TRUE(m.contains(make_edge(id_of(g, "xbar1_1"), id_of(g, "ybar1_1"))));
  EXPECT_TRUE(m.contains(make_edge(id_of(g, "x3_1"), id_of(g, "y3_1"))));
  EXPECT_TRUE(m.covers(id_of(g, "x1_1")));
  EXPECT_FALSE(m.covers(id_of(g, "y1_1")));
  // Every clause gadget has a literal vertex matched outside the gadget.
  for (int j = 1; j <= 3; ++j) {
    const std::string cl = "cl" + std::to_string(j) + ".";
    int out = 0;
    for (const char* lit : {"a1", "b1", "c1"}) out += m.covers(id_of(g, cl + lit)) ? 1 : 0;
    EXPECT_GE(out, 1);
    EXPECT_EQ(static_cast<int>(m.covered().size()) % 2, 0);
  }
}

TEST(Sat, SingleClauseWeakCoreNonEmpty) {
  const CnfFormula f{1, {{1, 1, 1}}};
  const auto g = gen_3sat_weak_emptiness(f, std::vector<bool>{true});
  EXPECT_EQ(g.instance.player_count(), 7);
  EXPECT_TRUE(in_core(g, CoreKind::weak));
  EXPECT_TRUE(find_core_matching(g.instance, CoreKind::weak).has_value());
}

TEST(Random, Deterministic) {
  const auto a = gen_random(15, 3, 0.4, 99);
  const auto b = gen_random(15, 3, 0.4, 99);
  EXPECT_EQ(serialize(a.instance), serialize(b.instance));
  EXPECT_NE(serialize(a.instance), serialize(gen_random(15, 3, 0.4, 100).instance));
}

TEST(Random, ExtremeProbabilitiesAndCaps) {
  EXPECT_EQ(gen_random(9, 2, 0.0, 1).instance.graph().edge_count(), 0u);
  EXPECT_EQ(gen_random(9, 2, 1.0, 1).instance.graph().edge_count(), 36u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_LE(gen_random(20, 3, 0.2, seed).instance.max_player_size(), 3);
  }
  EXPECT_THROW(gen_random(0, 2, 0.5, 1), InputError);
  EXPECT_THROW(gen_random(3, 2, 1.5, 1), InputError);
}

}  // namespace
}  // namespace ntucore

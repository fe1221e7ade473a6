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

#include <gtest/gtest.h>

#include "ntucore/errors.hpp"
#include "ntucore/matching.hpp"
#include "ntucore/oracle.hpp"
#include "test_support.hpp"

namespace ntucore {
namespace {

TEST(InstanceTest, RejectsBadPartitions) {
  EXPECT_THROW(Instance(Graph(3), {{0, 1}}), InputError);
  EXPECT_THROW(Instance(Graph(3), {{0, 1}, {1, 2}}), InputError);
  EXPECT_THROW(Instance(Graph(2), {{0, 1}, {}}), InputError);
  EXPECT_THROW(Instance(Graph(2), {{0, 5}}), InputError);
  const Instance ok(Graph(3), {{2, 0}, {1}});
  EXPECT_EQ(ok.player(0)[0], 0);
  EXPECT_EQ(ok.owner(2), 0);
}

TEST(UtilityTest, Basics) {
  const auto ex = gen_example1();
  EXPECT_EQ(utility(ex.instance, Matching{}), (UtilityVector{0, 0, 0}));
  const auto u = utility(ex.instance, *ex.matching);
  EXPECT_EQ(u[0] + u[1] + u[2], 16);
  EXPECT_THROW(utility(ex.instance, Matching({make_edge(0, 20)})), InputError);
}

TEST(UtilityTest, MatchesRecount) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = testing::random_instance(seed, 12, 4, 0.3);
    const Matching m = max_matching(inst.graph());
    UtilityVector expect(static_cast<std::size_t>(inst.player_count()), 0);
    for (Vertex v = 0; v < inst.vertex_count(); ++v) {
      if (m.covers(v)) ++expect[static_cast<std::size_t>(inst.owner(v))];
    }
    EXPECT_EQ(utility(inst, m), expect);
  }
}

TEST(FindBlock, InternalEdgeBlocksAlone) {
  const Instance inst(Graph(3, {make_edge(0, 1)}), {{0, 1}, {2}});
  const PlayerId coalition[] = {0};
  const auto w = find_block_for_coalition(inst, {0, 0}, coalition, BlockKind::strong);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 1u);
}

TEST(FindBlock, ExampleOneHasTwoPlayerBlock) {
  const auto ex = gen_example1();
  const auto u = utility(ex.instance, *ex.matching);
  bool found = false;
  for (PlayerId a = 0; a < 3; ++a) {
    for (PlayerId b = a + 1; b < 3; ++b) {
      const PlayerId coalition[] = {a, b};
      found = found || find_block_for_coalition(ex.instance, u, coalition, BlockKind::strong);
    }
  }
  EXPECT_TRUE(found);
}

TEST(FindBlock, AgreesWithExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::random_instance(seed, 8, 3, testing::pick_prob(seed));
    const auto all = oracle::all_matchings(inst.graph());
    const UtilityVector u = utility(inst, all[seed % all.size()]);
    const int m = inst.player_count();
    for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
      std::vector<PlayerId> coalition;
      for (PlayerId p = 0; p < m; ++p) {
        if (bits >> p & 1u) coalition.push_back(p);
      }
      for (BlockKind kind : {BlockKind::strong, BlockKind::weak}) {
        bool expect = false;
        for (const auto& w : all) {
          bool inside = true;
          for (Vertex v : w.covered()) inside = inside && (bits >> inst.owner(v) & 1u);
          if (!inside) continue;
          const auto uw = coverage_counts(inst, w);
          bool all_ge = true, any_gt = false, all_gt = true;
          for (PlayerId p : coalition) {
            all_ge = all_ge && uw[static_cast<std::size_t>(p)] >= u[static_cast<std::size_t>(p)];
            any_gt = any_gt || uw[static_cast<std::size_t>(p)] > u[static_cast<std::size_t>(p)];
            all_gt = all_gt && uw[static_cast<std::size_t>(p)] > u[static_cast<std::size_t>(p)];
          }
          expect = kind == BlockKind::strong ? all_gt : (all_ge && any_gt);
          if (expect) break;
        }
        const auto got = find_block_for_coalition(inst, u, coalition, kind);
        ASSERT_EQ(got.has_value(), expect) << "seed " << seed << " coalition " << bits;
        if (got) {
          const BlockCertificate cert{coalition, *got, kind};
          EXPECT_TRUE(certificate_valid(inst, u, cert));
        }
      }
    }
  }
}

TEST(Membership, AgreesWithOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::random_instance(seed, 8, 3, testing::pick_prob(seed));
    for (CoreKind kind : {CoreKind::weak, CoreKind::strong}) {
      const auto outcome = oracle::oracle_core(inst, kind);
      for (const auto& m : oracle::all_matchings(inst.graph())) {
        const auto v = core_membership_by_enumeration(inst, m, kind);
        const bool expect = outcome.in_core.contains(utility(inst, m));
        ASSERT_EQ(v.in_core, expect) << "seed " << seed;
        if (!v.in_core) {
          ASSERT_TRUE(v.certificate.has_value());
          EXPECT_EQ(v.certificate->kind, refuting_block(kind));
          EXPECT_TRUE(certificate_valid(inst, utility(inst, m), *v.certificate));
        }
      }
    }
  }
}

TEST(Membership, PlayerGuard) {
  const Instance inst = testing::random_instance(1, 30, 1, 0.1);
  EXPECT_THROW(core_membership_by_enumeration(inst, Matching{}, CoreKind::weak), ResourceError);
}

TEST(Membership, CertificateCheckerRejectsForgeries) {
  const Instance inst(Graph(4, {make_edge(0, 1), make_edge(2, 3)}), {{0, 2}, {1, 3}});
  const UtilityVector u{1, 1};
  // The witness leaves the coalition.
  EXPECT_FALSE(certificate_valid(inst, u, {{0}, Matching({make_edge(0, 1)}), BlockKind::strong}));
  // Player 1 does not strictly improve.
  EXPECT_FALSE(certificate_valid(inst, u, {{0, 1}, Matching({make_edge(0, 1)}), BlockKind::strong}));
  EXPECT_TRUE(certificate_valid(inst, u, {{0, 1}, Matching({make_edge(0, 1), make_edge(2, 3)}), BlockKind::strong}));
}

TEST(CoalitionOrder, SizeThenLex) {
  std::vector<std::vector<PlayerId>> seen;
  for_each_coalition(3, [&](std::span<const PlayerId> c) {
    seen.emplace_back(c.begin(), c.end());
    return false;
  });
  const std::vector<std::vector<PlayerId>> expect = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  EXPECT_EQ(seen, expect);
}

TEST(CoreKindText, RoundTrip) {
  EXPECT_EQ(parse_core_kind("weak"), CoreKind::weak);
  EXPECT_EQ(parse_core_kind(to_string(CoreKind::strong)), CoreKind::strong);
  EXPECT_THROW(parse_core_kind("medium"), InputError);
}

}  // namespace
}  // namespace ntucore

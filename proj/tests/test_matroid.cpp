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


#include "ntucore/matroid.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "ntucore/errors.hpp"
#include "ntucore/oracle.hpp"
#include "test_support.hpp"

namespace ntucore {
namespace {

std::vector<char> mask_of(std::uint32_t bits, int n) {
  std::vector<char> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
  return m;
}

int brute_common(const IndependenceOracle& a, const IndependenceOracle& b, int n) {
  int best = 0;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const auto m = mask_of(bits, n);
    if (a(m) && b(m)) best = std::max(best, std::popcount(bits));
  }
  return best;
}

// Random groups over a prefix of the vertices, with random quotas.
PartitionQuota random_quota(std::mt19937_64& rng, int n, int groups) {
  PartitionQuota pq;
  pq.groups.resize(static_cast<std::size_t>(groups));
  for (Vertex v = 0; v < n; ++v) {
    const auto g = rng() % static_cast<std::uint64_t>(groups + 1);
    if (g < static_cast<std::uint64_t>(groups)) pq.groups[g].push_back(v);
  }
  for (const auto& g : pq.groups) pq.quotas.push_back(static_cast<int>(rng() % (g.size() + 1)));
  return pq;
}

bool brute_lower_bounds(const Graph& g, const PartitionQuota& pq) {
  for (const auto& m : oracle::all_matchings(g)) {
    bool ok = true;
    for (std::size_t i = 0; i < pq.groups.size() && ok; ++i) {
      int c = 0;
      for (Vertex v : pq.groups[i]) c += m.covers(v) ? 1 : 0;
      ok = c >= pq.quotas[i];
    }
    if (ok) return true;
  }
  return false;
}

TEST(Intersection, FreeMatroids) {
  const IndependenceOracle free = [](std::span<const char>) { return true; };
  EXPECT_EQ(matroid_intersection_max(free, free, 3).size(), 3u);
}

TEST(Intersection, TwoPartitionMatroids) {
  const PartitionMatroid p1(3, {{{0, 1}, {2}}, {1, 1}});
  const PartitionMatroid p2(3, {{{1, 2}, {0}}, {1, 1}});
  const auto got = matroid_intersection_max([&](auto m) { return p1.independent(m); },
                                            [&](auto m) { return p2.independent(m); }, 3);
  EXPECT_EQ(got.size(), 2u);
}

TEST(Intersection, MatchingMatroidOfPath) {
  const MatchingMatroid mm(Graph(3, {make_edge(0, 1), make_edge(1, 2)}));
  const PartitionMatroid pm(3, {{{0}, {1}, {2}}, {1, 1, 1}});
  const auto got = matroid_intersection_max([&](auto m) { return mm.independent(m); },
                                            [&](auto m) { return pm.independent(m); }, 3);
  EXPECT_EQ(got.size(), 2u);
}

TEST(Intersection, RandomAgainstBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = testing::random_instance(rng(), n, 1, 0.35).graph();
    const MatchingMatroid mm(g);
    const PartitionMatroid pm(n, random_quota(rng, n, 1 + static_cast<int>(rng() % 4)));
    const IndependenceOracle a = [&](auto m) { return mm.independent(m); };
    const IndependenceOracle b = [&](auto m) { return pm.independent(m); };
    const auto got = matroid_intersection_max(a, b, n);
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (int e : got) m[static_cast<std::size_t>(e)] = 1;
    EXPECT_TRUE(a(m) && b(m));
    EXPECT_EQ(static_cast<int>(got.size()), brute_common(a, b, n)) << "trial " << trial;
  }
}

TEST(MatchingMatroidTest, ExchangeAxiomSpotCheck) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const MatchingMatroid mm(testing::random_instance(rng(), n, 1, 0.4).graph());
    std::vector<std::uint32_t> indep;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      if (mm.independent(mask_of(bits, n))) indep.push_back(bits);
    }
    for (int k = 0; k < 30; ++k) {
      const auto a = indep[rng() % indep.size()];
      const auto b = indep[rng() % indep.size()];
      if (std::popcount(a) >= std::popcount(b)) continue;
      bool extends = false;
      for (int e = 0; e < n && !extends; ++e) {
        if ((b >> e & 1u) && !(a >> e & 1u)) extends = mm.independent(mask_of(a | (1u << e), n));
      }
      EXPECT_TRUE(extends);
    }
  }
}

TEST(LowerBounds, SmallCases) {
  const Graph path(3, {make_edge(0, 1), make_edge(1, 2)});
  const auto zero = matching_with_lower_bounds(path, {{{0}, {2}}, {0, 0}});
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->empty());
  EXPECT_FALSE(matching_with_lower_bounds(path, {{{0}, {2}}, {1, 1}}).has_value());
  EXPECT_THROW(matching_with_lower_bounds(path, {{{0}}, {2}}), InputError);
}

TEST(LowerBounds, RandomAgainstBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = testing::random_instance(rng(), n, 1, testing::pick_prob(rng())).graph();
    const PartitionQuota pq = random_quota(rng, n, 1 + static_cast<int>(rng() % 4));
    const auto m = matching_with_lower_bounds(g, pq);
    ASSERT_EQ(m.has_value(), brute_lower_bounds(g, pq)) << "trial " << trial;
    if (!m) continue;
    EXPECT_TRUE(is_matching_of(g, *m));
    for (std::size_t i = 0; i < pq.groups.size(); ++i) {
      int c = 0;
      for (Vertex v : pq.groups[i]) c += m->covers(v) ? 1 : 0;
      EXPECT_GE(c, pq.quotas[i]);
    }
  }
}

TEST(LowerBounds, MonotoneInQuotas) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = testing::random_instance(rng(), n, 1, 0.3).graph();
    PartitionQuota pq = random_quota(rng, n, 3);
    if (!matching_with_lower_bounds(g, pq)) continue;
    for (std::size_t i = 0; i < pq.quotas.size(); ++i) {
      if (pq.quotas[i] == 0) continue;
      PartitionQuota lower = pq;
      --lower.quotas[i];
      EXPECT_TRUE(matching_with_lower_bounds(g, lower).has_value());
    }
  }
}

}  // namespace
}  // namespace ntucore

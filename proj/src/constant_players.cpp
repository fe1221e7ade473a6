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

#include "ntucore/constant_players.hpp"

#include <algorithm>
#include <string>

#include "ntucore/errors.hpp"
#include "ntucore/matroid.hpp"

namespace ntucore {

namespace {

inline std::size_t at(int v) { return static_cast<std::size_t>(v); }

PartitionQuota player_quotas(const Instance& inst, const UtilityVector& x) {
  if (static_cast<int>(x.size()) != inst.player_count()) {
    throw InputError("utility vector has " + std::to_string(x.size()) + " entries for " +
                     std::to_string(inst.player_count()) + " players");
  }
  PartitionQuota pq;
  for (PlayerId p = 0; p < inst.player_count(); ++p) {
    const auto vs = inst.player(p);
    if (x[at(p)] < 0 || x[at(p)] > static_cast<int>(vs.size())) {
      throw InputError("quota for player " + std::to_string(p) + " out of range");
    }
    pq.groups.emplace_back(vs.begin(), vs.end());
    pq.quotas.push_back(x[at(p)]);
  }
  return pq;
}

bool dominates(const UtilityVector& big, const UtilityVector& small) {
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (big[i] < small[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<Matching> achievable(const Instance& inst, const UtilityVector& x) {
  return matching_with_lower_bounds(inst.graph(), player_quotas(inst, x));
}

AchievableFrontier frontier(const Instance& inst, std::int64_t budget) {
  const int m = inst.player_count();
  std::vector<std::int64_t> stride(at(m), 1);
  std::int64_t points = 1;
  for (int p = m - 1; p >= 0; --p) {
    stride[at(p)] = points;
    points *= static_cast<std::int64_t>(inst.player(p).size()) + 1;
    if (points > budget) {
      throw ResourceError("utility lattice exceeds budget of " + std::to_string(budget) +
                          " points");
    }
  }

  const MatchingMatroid mm(inst.graph());
  enum : char { kUnknown, kYes, kNo };
  std::vector<char> status(static_cast<std::size_t>(points), kUnknown);
  std::vector<UtilityVector> found;
  std::vector<Matching> found_by;

  UtilityVector y(at(m), 0);
  for (std::int64_t idx = 0; idx < points; ++idx) {
    bool blocked = false;
    for (int p = 0; p < m && !blocked; ++p) {
      if (y[at(p)] > 0 && status[static_cast<std::size_t>(idx - stride[at(p)])] == kNo) blocked = true;
    }
    char s = kNo;
    if (!blocked) {
      if (std::any_of(found.begin(), found.end(),
                      [&](const UtilityVector& w) { return dominates(w, y); })) {
        s = kYes;
      } else if (auto w = matching_with_lower_bounds(mm, player_quotas(inst, y))) {
        s = kYes;
        found.push_back(coverage_counts(inst, *w));
        found_by.push_back(std::move(*w));
      }
    }
    status[static_cast<std::size_t>(idx)] = s;
    for (int p = m - 1; p >= 0; --p) {
      if (++y[at(p)] <= static_cast<int>(inst.player(p).size())) break;
      y[at(p)] = 0;
    }
  }

  // Every maximal point equals the utility of the witness that covered it.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::int64_t idx = 0;
    for (int p = 0; p < m; ++p) idx += found[i][at(p)] * stride[at(p)];
    bool maximal = true;
    for (int p = 0; p < m && maximal; ++p) {
      if (found[i][at(p)] < static_cast<int>(inst.player(p).size()) &&
          status[static_cast<std::size_t>(idx + stride[at(p)])] == kYes) {
        maximal = false;
      }
    }
    if (maximal) order.push_back(i);
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  AchievableFrontier out;
  for (std::size_t i : order) {
    if (!out.maximal_vectors.empty() && out.maximal_vectors.back() == found[i]) continue;
    out.maximal_vectors.push_back(found[i]);
    out.witnesses.push_back(found_by[i]);
  }
  return out;
}

std::vector<Matching> frontier_core_matchings(const Instance& inst, CoreKind kind,
                                              std::int64_t budget) {
  const auto f = frontier(inst, budget);
  std::vector<Matching> out;
  for (std::size_t i = f.witnesses.size(); i-- > 0;) {
    if (core_membership_by_enumeration(inst, f.witnesses[i], kind).in_core) {
      out.push_back(f.witnesses[i]);
    }
  }
  return out;
}

std::optional<Matching> find_core_matching(const Instance& inst, CoreKind kind,
                                           std::int64_t budget) {
  const auto f = frontier(inst, budget);
  for (std::size_t i = f.witnesses.size(); i-- > 0;) {
    if (core_membership_by_enumeration(inst, f.witnesses[i], kind).in_core) return f.witnesses[i];
  }
  return std::nullopt;
}

}  // namespace ntucore

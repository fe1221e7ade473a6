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


#pragma once

// Generators for the hardness gadgets and for random test instances. Every
// generator lays out vertex ids block by block, in the order documented at
// each function, and reports a name for every vertex.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ntucore/game.hpp"

namespace ntucore {

struct GeneratedInstance {
  Instance instance;
  std::optional<Matching> matching;            // challenged / constructed matching, if any
  std::vector<std::string> vertex_names;       // per vertex id
  std::vector<std::string> player_names;       // per player id
};

/// 3n elements 1..3n and sets given as ascending 1-based triples.
struct X3CInstance {
  int elements = 0;
  std::vector<std::array<int, 3>> sets;
};

/// Clauses of exactly three non-zero literals over variables 1..variables;
/// -v is the negation of v.
struct CnfFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

void validate(const X3CInstance& x3c);
void validate(const CnfFormula& cnf);

/// Three players A, B, C of seven vertices (ids 0-6, 7-13, 14-20) on the
/// cliques {a1,c2,c3,b4,b5}, {b1,a2,a3,c4,c5}, {c1,b2,b3,a4,a5}, {a6,b6,c6},
/// {a7,b7,c7}. The matching is c2c3, b4b5, a2a3, c4c5, b2b3, a4a5, b6c6, b7c7.
GeneratedInstance gen_example1();

/// Appends a special edge between host vertices u and v: a fresh copy H of
/// the instance above, then s1..s4, then t1, t2. New players are H's A, B, C,
/// S and T, in that order. If the host carries a matching, it is extended by
/// s1t1, s2a1, s4t2 and H's own matching.
GeneratedInstance attach_special_edge(const GeneratedInstance& host, Vertex u, Vertex v,
                                      const std::string& label = "se");

/// Layout: a_1..a_3n; the connector pairs b^i, b^{i+1} of each i < 3n; per set
/// c^1, c^2, c^3, d^1, d^2. Players A_1..A_3n, then C_j, D_j per set. The
/// matching holds every c^l d^l and every connector edge. Throws
/// InternalError if the result is not bipartite or has a class above 3.
GeneratedInstance gen_x3c_weak(const X3CInstance& x3c);

/// Layout: a_1..a_3n; x_1..x_{3n-1}; the b pairs, then the y pairs, of each
/// i < 3n-1; per set c^1..c^3, d^1..d^3. Players A_1..A_{3n-1}, X_1..X_{3n-1},
/// then C_j, D_j per set. The matching holds every edge except those between
/// c and a vertices and exposes exactly a_3n.
GeneratedInstance gen_x3c_strong(const X3CInstance& x3c);

/// Per variable i: the occurrence vertices X_i, then Xbar_i, then Y_i, then
/// Ybar_i; then one copy of the seven-vertex-player instance per clause, its
/// a1, b1, c1 joined to the occurrences of the first, second and third
/// literal; then one special edge per (Y_i, Ybar_i) vertex pair. Empty
/// occurrence players are left out. Throws InputError when a literal occurs
/// more than seven times. Given a satisfying assignment (indexed by variable
/// - 1), also builds the matching from the hardness argument; throws
/// InputError if the assignment does not satisfy the formula.
GeneratedInstance gen_3sat_weak_emptiness(const CnfFormula& cnf,
                                          const std::optional<std::vector<bool>>& assignment = {});

/// n vertices; each pair u < v becomes an edge with probability edge_prob,
/// in lexicographic order; then the vertices are shuffled and cut into
/// consecutive classes whose sizes are drawn uniformly from 1..class_cap.
GeneratedInstance gen_random(int n, int class_cap, double edge_prob, std::uint64_t seed);

}  // namespace ntucore

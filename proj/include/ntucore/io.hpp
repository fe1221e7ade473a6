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

// JSON file formats. Output is compact, canonically ordered and ends with a
// newline, so equal values serialize to identical bytes.
//
//   instance     {"n": 4, "edges": [[0,1],[2,3]], "players": [[0,2],[1,3]]}
//   matching     {"edges": [[0,1]]}
//   certificate  {"verdict": "blocked", "kind": "weak", "coalition": [0],
//                 "witness": [[0,1]]}
//   x3c          {"elements": 3, "sets": [[1,2,3]]}
//   cnf          {"variables": 1, "clauses": [[1,1,-1]]} or DIMACS text

#include <string>
#include <string_view>
#include <vector>

#include "ntucore/game.hpp"
#include "ntucore/reductions.hpp"

namespace ntucore {

/// A membership verdict as written to disk. `kind` is the core that was
/// tested; the witness blocks in the matching sense (strongly for the weak
/// core, weakly for the strong core).
struct Certificate {
  bool in_core = true;
  CoreKind kind = CoreKind::weak;
  std::vector<PlayerId> coalition;
  Matching witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate make_certificate(CoreKind kind, const MembershipVerdict& verdict);

// Parsers throw InputError with a one-line reason on malformed input.
Instance parse_instance(std::string_view text);
Matching parse_matching(std::string_view text);
Certificate parse_certificate(std::string_view text);
X3CInstance parse_x3c(std::string_view text);
CnfFormula parse_cnf(std::string_view text);

std::string serialize(const Instance& inst);
std::string serialize(const Matching& m);
std::string serialize(const Certificate& cert);
std::string serialize_names(const GeneratedInstance& g);

/// Throws InputError when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace ntucore

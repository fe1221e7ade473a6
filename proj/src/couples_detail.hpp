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

#include <span>
#include <vector>

#include "ntucore/couples.hpp"

namespace ntucore::detail {

// Mate array of M0 without the dropped player edges, plus extra edges.
std::vector<Vertex> modified_mates(const CouplesGame& cg, std::span<const PlayerId> dropped,
                                   std::span<const Edge> extra);

// Paths of w (symmetric difference) M0-minus-dropped between two vertices of
// dropped players, each reported once as s, w(s), m0(w(s)), ..., t with s < t.
std::vector<std::vector<Vertex>> difference_paths(const CouplesGame& cg, const Matching& w,
                                                  std::span<const PlayerId> dropped);

}  // namespace ntucore::detail

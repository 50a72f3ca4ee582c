// Copyright 2026 The Infonet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infonet/model.hpp"
#include "infonet/network.hpp"

namespace infonet {

enum class StructureFamily { OpenClosedTriangle, Polarized, Broadcast };

std::string to_string(StructureFamily family);
StructureFamily parse_family(const std::string& text);

struct StructureBudget {
  // Number of candidate networks; each random restart plus its dynamics run
  // counts once.
  std::uint64_t networks = 100000;
  std::uint64_t seed = 1;
  int n_min = 4;
  int n_max = 8;
  // Dynamics cap per restart; 0 selects 40 n^4.
  std::uint64_t max_steps = 0;
};

struct StructureHit {
  BidirectedNetwork net;
  TargetSets targets;
  // Block of each vertex (Polarized only).
  std::vector<int> partition;
  std::uint64_t candidates = 0;
  std::uint64_t seed = 0;
};

// True when the (already stable) network shows the family's structure.
//  OpenClosedTriangle: the live projection has a triangle and an open triple.
//  Polarized: some live pair exists and fewer than 10% cross the partition.
//  Broadcast: the largest SCC holds at least half the vertices and contains
//  a vertex whose projected degree is at least twice the component average.
bool has_structure(StructureFamily family, const BidirectedNetwork& net, const Params& params,
                   const std::vector<int>& partition);

// Random restarts run to a fixed point; the first stable hit is returned.
// Polarized splits vertices into two halves, each agent targeting its own half.
std::optional<StructureHit> structure_search(StructureFamily family, const Params& params,
                                             const StructureBudget& budget);

}  // namespace infonet

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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infonet/model.hpp"
#include "infonet/network.hpp"

namespace infonet {

// Histograms map a value (degree, component size) to how many times it occurs.
using Histogram = std::map<int, int>;

struct StructureMetrics {
  int n = 0;
  int speaking_edges = 0;
  int listening_edges = 0;
  int live_pairs = 0;
  // Triangles and connected triples of the undirected live projection.
  std::int64_t triangles = 0;
  std::int64_t open_triples = 0;
  // 3 * triangles / connected triples; 0 when there are no triples.
  Rational clustering{0};
  Histogram components;
  int component_count = 0;
  int largest_component = 0;
  // Fraction of speaking edges whose reverse speaking edge exists.
  Rational reciprocity{0};
  Histogram out_speaking, in_speaking, out_listening, in_listening;
  // Fraction of live pairs whose endpoints lie in different blocks.
  std::optional<Rational> polarization;
};

// Symmetric adjacency of the undirected graph with an edge {u, v} whenever
// u -> v or v -> u is live.
std::vector<std::vector<bool>> live_projection(const BidirectedNetwork& net, Mode mode);

// partition[v] is the block of v, when given.
StructureMetrics metrics(const BidirectedNetwork& net, const Params& params,
                         const std::optional<std::vector<int>>& partition = std::nullopt);

// Partition read off target sets whose speaking targets are the agent's own
// block; nullopt if the targets are not of that form.
std::optional<std::vector<int>> partition_from_targets(const TargetSets& targets, int n);

// Target sets where every agent targets the rest of its own block, for both
// speaking and listening.
TargetSets block_targets(const std::vector<int>& partition);

}  // namespace infonet

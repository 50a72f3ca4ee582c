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

#include <optional>
#include <vector>

#include "infonet/model.hpp"
#include "infonet/network.hpp"
#include "infonet/vertex_set.hpp"

namespace infonet {

enum class ComponentRole { Root, Leaf, Isolated, Internal };

const char* to_string(ComponentRole role);

// Strongly connected components of the live graph with their condensation.
// Components are indexed by ascending minimum vertex.
struct ComponentGraph {
  std::vector<std::vector<Vertex>> components;
  std::vector<int> component_of;
  // Deduplicated, sorted condensation edges.
  std::vector<std::vector<int>> successors;
  std::vector<std::vector<int>> predecessors;
  // Closed reach: the component itself plus every vertex reachable from it.
  std::vector<VertexSet> reach;
  // |C| >= c, compared exactly.
  std::vector<bool> large;
  // Roles in the full condensation.
  std::vector<ComponentRole> roles;
  // Roles among large components only, where T -> T' iff T' is reachable
  // from T. Empty for small components.
  std::vector<std::optional<ComponentRole>> large_roles;

  int size() const { return static_cast<int>(components.size()); }
  int large_count() const;
  std::vector<int> large_components() const;
  // Independent acyclicity check of the condensation edges (Kahn).
  bool is_acyclic() const;
};

// Tarjan's algorithm over live pairs; large threshold is params.c_s.
ComponentGraph condense(const BidirectedNetwork& net, const Params& params);

// Same partition with an explicit large threshold.
ComponentGraph condense(const BidirectedNetwork& net, Mode mode, const Rational& threshold);

// Closed reach of a single vertex over live pairs (k ignored).
VertexSet closed_reach(const BidirectedNetwork& net, Mode mode, Vertex v);

}  // namespace infonet

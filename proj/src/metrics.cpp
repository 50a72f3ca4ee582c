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

#include "infonet/metrics.hpp"

#include "infonet/condensation.hpp"
#include "infonet/error.hpp"

namespace infonet {

std::vector<std::vector<bool>> live_projection(const BidirectedNetwork& net, Mode mode) {
  const int n = net.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && live_pair(net, mode, u, v)) adj[u][v] = adj[v][u] = true;
    }
  }
  return adj;
}

StructureMetrics metrics(const BidirectedNetwork& net, const Params& params,
                         const std::optional<std::vector<int>>& partition) {
  const int n = net.size();
  if (partition && static_cast<int>(partition->size()) != n) {
    throw ArgumentError("partition size differs from n");
  }
  StructureMetrics m;
  m.n = n;
  m.speaking_edges = net.edge_count(EdgeKind::Speaking);
  m.listening_edges = net.edge_count(EdgeKind::Listening);

  const auto adj = live_projection(net, params.mode);
  std::int64_t triples = 0;
  std::int64_t closed = 0;
  for (Vertex c = 0; c < n; ++c) {
    std::vector<Vertex> nb;
    for (Vertex w = 0; w < n; ++w) {
      if (adj[c][w]) nb.push_back(w);
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++triples;
        if (adj[nb[i]][nb[j]]) ++closed;
      }
    }
  }
  m.triangles = closed / 3;
  m.open_triples = triples - closed;
  if (triples > 0) m.clustering = Rational(closed, triples);

  int crossing = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !live_pair(net, params.mode, u, v)) continue;
      ++m.live_pairs;
      if (partition && (*partition)[u] != (*partition)[v]) ++crossing;
    }
  }
  if (partition) {
    m.polarization = m.live_pairs > 0 ? Rational(crossing, m.live_pairs) : Rational(0);
  }

  const ComponentGraph cg = condense(net, params.mode, Rational(1));
  m.component_count = cg.size();
  for (const auto& comp : cg.components) {
    const int size = static_cast<int>(comp.size());
    ++m.components[size];
    m.largest_component = std::max(m.largest_component, size);
  }

  int reciprocal = 0;
  for (auto [u, v] : net.edges(EdgeKind::Speaking)) {
    if (net.has_speaking(v, u)) ++reciprocal;
  }
  if (m.speaking_edges > 0) m.reciprocity = Rational(reciprocal, m.speaking_edges);

  for (Vertex v = 0; v < n; ++v) {
    ++m.out_speaking[net.out_degree(EdgeKind::Speaking, v)];
    ++m.in_speaking[net.in_degree(EdgeKind::Speaking, v)];
    ++m.out_listening[net.out_degree(EdgeKind::Listening, v)];
    ++m.in_listening[net.in_degree(EdgeKind::Listening, v)];
  }
  return m;
}

std::optional<std::vector<int>> partition_from_targets(const TargetSets& targets, int n) {
  std::vector<int> block(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (block[v] >= 0) continue;
    const auto& t = targets.speaking(v);
    if (!t) return std::nullopt;
    block[v] = next;
    for (Vertex w : t->to_vector()) {
      if (block[w] >= 0) return std::nullopt;
      block[w] = next;
    }
    ++next;
  }
  // Every agent must target exactly the others in its block.
  for (Vertex v = 0; v < n; ++v) {
    const auto& t = targets.speaking(v);
    if (!t) return std::nullopt;
    for (Vertex w = 0; w < n; ++w) {
      if (w != v && t->contains(w) != (block[w] == block[v])) return std::nullopt;
    }
  }
  return block;
}

TargetSets block_targets(const std::vector<int>& partition) {
  const int n = static_cast<int>(partition.size());
  TargetSets targets(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet set(n);
    for (Vertex w = 0; w < n; ++w) {
      if (w != v && partition[w] == partition[v]) set.insert(w);
    }
    targets.set_speaking(v, set);
    targets.set_listening(v, set);
  }
  return targets;
}

}  // namespace infonet

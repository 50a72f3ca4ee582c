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

#include "infonet/structure_search.hpp"

#include "infonet/condensation.hpp"
#include "infonet/dynamics.hpp"
#include "infonet/equilibrium.hpp"
#include "infonet/error.hpp"
#include "infonet/generators.hpp"
#include "infonet/metrics.hpp"
#include "infonet/rng.hpp"

namespace infonet {

std::string to_string(StructureFamily family) {
  switch (family) {
    case StructureFamily::OpenClosedTriangle: return "open-closed-triangle";
    case StructureFamily::Polarized: return "polarized";
    case StructureFamily::Broadcast: return "broadcast";
  }
  return "?";
}

StructureFamily parse_family(const std::string& text) {
  for (auto f : {StructureFamily::OpenClosedTriangle, StructureFamily::Polarized,
                 StructureFamily::Broadcast}) {
    if (text == to_string(f)) return f;
  }
  throw ArgumentError("unknown structure family: " + text);
}

bool has_structure(StructureFamily family, const BidirectedNetwork& net, const Params& params,
                   const std::vector<int>& partition) {
  switch (family) {
    case StructureFamily::OpenClosedTriangle: {
      const StructureMetrics m = metrics(net, params);
      return m.triangles > 0 && m.open_triples > 0;
    }
    case StructureFamily::Polarized: {
      const StructureMetrics m = metrics(net, params, partition);
      return m.live_pairs > 0 && *m.polarization < Rational(1, 10);
    }
    case StructureFamily::Broadcast: {
      const ComponentGraph cg = condense(net, params.mode, Rational(1));
      int biggest = 0;
      for (int c = 1; c < cg.size(); ++c) {
        if (cg.components[c].size() > cg.components[biggest].size()) biggest = c;
      }
      const auto& comp = cg.components[biggest];
      if (2 * static_cast<int>(comp.size()) < net.size() || comp.size() < 3) return false;
      const auto adj = live_projection(net, params.mode);
      std::vector<int> degree;
      int total = 0;
      for (Vertex v : comp) {
        int d = 0;
        for (Vertex w : comp) d += adj[v][w] ? 1 : 0;
        degree.push_back(d);
        total += d;
      }
      for (int d : degree) {
        if (d * static_cast<int>(comp.size()) >= 2 * total) return true;
      }
      return false;
    }
  }
  return false;
}

std::optional<StructureHit> structure_search(StructureFamily family, const Params& params,
                                             const StructureBudget& budget) {
  params.validate();
  if (budget.n_min < 3 || budget.n_max < budget.n_min) {
    throw ArgumentError("structure search needs 3 <= n_min <= n_max");
  }
  SplitMix64 rng(budget.seed);
  const bool directed = params.mode == Mode::DirectedReduced;
  for (std::uint64_t i = 0; i < budget.networks; ++i) {
    const int n = budget.n_min + static_cast<int>(rng.below(budget.n_max - budget.n_min + 1));
    const double p = 0.1 + 0.4 * static_cast<double>(rng.below(1000)) / 1000.0;
    const std::uint64_t seed = rng.next();
    std::vector<int> partition(n);
    for (Vertex v = 0; v < n; ++v) partition[v] = 2 * v < n ? 0 : 1;
    const TargetSets targets =
        family == StructureFamily::Polarized ? block_targets(partition) : TargetSets();
    const BidirectedNetwork start = random_network(n, p, directed ? 0.0 : p, seed);
    RunOptions options;
    const std::uint64_t n4 = static_cast<std::uint64_t>(n) * n * n * n;
    options.max_steps = budget.max_steps ? budget.max_steps : 40 * n4;
    options.record_no_change = false;
    const Trace trace = run(start, params, targets, seed, options);
    if (!trace.converged) continue;
    if (!is_stable(trace.final, params, targets).stable) continue;
    if (!has_structure(family, trace.final, params, partition)) continue;
    return StructureHit{trace.final, targets, partition, i + 1, seed};
  }
  return std::nullopt;
}

}  // namespace infonet

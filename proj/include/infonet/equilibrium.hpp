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

#include "infonet/dynamics.hpp"
#include "infonet/model.hpp"
#include "infonet/network.hpp"

namespace infonet {

struct Witness {
  EdgeKind kind = EdgeKind::Speaking;
  Vertex u = 0;
  Vertex v = 0;
  Classification classification = Classification::StayAbsent;
};

// Utilities of both endpoints before and after adding s_uv together with l_vu.
struct JointDeviation {
  Vertex u = 0;
  Vertex v = 0;
  Rational u_before{0};
  Rational u_after{0};
  Rational v_before{0};
  Rational v_after{0};
};

struct StabilityReport {
  bool stable = true;
  std::vector<Witness> witnesses;
  // Only meaningful when bi_pairwise_checked.
  bool bi_pairwise_checked = false;
  bool bi_pairwise = false;
  std::optional<Witness> removable_witness;
  std::optional<JointDeviation> bi_pairwise_witness;
};

// Edge scan over all typed pairs (listening pairs skipped in DirectedReduced).
StabilityReport is_stable(const BidirectedNetwork& net, const Params& params,
                          const TargetSets& targets);

// Stability part plus the joint-deviation test: no removable edge, and any
// joint addition that strictly helps u strictly hurts v.
StabilityReport is_bi_pairwise_stable(const BidirectedNetwork& net, const Params& params,
                                      const TargetSets& targets);

// Every s_uv has l_vu and every l_vu has s_uv.
bool all_complete(const BidirectedNetwork& net);

// Literal Nash predicate: every agent tries every alternative strategy.
// Throws CapacityError beyond n = 6 (Bidirected) or n = 7 (DirectedReduced).
bool brute_force_nash(const BidirectedNetwork& net, const Params& params,
                      const TargetSets& targets);

bool check_symmetric(const BidirectedNetwork& net, const Params& params,
                     const TargetSets& targets);

// ---- enumeration ----

// Bit i of a mask: speaking pairs in lexicographic (u, v) order, u != v,
// then (Bidirected only) listening pairs in the same order.
int mask_bits(int n, Mode mode);
BidirectedNetwork network_from_mask(int n, Mode mode, std::uint64_t mask);
std::uint64_t mask_of(const BidirectedNetwork& net, Mode mode);

// Smallest mask over all vertex relabelings; n <= 8.
std::uint64_t canonical_mask(const BidirectedNetwork& net, Mode mode);

// Raw enumeration limit: n <= 3 Bidirected, n <= 4 DirectedReduced.
bool exhaustive_feasible(int n, Mode mode);

enum class SearchMode { Exhaustive, Sampled };
std::string to_string(SearchMode mode);

struct EfficiencyReport {
  Rational best_welfare{0};
  // Canonical representatives, one per isomorphism class, ascending mask.
  std::vector<BidirectedNetwork> argmax_nets;
  std::vector<std::uint64_t> argmax_masks;
  // Raw argmax count before isomorphism reduction.
  std::uint64_t raw_argmax = 0;
  std::uint64_t searched = 0;
  SearchMode mode = SearchMode::Exhaustive;
  bool unique_up_to_isomorphism() const { return argmax_masks.size() == 1; }
};

struct SearchOptions {
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

// Throws CapacityError when exhaustive mode is requested beyond the limit.
EfficiencyReport efficient_search(int n, const Params& params, const TargetSets& targets,
                                  const SearchOptions& options = {});

struct PoaPos {
  Rational max_welfare{0};
  Rational min_stable_welfare{0};
  Rational max_stable_welfare{0};
  std::uint64_t networks = 0;
  std::uint64_t stable_networks = 0;
  // Set when no positive optimum exists; ratios are then reported as 1.
  bool degenerate = false;
  // nullopt when no stable network exists.
  std::optional<Rational> poa;
  std::optional<Rational> pos;
};

PoaPos poa_pos(int n, const Params& params, const TargetSets& targets);

struct CensusRow {
  std::uint64_t mask = 0;
  Rational welfare{0};
  bool stable = false;
  bool bi_pairwise = false;
  bool complete = false;
  bool symmetric = false;
};

// One row per raw network, ascending mask. Work is split across
// worker_count() threads.
std::vector<CensusRow> census(int n, const Params& params, const TargetSets& targets);

// INFONET_WORKERS when set to a positive integer, else 1.
int worker_count();

}  // namespace infonet

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
#include <string>
#include <utility>
#include <vector>

#include "infonet/model.hpp"
#include "infonet/network.hpp"
#include "infonet/rng.hpp"

namespace infonet {

enum class Classification { Addable, Removable, StayPresent, StayAbsent };

std::string to_string(EdgeKind kind);
std::string to_string(Classification cls);

// Strict single-edge test on the edge owner's utility. The owner of
// s_uv and of l_uv is u.
Classification classify(const BidirectedNetwork& net, const Params& params,
                        const TargetSets& targets, EdgeKind kind, Vertex u, Vertex v);

inline bool is_move(Classification cls) {
  return cls == Classification::Addable || cls == Classification::Removable;
}

enum class MoveKind { AddSpeaking, RemoveSpeaking, AddListening, RemoveListening, NoChange };

std::string to_string(MoveKind kind);
MoveKind parse_move_kind(const std::string& text);

struct Move {
  MoveKind kind = MoveKind::NoChange;
  // The sampled typed pair; for NoChange this is what was evaluated and kept.
  EdgeKind sampled = EdgeKind::Speaking;
  Vertex u = 0;
  Vertex v = 0;
  std::uint64_t step_index = 0;

  bool mutates() const { return kind != MoveKind::NoChange; }
  friend bool operator==(const Move&, const Move&) = default;
};

MoveKind move_kind_for(EdgeKind kind, bool adding);
// Applies a mutating move; throws ValidationError if the edge state does not
// match the move (adding a present edge, removing an absent one).
void apply_move(BidirectedNetwork& net, const Move& move);

struct Trace {
  std::uint64_t seed = 0;
  std::string generator = SplitMix64::kName;
  Params params;
  TargetSets targets;
  BidirectedNetwork initial;
  std::vector<Move> moves;
  BidirectedNetwork final;
  bool converged = false;
  std::uint64_t steps_sampled = 0;
};

struct RunOptions {
  std::uint64_t max_steps = 0;  // 0 selects 50 * n^6
  std::uint64_t scan_interval = 0;  // 0 selects 2 * n * (n - 1)
  bool record_no_change = true;
};

std::uint64_t default_max_steps(int n);

// One round: samples one of the 2 n (n-1) typed ordered pairs uniformly and
// toggles it iff it is addable or removable.
Move step_in_place(BidirectedNetwork& net, const Params& params,
                   const TargetSets& targets, SplitMix64& rng, std::uint64_t step_index = 0);

std::pair<BidirectedNetwork, Move> step(const BidirectedNetwork& net, const Params& params,
                                        const TargetSets& targets, SplitMix64& rng);

// True when no typed pair is addable or removable.
bool no_moves_available(const BidirectedNetwork& net, const Params& params,
                        const TargetSets& targets);

Trace run(const BidirectedNetwork& net, const Params& params, const TargetSets& targets,
          std::uint64_t seed, const RunOptions& options = {});

// Replays the mutating moves of a trace; throws ValidationError on a
// malformed trace or when the result differs from trace.final.
BidirectedNetwork replay(const Trace& trace);

struct ReaddCheck {
  bool passed = true;
  // False for DirectedReduced traces or traces with a zero cost.
  bool applicable = true;
};

// Once s_vw and l_wv are both absent, neither half is ever added again.
ReaddCheck never_readd_check(const Trace& trace);

struct PotentialMeasure {
  int complete_pairs = 0;  // pairs with s_vw and l_wv
  int edges = 0;
  int value = 0;
  friend bool operator==(const PotentialMeasure&, const PotentialMeasure&) = default;
};

PotentialMeasure potential(const BidirectedNetwork& net);

}  // namespace infonet

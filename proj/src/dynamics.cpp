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

#include "infonet/dynamics.hpp"

#include "infonet/error.hpp"

namespace infonet {

std::string to_string(EdgeKind kind) {
  return kind == EdgeKind::Speaking ? "speaking" : "listening";
}

std::string to_string(Classification cls) {
  switch (cls) {
    case Classification::Addable: return "addable";
    case Classification::Removable: return "removable";
    case Classification::StayPresent: return "stay-present";
    case Classification::StayAbsent: return "stay-absent";
  }
  return "?";
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::AddSpeaking: return "add_s";
    case MoveKind::RemoveSpeaking: return "remove_s";
    case MoveKind::AddListening: return "add_l";
    case MoveKind::RemoveListening: return "remove_l";
    case MoveKind::NoChange: return "none";
  }
  return "?";
}

MoveKind parse_move_kind(const std::string& text) {
  if (text == "add_s") return MoveKind::AddSpeaking;
  if (text == "remove_s") return MoveKind::RemoveSpeaking;
  if (text == "add_l") return MoveKind::AddListening;
  if (text == "remove_l") return MoveKind::RemoveListening;
  if (text == "none") return MoveKind::NoChange;
  throw ValidationError("unknown move kind \"" + text + "\"");
}

MoveKind move_kind_for(EdgeKind kind, bool adding) {
  if (kind == EdgeKind::Speaking) return adding ? MoveKind::AddSpeaking : MoveKind::RemoveSpeaking;
  return adding ? MoveKind::AddListening : MoveKind::RemoveListening;
}

namespace {

// Toggling s_uv only changes u's speaking reach and l_uv only u's listening
// reach (a shortest live path never leaves its endpoint), so the other half of
// the utility cancels out of the comparison.
Rational owner_utility(const BidirectedNetwork& net, const Params& params,
                       const TargetSets& targets, EdgeKind kind, Vertex u) {
  return kind == EdgeKind::Speaking ? speaking_utility(net, params, targets, u)
                                    : listening_utility(net, params, targets, u);
}

}  // namespace

Classification classify(const BidirectedNetwork& net, const Params& params,
                        const TargetSets& targets, EdgeKind kind, Vertex u, Vertex v) {
  const bool present = net.has(kind, u, v);
  const Rational before = owner_utility(net, params, targets, kind, u);
  BidirectedNetwork probe = net;
  probe.set(kind, u, v, !present);
  const Rational after = owner_utility(probe, params, targets, kind, u);
  if (present) return after > before ? Classification::Removable : Classification::StayPresent;
  return after > before ? Classification::Addable : Classification::StayAbsent;
}

void apply_move(BidirectedNetwork& net, const Move& move) {
  if (!move.mutates()) return;
  const bool adding = move.kind == MoveKind::AddSpeaking || move.kind == MoveKind::AddListening;
  const EdgeKind kind = (move.kind == MoveKind::AddSpeaking || move.kind == MoveKind::RemoveSpeaking)
                            ? EdgeKind::Speaking
                            : EdgeKind::Listening;
  if (move.u < 0 || move.v < 0 || move.u >= net.size() || move.v >= net.size() ||
      move.u == move.v) {
    throw ValidationError("move at step " + std::to_string(move.step_index) +
                          " has invalid endpoints");
  }
  if (!net.set(kind, move.u, move.v, adding)) {
    throw ValidationError("move at step " + std::to_string(move.step_index) + " (" +
                          to_string(move.kind) + " " + std::to_string(move.u) + "," +
                          std::to_string(move.v) + ") does not match the edge state");
  }
}

std::uint64_t default_max_steps(int n) {
  std::uint64_t n6 = 1;
  for (int i = 0; i < 6; ++i) n6 *= static_cast<std::uint64_t>(n);
  return 50 * n6;
}

Move step_in_place(BidirectedNetwork& net, const Params& params, const TargetSets& targets,
                   SplitMix64& rng, std::uint64_t step_index) {
  const int n = net.size();
  Move move;
  move.step_index = step_index;
  if (n < 2) return move;
  const std::uint64_t per_kind = static_cast<std::uint64_t>(n) * (n - 1);
  const std::uint64_t pick = rng.below(2 * per_kind);
  move.sampled = pick < per_kind ? EdgeKind::Speaking : EdgeKind::Listening;
  const std::uint64_t index = pick % per_kind;
  move.u = static_cast<Vertex>(index / (n - 1));
  const auto offset = static_cast<Vertex>(index % (n - 1));
  move.v = offset < move.u ? offset : offset + 1;

  const Classification cls = classify(net, params, targets, move.sampled, move.u, move.v);
  if (is_move(cls)) {
    const bool adding = cls == Classification::Addable;
    net.set(move.sampled, move.u, move.v, adding);
    move.kind = move_kind_for(move.sampled, adding);
  }
  return move;
}

std::pair<BidirectedNetwork, Move> step(const BidirectedNetwork& net, const Params& params,
                                        const TargetSets& targets, SplitMix64& rng) {
  BidirectedNetwork next = net;
  Move move = step_in_place(next, params, targets, rng);
  return {std::move(next), move};
}

bool no_moves_available(const BidirectedNetwork& net, const Params& params,
                        const TargetSets& targets) {
  for (EdgeKind kind : {EdgeKind::Speaking, EdgeKind::Listening}) {
    if (kind == EdgeKind::Listening && params.mode == Mode::DirectedReduced) continue;
    for (Vertex u = 0; u < net.size(); ++u) {
      for (Vertex v = 0; v < net.size(); ++v) {
        if (u != v && is_move(classify(net, params, targets, kind, u, v))) return false;
      }
    }
  }
  return true;
}

Trace run(const BidirectedNetwork& net, const Params& params, const TargetSets& targets,
          std::uint64_t seed, const RunOptions& options) {
  params.validate();
  targets.validate(net.size());
  const int n = net.size();
  const std::uint64_t max_steps = options.max_steps ? options.max_steps : default_max_steps(n);
  const std::uint64_t scan = options.scan_interval
                                 ? options.scan_interval
                                 : std::max<std::uint64_t>(1, 2ull * n * (n > 0 ? n - 1 : 0));
  Trace trace;
  trace.seed = seed;
  trace.params = params;
  trace.targets = targets;
  trace.initial = net;
  trace.final = net;

  SplitMix64 rng(seed);
  // A scan before the first step lets already-stable starts finish with zero
  // sampled steps.
  if (no_moves_available(trace.final, params, targets)) {
    trace.converged = true;
    return trace;
  }
  for (std::uint64_t i = 0; i < max_steps; ++i) {
    Move m = step_in_place(trace.final, params, targets, rng, i);
    ++trace.steps_sampled;
    if (m.mutates() || options.record_no_change) trace.moves.push_back(m);
    if (trace.steps_sampled % scan == 0 && no_moves_available(trace.final, params, targets)) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

BidirectedNetwork replay(const Trace& trace) {
  BidirectedNetwork net = trace.initial;
  std::uint64_t last = 0;
  bool first = true;
  for (const Move& m : trace.moves) {
    if (!first && m.step_index <= last) {
      throw ValidationError("trace steps are not strictly increasing at step " +
                            std::to_string(m.step_index));
    }
    first = false;
    last = m.step_index;
    apply_move(net, m);
  }
  if (!(net == trace.final)) throw ValidationError("replayed network differs from trace.final");
  return net;
}

ReaddCheck never_readd_check(const Trace& trace) {
  ReaddCheck result;
  result.applicable = trace.params.mode == Mode::Bidirected && trace.params.c_s > 0 &&
                      trace.params.c_l > 0;
  const int n = trace.initial.size();
  BidirectedNetwork net = trace.initial;
  // dead[v * n + w]: s_vw and l_wv were simultaneously absent at some point.
  std::vector<char> dead(static_cast<std::size_t>(n) * n, 0);
  auto mark = [&](Vertex v, Vertex w) {
    if (!net.has_speaking(v, w) && !net.has_listening(w, v)) dead[v * n + w] = 1;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (v != w) mark(v, w);
    }
  }
  for (const Move& m : trace.moves) {
    if (!m.mutates()) continue;
    // Validates endpoints and edge state.
    apply_move(net, m);
    // Map the move to the pair slot (speaker, receiver).
    const bool speaking = m.kind == MoveKind::AddSpeaking || m.kind == MoveKind::RemoveSpeaking;
    const Vertex speaker = speaking ? m.u : m.v;
    const Vertex receiver = speaking ? m.v : m.u;
    const bool adding = m.kind == MoveKind::AddSpeaking || m.kind == MoveKind::AddListening;
    if (adding && dead[speaker * n + receiver]) result.passed = false;
    mark(speaker, receiver);
  }
  if (!(net == trace.final)) throw ValidationError("replayed network differs from trace.final");
  if (!result.applicable) result.passed = true;
  return result;
}

PotentialMeasure potential(const BidirectedNetwork& net) {
  PotentialMeasure p;
  for (auto [v, w] : net.edges(EdgeKind::Speaking)) {
    if (net.has_listening(w, v)) ++p.complete_pairs;
  }
  p.edges = net.edge_count();
  p.value = p.complete_pairs + p.edges;
  return p;
}

}  // namespace infonet

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
#include <string>
#include <utility>
#include <vector>

#include "infonet/condensation.hpp"
#include "infonet/model.hpp"
#include "infonet/network.hpp"

namespace infonet {

// Step labels: 1 = removal while stripping; 5 = leaf to root of a large
// component; 6 = join two large components; 7 = small leaf into the single
// large component; 8 = large component into a small root; 0 = generic
// addable edge, used when a case applies but none of its designated edges is
// addable (only happens when some component has size exactly c).
enum class PathAction { AddEdge, RemoveEdge };

struct PathMove {
  PathAction action = PathAction::AddEdge;
  Vertex u = 0;
  Vertex v = 0;
  int step_label = 1;
  friend bool operator==(const PathMove&, const PathMove&) = default;
};

struct LemmaTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;
};

struct LemmaResult {
  std::string lemma;
  bool pass = true;
  std::string detail;
};

struct PathCertificate {
  Params params;
  BidirectedNetwork initial;
  std::vector<PathMove> moves;
  BidirectedNetwork final;
  // Label-8 edges (r, s) that can never become addable again.
  std::vector<VertexPair> retired_edges;
  // The live edge (t, r) into the large component recorded for each label-8 move.
  std::vector<VertexPair> bridges;
  std::map<std::string, LemmaTally> lemmas;
  int iterations = 0;
  int fallback_moves = 0;

  bool lemmas_passed() const;
};

struct PathOptions {
  // Evaluate the lemma predicates around every step.
  bool check_lemmas = false;
  // Throw LemmaViolation on the first failing predicate.
  bool assert_lemmas = false;
  // 0 selects 8 n^3 + 64.
  std::uint64_t move_budget = 0;
};

// Deletes the lexicographically first removable speaking edge until none is
// left.
std::pair<BidirectedNetwork, std::vector<VertexPair>> strip_removables(
    const BidirectedNetwork& net, const Params& params);

// Requires DirectedReduced mode, k = inf and c_s > 0 (ArgumentError
// otherwise). Throws LemmaViolation when options.assert_lemmas is set and a
// predicate fails, and ValidationError if the move budget runs out or a
// state repeats.
PathCertificate construct_path(const BidirectedNetwork& net, const Params& params,
                               const PathOptions& options = {});

struct StepSnapshots {
  const BidirectedNetwork* before = nullptr;      // post-strip, before the step
  const BidirectedNetwork* after_step = nullptr;  // with the step's edges added
  const BidirectedNetwork* after_strip = nullptr;
  int step_label = 0;
  std::vector<VertexPair> added;
};

// Label-specific predicates (the large count drops after labels 5 and 6;
// label 7 joins exactly one more component to the hub; label 8 enters a
// qualifying small root) plus lemma_state_checks on after_strip.
std::vector<LemmaResult> lemma_checks(const StepSnapshots& snapshots, const Params& params);

// Predicates on one state. Some hold on every network, the others only when
// no edge is removable.
std::vector<LemmaResult> lemma_state_checks(const BidirectedNetwork& net, const Params& params);

// Individual predicates, directed k = inf semantics, threshold c = c_s.
bool addable_edges_cross_components(const BidirectedNetwork& net, const Params& params);
bool condensation_acyclic(const BidirectedNetwork& net, const Params& params);
bool kept_edges_reach_c(const BidirectedNetwork& net, const Params& params);
bool leaves_isolated_or_large(const BidirectedNetwork& net, const Params& params);
bool large_component_exists(const BidirectedNetwork& net, const Params& params);
// Premise uses |C| > c: at |C| = c an edge into C gains exactly c, which is
// not a strict improvement.
bool edges_into_large_addable(const BidirectedNetwork& net, const Params& params);
// Same predicate with the |C| >= c premise; false whenever a size-c
// component is entered by an edge gaining exactly c.
bool edges_into_large_addable_at_c(const BidirectedNetwork& net, const Params& params);
bool strip_keeps_large_count(const BidirectedNetwork& net, const Params& params);

struct CertificateCheck {
  bool valid = true;
  std::string error;
};

// Replays every move, requiring Addable/Removable at its turn, and checks the
// terminal network is stable.
CertificateCheck validate_certificate(const PathCertificate& cert);

}  // namespace infonet

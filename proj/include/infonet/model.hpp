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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "infonet/network.hpp"
#include "infonet/rational.hpp"
#include "infonet/vertex_set.hpp"

namespace infonet {

// Path-length horizon k. Infinite is a distinct state, not a large integer.
class Horizon {
 public:
  static Horizon infinite() { return Horizon(); }
  static Horizon bounded(int k);

  bool is_infinite() const { return !value_.has_value(); }
  // Throws ArgumentError on an infinite horizon.
  int value() const;
  // Depth cap usable as a BFS bound.
  int depth_limit() const {
    return value_ ? *value_ : std::numeric_limits<int>::max();
  }

  std::string to_string() const;
  static Horizon parse(const std::string& text);

  friend bool operator==(const Horizon&, const Horizon&) = default;

 private:
  Horizon() = default;
  explicit Horizon(int k) : value_(k) {}
  std::optional<int> value_;
};

enum class Mode {
  Bidirected,
  // c_l = 0: listening is implicit, only the speaking utility counts.
  DirectedReduced,
};

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct Params {
  Horizon k = Horizon::infinite();
  Rational c_s{0};
  Rational c_l{0};
  Mode mode = Mode::Bidirected;

  static Params bidirected(Horizon k, Rational c_s, Rational c_l);
  static Params directed(Horizon k, Rational c);

  // Throws ArgumentError on negative costs or DirectedReduced with c_l != 0.
  void validate() const;

  friend bool operator==(const Params&, const Params&) = default;
};

// Per-agent target subsets. A missing entry means "every other agent".
class TargetSets {
 public:
  TargetSets() = default;
  explicit TargetSets(int n) : speaking_(n), listening_(n) {}

  static TargetSets all(int n) { return TargetSets(n); }

  void set_speaking(Vertex v, VertexSet targets);
  void set_listening(Vertex v, VertexSet targets);
  const std::optional<VertexSet>& speaking(Vertex v) const;
  const std::optional<VertexSet>& listening(Vertex v) const;

  bool is_all() const;
  // Throws ArgumentError when an agent targets itself or sizes disagree.
  void validate(int n) const;

  friend bool operator==(const TargetSets&, const TargetSets&) = default;

 private:
  std::vector<std::optional<VertexSet>> speaking_;
  std::vector<std::optional<VertexSet>> listening_;
};

struct UtilityBreakdown {
  int speak_reach = 0;
  int listen_reach = 0;
  int out_speak = 0;
  int out_listen = 0;
  Rational u_s{0};
  Rational u_l{0};
  Rational u_total{0};
};

// A single traversable step u -> v: s_uv together with the receiver's
// listening edge l_vu. In DirectedReduced mode listening is implicit.
bool live_pair(const BidirectedNetwork& net, Mode mode, Vertex u, Vertex v);

// Agents reachable from v along live paths of length 1..k (v excluded).
VertexSet speaking_reach(const BidirectedNetwork& net, const Params& params, Vertex v);
// Agents that reach v along live paths of length 1..k (v excluded).
VertexSet listening_reach(const BidirectedNetwork& net, const Params& params, Vertex v);

// Live out-row (or in-row when backward) as a set, ignoring k.
VertexSet live_successors(const BidirectedNetwork& net, Mode mode, Vertex v);
VertexSet live_predecessors(const BidirectedNetwork& net, Mode mode, Vertex v);

UtilityBreakdown utility(const BidirectedNetwork& net, const Params& params,
                         const TargetSets& targets, Vertex v);
Rational welfare(const BidirectedNetwork& net, const Params& params,
                 const TargetSets& targets);

// Speaking-only and listening-only halves of the utility; each depends only
// on the edges that the respective half can see, which lets edge
// classification skip the other BFS.
Rational speaking_utility(const BidirectedNetwork& net, const Params& params,
                          const TargetSets& targets, Vertex v);
Rational listening_utility(const BidirectedNetwork& net, const Params& params,
                           const TargetSets& targets, Vertex v);

// All-pairs speaking reach memoized against one network's revision counter.
class ReachCache {
 public:
  ReachCache(const BidirectedNetwork& net, Params params)
      : net_(&net), params_(std::move(params)) {}

  const VertexSet& speaking(Vertex v);

 private:
  void refresh();

  const BidirectedNetwork* net_;
  Params params_;
  std::optional<std::uint64_t> revision_;
  std::vector<VertexSet> speaking_;
};

}  // namespace infonet

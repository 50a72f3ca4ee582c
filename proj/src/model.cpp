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

#include "infonet/model.hpp"

#include <algorithm>

#include "infonet/error.hpp"

namespace infonet {

Horizon Horizon::bounded(int k) {
  if (k < 1) throw ArgumentError("horizon k must be a positive integer");
  return Horizon(k);
}

int Horizon::value() const {
  if (!value_) throw ArgumentError("horizon is infinite");
  return *value_;
}

std::string Horizon::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

Horizon Horizon::parse(const std::string& text) {
  if (text == "inf" || text == "infinite" || text == "infinity") return infinite();
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ArgumentError("horizon must be a positive integer or \"inf\": " + text);
  }
  if (used != text.size()) {
    throw ArgumentError("horizon must be a positive integer or \"inf\": " + text);
  }
  return bounded(k);
}

std::string to_string(Mode mode) {
  return mode == Mode::Bidirected ? "bidirected" : "directed";
}

Mode parse_mode(const std::string& text) {
  if (text == "bidirected") return Mode::Bidirected;
  if (text == "directed" || text == "directed-reduced") return Mode::DirectedReduced;
  throw ArgumentError("unknown mode \"" + text + "\" (expected bidirected|directed)");
}

Params Params::bidirected(Horizon k, Rational c_s, Rational c_l) {
  Params p{k, c_s, c_l, Mode::Bidirected};
  p.validate();
  return p;
}

Params Params::directed(Horizon k, Rational c) {
  Params p{k, c, Rational(0), Mode::DirectedReduced};
  p.validate();
  return p;
}

void Params::validate() const {
  if (c_s < 0 || c_l < 0) throw ArgumentError("costs must be nonnegative");
  if (mode == Mode::DirectedReduced && c_l != Rational(0)) {
    throw ArgumentError("directed-reduced mode requires c_l = 0");
  }
}

void TargetSets::set_speaking(Vertex v, VertexSet targets) {
  speaking_.at(v) = std::move(targets);
}

void TargetSets::set_listening(Vertex v, VertexSet targets) {
  listening_.at(v) = std::move(targets);
}

namespace {
const std::optional<VertexSet> kAllOthers;
}

const std::optional<VertexSet>& TargetSets::speaking(Vertex v) const {
  if (speaking_.empty()) return kAllOthers;
  return speaking_.at(v);
}

const std::optional<VertexSet>& TargetSets::listening(Vertex v) const {
  if (listening_.empty()) return kAllOthers;
  return listening_.at(v);
}

bool TargetSets::is_all() const {
  auto none = [](const auto& sets) {
    return std::all_of(sets.begin(), sets.end(), [](const auto& s) { return !s; });
  };
  return none(speaking_) && none(listening_);
}

void TargetSets::validate(int n) const {
  if (speaking_.empty() && listening_.empty()) return;
  if (static_cast<int>(speaking_.size()) != n || static_cast<int>(listening_.size()) != n) {
    throw ArgumentError("target sets sized for a different network");
  }
  for (Vertex v = 0; v < n; ++v) {
    for (const auto* s : {&speaking_[v], &listening_[v]}) {
      if (!*s) continue;
      if ((*s)->universe() != n) throw ArgumentError("target set universe mismatch");
      if ((*s)->contains(v)) {
        throw ArgumentError("agent " + std::to_string(v) + " lists itself as a target");
      }
    }
  }
}

namespace {

// Fills `out` with the live neighbour row of v. Forward: successors of v;
// backward: predecessors of v.
void live_row(const BidirectedNetwork& net, Mode mode, Vertex v, bool forward,
              std::span<std::uint64_t> out) {
  if (forward) {
    auto s = net.row(EdgeKind::Speaking, v);
    if (mode == Mode::DirectedReduced) {
      std::copy(s.begin(), s.end(), out.begin());
      return;
    }
    // live(v, w) = s_vw && l_wv; column(Listening, v) holds {w : l_wv}.
    auto l = net.column(EdgeKind::Listening, v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s[i] & l[i];
  } else {
    // live(w, v) = s_wv && l_vw.
    auto s = net.column(EdgeKind::Speaking, v);
    if (mode == Mode::DirectedReduced) {
      std::copy(s.begin(), s.end(), out.begin());
      return;
    }
    auto l = net.row(EdgeKind::Listening, v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s[i] & l[i];
  }
}

VertexSet bounded_closure(const BidirectedNetwork& net, Mode mode, Vertex source,
                          int depth, bool forward) {
  const int n = net.size();
  const int words = net.words_per_row();
  VertexSet visited(n);
  VertexSet frontier(n);
  VertexSet next(n);
  std::vector<std::uint64_t> row(words);
  visited.insert(source);
  frontier.insert(source);
  for (int level = 0; level < depth; ++level) {
    std::fill(next.words().begin(), next.words().end(), 0);
    for (Vertex x : frontier.to_vector()) {
      live_row(net, mode, x, forward, row);
      auto nw = next.words();
      for (int i = 0; i < words; ++i) nw[i] |= row[i];
    }
    next -= visited;
    if (next.empty()) break;
    visited |= next;
    std::swap(frontier, next);
  }
  visited.erase(source);
  return visited;
}

}  // namespace

bool live_pair(const BidirectedNetwork& net, Mode mode, Vertex u, Vertex v) {
  net.check_pair(u, v);
  if (!net.has_speaking(u, v)) return false;
  return mode == Mode::DirectedReduced || net.has_listening(v, u);
}

VertexSet live_successors(const BidirectedNetwork& net, Mode mode, Vertex v) {
  VertexSet out(net.size());
  live_row(net, mode, v, true, out.words());
  return out;
}

VertexSet live_predecessors(const BidirectedNetwork& net, Mode mode, Vertex v) {
  VertexSet out(net.size());
  live_row(net, mode, v, false, out.words());
  return out;
}

VertexSet speaking_reach(const BidirectedNetwork& net, const Params& params, Vertex v) {
  net.check_vertex(v);
  return bounded_closure(net, params.mode, v, params.k.depth_limit(), true);
}

VertexSet listening_reach(const BidirectedNetwork& net, const Params& params, Vertex v) {
  net.check_vertex(v);
  return bounded_closure(net, params.mode, v, params.k.depth_limit(), false);
}

namespace {

int targeted_count(const VertexSet& reach, const std::optional<VertexSet>& targets) {
  return targets ? reach.count_intersection(*targets) : reach.count();
}

}  // namespace

Rational speaking_utility(const BidirectedNetwork& net, const Params& params,
                          const TargetSets& targets, Vertex v) {
  const int reach = targeted_count(speaking_reach(net, params, v), targets.speaking(v));
  return Rational(reach) - params.c_s * net.out_degree(EdgeKind::Speaking, v);
}

Rational listening_utility(const BidirectedNetwork& net, const Params& params,
                           const TargetSets& targets, Vertex v) {
  if (params.mode == Mode::DirectedReduced) return Rational(0);
  const int reach = targeted_count(listening_reach(net, params, v), targets.listening(v));
  return Rational(reach) - params.c_l * net.out_degree(EdgeKind::Listening, v);
}

UtilityBreakdown utility(const BidirectedNetwork& net, const Params& params,
                         const TargetSets& targets, Vertex v) {
  UtilityBreakdown b;
  b.speak_reach = targeted_count(speaking_reach(net, params, v), targets.speaking(v));
  b.out_speak = net.out_degree(EdgeKind::Speaking, v);
  b.u_s = Rational(b.speak_reach) - params.c_s * b.out_speak;
  b.out_listen = net.out_degree(EdgeKind::Listening, v);
  // In DirectedReduced mode this is reported but excluded from u_total.
  b.listen_reach = targeted_count(listening_reach(net, params, v), targets.listening(v));
  b.u_l = Rational(b.listen_reach) - params.c_l * b.out_listen;
  b.u_total = params.mode == Mode::Bidirected ? b.u_s + b.u_l : b.u_s;
  return b;
}

Rational welfare(const BidirectedNetwork& net, const Params& params,
                 const TargetSets& targets) {
  Rational total(0);
  for (Vertex v = 0; v < net.size(); ++v) {
    total += params.mode == Mode::Bidirected
                 ? speaking_utility(net, params, targets, v) +
                       listening_utility(net, params, targets, v)
                 : speaking_utility(net, params, targets, v);
  }
  return total;
}

const VertexSet& ReachCache::speaking(Vertex v) {
  if (revision_ != net_->revision()) refresh();
  return speaking_.at(v);
}

void ReachCache::refresh() {
  speaking_.clear();
  speaking_.reserve(net_->size());
  for (Vertex v = 0; v < net_->size(); ++v) {
    speaking_.push_back(speaking_reach(*net_, params_, v));
  }
  revision_ = net_->revision();
}

}  // namespace infonet

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

#include "infonet/condensation.hpp"

#include <algorithm>
#include <numeric>

namespace infonet {

const char* to_string(ComponentRole role) {
  switch (role) {
    case ComponentRole::Root: return "root";
    case ComponentRole::Leaf: return "leaf";
    case ComponentRole::Isolated: return "isolated";
    case ComponentRole::Internal: return "internal";
  }
  return "?";
}

int ComponentGraph::large_count() const {
  return static_cast<int>(std::count(large.begin(), large.end(), true));
}

std::vector<int> ComponentGraph::large_components() const {
  std::vector<int> out;
  for (int c = 0; c < size(); ++c) {
    if (large[c]) out.push_back(c);
  }
  return out;
}

bool ComponentGraph::is_acyclic() const {
  std::vector<int> indegree(size(), 0);
  for (const auto& succ : successors) {
    for (int d : succ) ++indegree[d];
  }
  std::vector<int> ready;
  for (int c = 0; c < size(); ++c) {
    if (indegree[c] == 0) ready.push_back(c);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int c = ready.back();
    ready.pop_back();
    ++seen;
    for (int d : successors[c]) {
      if (--indegree[d] == 0) ready.push_back(d);
    }
  }
  return seen == size();
}

namespace {

ComponentRole role_for(bool has_in, bool has_out) {
  if (!has_in && !has_out) return ComponentRole::Isolated;
  if (!has_in) return ComponentRole::Root;
  if (!has_out) return ComponentRole::Leaf;
  return ComponentRole::Internal;
}

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<Vertex>> tarjan(const std::vector<std::vector<Vertex>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> out;
  int counter = 0;
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        const Vertex w = adj[f.v][f.next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
    }
  }
  return out;
}

}  // namespace

VertexSet closed_reach(const BidirectedNetwork& net, Mode mode, Vertex v) {
  Params p;
  p.mode = mode;
  p.k = Horizon::infinite();
  VertexSet r = speaking_reach(net, p, v);
  r.insert(v);
  return r;
}

ComponentGraph condense(const BidirectedNetwork& net, const Params& params) {
  return condense(net, params.mode, params.c_s);
}

ComponentGraph condense(const BidirectedNetwork& net, Mode mode, const Rational& threshold) {
  const int n = net.size();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) adj[u] = live_successors(net, mode, u).to_vector();

  ComponentGraph g;
  auto found = tarjan(adj);
  // Tarjan emits sinks first; keep that order for the reach DP, then
  // reindex by minimum vertex.
  const int count = static_cast<int>(found.size());
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return found[a].front() < found[b].front(); });
  std::vector<int> new_index(count);
  for (int i = 0; i < count; ++i) new_index[order[i]] = i;

  g.components.resize(count);
  g.component_of.assign(n, -1);
  for (int t = 0; t < count; ++t) {
    g.components[new_index[t]] = found[t];
    for (Vertex v : found[t]) g.component_of[v] = new_index[t];
  }
  g.successors.assign(count, {});
  g.predecessors.assign(count, {});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj[u]) {
      const int a = g.component_of[u];
      const int b = g.component_of[v];
      if (a != b) g.successors[a].push_back(b);
    }
  }
  for (int c = 0; c < count; ++c) {
    auto& s = g.successors[c];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int d : s) g.predecessors[d].push_back(c);
  }
  for (auto& p : g.predecessors) std::sort(p.begin(), p.end());

  g.reach.assign(count, VertexSet(n));
  for (int t = 0; t < count; ++t) {  // reverse topological
    const int c = new_index[t];
    for (Vertex v : g.components[c]) g.reach[c].insert(v);
    for (int d : g.successors[c]) g.reach[c] |= g.reach[d];
  }

  g.large.resize(count);
  g.roles.resize(count);
  for (int c = 0; c < count; ++c) {
    g.large[c] = Rational(static_cast<std::int64_t>(g.components[c].size())) >= threshold;
    g.roles[c] = role_for(!g.predecessors[c].empty(), !g.successors[c].empty());
  }
  g.large_roles.assign(count, std::nullopt);
  for (int c = 0; c < count; ++c) {
    if (!g.large[c]) continue;
    bool has_in = false;
    bool has_out = false;
    for (int d = 0; d < count; ++d) {
      if (d == c || !g.large[d]) continue;
      const Vertex rep_c = g.components[c].front();
      const Vertex rep_d = g.components[d].front();
      if (g.reach[c].contains(rep_d)) has_out = true;
      if (g.reach[d].contains(rep_c)) has_in = true;
    }
    g.large_roles[c] = role_for(has_in, has_out);
  }
  return g;
}

}  // namespace infonet

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

#include "infonet/generators.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "infonet/error.hpp"
#include "infonet/rng.hpp"

namespace infonet {

BidirectedNetwork empty_network(int n) {
  if (n < 1) throw ArgumentError("empty network needs n >= 1");
  return BidirectedNetwork(n);
}

BidirectedNetwork cycle_network(int n, bool lifted) {
  if (n < 2) throw ArgumentError("cycle needs n >= 2");
  BidirectedNetwork net(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex next = (v + 1) % n;
    net.add(EdgeKind::Speaking, v, next);
    if (lifted) net.add(EdgeKind::Listening, next, v);
  }
  return net;
}

BidirectedNetwork lift(const BidirectedNetwork& net) {
  BidirectedNetwork out = net;
  for (auto [u, v] : net.edges(EdgeKind::Speaking)) out.add(EdgeKind::Listening, v, u);
  return out;
}

namespace {

void check_flower_args(int n, int k, bool balanced) {
  if (n < 3) throw ArgumentError("flower needs n >= 3");
  if (k < 4) throw ArgumentError("flower needs k >= 4");
  if (balanced && static_cast<double>(k) > 2.0 * std::sqrt(static_cast<double>(n))) {
    throw ArgumentError("balanced flower needs k <= 2 sqrt(n); got n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
  }
}

Flower build_flower(int n, int k, bool balanced, bool lifted) {
  check_flower_args(n, k, balanced);
  FlowerSpec spec;
  spec.n = n;
  spec.k = k;
  spec.petal_len = k / 2;
  spec.center = 0;
  spec.balanced = balanced;

  Vertex next_vertex = 1;
  const int others = n - 1;
  const int full = others / spec.petal_len;
  const int remainder = others % spec.petal_len;
  for (int p = 0; p < full; ++p) {
    std::vector<Vertex> petal;
    for (int i = 0; i < spec.petal_len; ++i) petal.push_back(next_vertex++);
    spec.petals.push_back(std::move(petal));
  }
  if (remainder > 0) {
    std::vector<Vertex> last;
    for (int i = 0; i < remainder; ++i) last.push_back(next_vertex++);
    if (balanced) {
      const int needed = spec.petal_len - 1 - remainder;
      if (needed > full) {
        throw ArgumentError("balancing would take more than one node per petal");
      }
      // Take the last non-center node of each of the earliest petals; its
      // predecessor is then joined to the center directly.
      for (int p = 0; p < needed; ++p) {
        last.push_back(spec.petals[p].back());
        spec.petals[p].pop_back();
      }
    }
    spec.petals.push_back(std::move(last));
  }
  spec.q = static_cast<int>(spec.petals.size());

  BidirectedNetwork net(n);
  auto link = [&](Vertex a, Vertex b) {
    net.add(EdgeKind::Speaking, a, b);
    if (lifted) net.add(EdgeKind::Listening, b, a);
  };
  for (const auto& petal : spec.petals) {
    Vertex prev = spec.center;
    for (Vertex v : petal) {
      link(prev, v);
      prev = v;
    }
    link(prev, spec.center);
  }
  return {std::move(net), std::move(spec)};
}

}  // namespace

Flower balanced_flower(int n, int k, bool lifted) { return build_flower(n, k, true, lifted); }

Flower unbalanced_flower(int n, int k, bool lifted) { return build_flower(n, k, false, lifted); }

Kautz kautz_network(int d, int length, bool lifted) {
  if (d < 2 || length < 2) throw ArgumentError("kautz needs d >= 2 and D >= 2");
  KautzSpec spec;
  spec.d = d;
  spec.length = length;

  // Enumerate labels in lexicographic order.
  std::vector<int> label(length, 0);
  auto valid = [&](const std::vector<int>& s) {
    for (int i = 0; i + 1 < length; ++i) {
      if (s[i] == s[i + 1]) return false;
    }
    return true;
  };
  for (;;) {
    if (valid(label)) spec.labels.push_back(label);
    int pos = length - 1;
    while (pos >= 0 && label[pos] == d) label[pos--] = 0;
    if (pos < 0) break;
    ++label[pos];
  }
  spec.n = static_cast<int>(spec.labels.size());

  auto encode = [&](const std::vector<int>& s) {
    std::uint64_t code = 0;
    for (int x : s) code = code * (d + 1) + x;
    return code;
  };
  std::vector<Vertex> index_of;
  {
    std::uint64_t total = 1;
    for (int i = 0; i < length; ++i) total *= (d + 1);
    index_of.assign(total, -1);
  }
  for (Vertex v = 0; v < spec.n; ++v) index_of[encode(spec.labels[v])] = v;

  BidirectedNetwork net(spec.n);
  for (Vertex v = 0; v < spec.n; ++v) {
    std::vector<int> shifted(spec.labels[v].begin() + 1, spec.labels[v].end());
    shifted.push_back(0);
    for (int y = 0; y <= d; ++y) {
      if (y == spec.labels[v].back()) continue;
      shifted.back() = y;
      const Vertex w = index_of[encode(shifted)];
      net.add(EdgeKind::Speaking, v, w);
      if (lifted) net.add(EdgeKind::Listening, w, v);
    }
  }
  return {std::move(net), std::move(spec)};
}

BidirectedNetwork random_network(int n, double p_s, double p_l, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("random network needs n >= 1");
  if (!(p_s >= 0.0 && p_s <= 1.0 && p_l >= 0.0 && p_l <= 1.0)) {
    throw ArgumentError("edge probabilities must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  BidirectedNetwork net(n);
  for (EdgeKind kind : {EdgeKind::Speaking, EdgeKind::Listening}) {
    const double p = kind == EdgeKind::Speaking ? p_s : p_l;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && rng.chance(p)) net.add(kind, u, v);
      }
    }
  }
  return net;
}

int speaking_diameter(const BidirectedNetwork& net) {
  const int n = net.size();
  int diameter = 0;
  std::vector<int> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y = 0; y < n; ++y) {
        if (y != x && dist[y] < 0 && net.has_speaking(x, y)) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (int d : dist) {
      if (d < 0) return -1;
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

}  // namespace infonet

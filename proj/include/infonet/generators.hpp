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
#include <vector>

#include "infonet/network.hpp"

namespace infonet {

BidirectedNetwork empty_network(int n);

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. When lifted, every step also
// gets the receiver's listening edge back to the speaker.
BidirectedNetwork cycle_network(int n, bool lifted);

struct FlowerSpec {
  int n = 0;
  int k = 0;
  int petal_len = 0;  // floor(k / 2)
  int q = 0;          // number of petals
  Vertex center = 0;
  // Non-center vertices of each petal in cycle order, center -> ... -> center.
  std::vector<std::vector<Vertex>> petals;
  bool balanced = true;
};

struct Flower {
  BidirectedNetwork net;
  FlowerSpec spec;
};

// Petals of floor(k/2) non-center nodes sharing center 0; a short remainder
// is padded to floor(k/2) - 1 by taking one node from each of the earliest
// petals. Requires 4 <= k <= 2 sqrt(n) and n >= 3.
Flower balanced_flower(int n, int k, bool lifted = false);

// Same petals but the remainder petal keeps its size. Requires k >= 4, n >= 3.
Flower unbalanced_flower(int n, int k, bool lifted = false);

struct KautzSpec {
  int d = 0;
  int length = 0;  // string length D
  int n = 0;       // (d + 1) d^(D - 1)
  // labels[v] is the symbol string of vertex v, in lexicographic order.
  std::vector<std::vector<int>> labels;
};

struct Kautz {
  BidirectedNetwork net;
  KautzSpec spec;
};

// Vertices are strings over {0..d} of length D without equal neighbours;
// x0..x(D-1) -> x1..x(D-1)y for every y != x(D-1).
Kautz kautz_network(int d, int length, bool lifted);

// Each typed ordered pair independently present with its probability.
BidirectedNetwork random_network(int n, double p_s, double p_l, std::uint64_t seed);

// Lifts every speaking edge s_uv to a complete pair by adding l_vu.
BidirectedNetwork lift(const BidirectedNetwork& net);

// Longest shortest speaking path, or -1 when some pair is unreachable.
int speaking_diameter(const BidirectedNetwork& net);

}  // namespace infonet

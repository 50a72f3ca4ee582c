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
#include <span>
#include <utility>
#include <vector>

#include "infonet/vertex_set.hpp"

namespace infonet {

enum class EdgeKind { Speaking, Listening };

using VertexPair = std::pair<Vertex, Vertex>;

// Game state: n agents and two independent sets of directed edges.
//
// speaking(u, v) is s_uv, built by u towards v. listening(v, u) is l_vu, built
// by v towards u (v accepts contact from u). Both orientations are stored
// together with their transposes so that forward and backward neighbour rows
// are available as word spans.
class BidirectedNetwork {
 public:
  BidirectedNetwork() = default;
  explicit BidirectedNetwork(int n);

  int size() const { return n_; }
  // Changes on every mutation; two networks with equal nonzero revisions
  // have equal contents.
  std::uint64_t revision() const { return revision_; }

  bool has(EdgeKind kind, Vertex from, Vertex to) const;
  bool has_speaking(Vertex from, Vertex to) const {
    return has(EdgeKind::Speaking, from, to);
  }
  bool has_listening(Vertex from, Vertex to) const {
    return has(EdgeKind::Listening, from, to);
  }

  // Returns true when the edge set changed. Self-pairs and out-of-range ids
  // throw ArgumentError.
  bool set(EdgeKind kind, Vertex from, Vertex to, bool present);
  bool add(EdgeKind kind, Vertex from, Vertex to) { return set(kind, from, to, true); }
  bool remove(EdgeKind kind, Vertex from, Vertex to) { return set(kind, from, to, false); }
  bool toggle(EdgeKind kind, Vertex from, Vertex to) {
    return set(kind, from, to, !has(kind, from, to));
  }
  // Adds s_uv and l_vu together (a complete edge from u to v).
  void add_complete(Vertex from, Vertex to);

  int out_degree(EdgeKind kind, Vertex v) const;
  int in_degree(EdgeKind kind, Vertex v) const;
  int edge_count(EdgeKind kind) const;
  int edge_count() const {
    return edge_count(EdgeKind::Speaking) + edge_count(EdgeKind::Listening);
  }

  // Sorted lexicographically by (from, to).
  std::vector<VertexPair> edges(EdgeKind kind) const;

  // Word rows of the adjacency matrices; row(kind, v) holds the out-edges of
  // v, column(kind, v) the in-edges of v.
  std::span<const std::uint64_t> row(EdgeKind kind, Vertex v) const;
  std::span<const std::uint64_t> column(EdgeKind kind, Vertex v) const;
  int words_per_row() const { return words_; }

  void check_vertex(Vertex v) const;
  void check_pair(Vertex from, Vertex to) const;

  friend bool operator==(const BidirectedNetwork& a, const BidirectedNetwork& b) {
    return a.n_ == b.n_ && a.speaking_ == b.speaking_ && a.listening_ == b.listening_;
  }

  std::size_t hash() const;

 private:
  struct Matrix {
    std::vector<std::uint64_t> forward;
    std::vector<std::uint64_t> transposed;
    friend bool operator==(const Matrix& a, const Matrix& b) {
      return a.forward == b.forward;
    }
  };
  const Matrix& matrix(EdgeKind kind) const {
    return kind == EdgeKind::Speaking ? speaking_ : listening_;
  }
  Matrix& matrix(EdgeKind kind) {
    return kind == EdgeKind::Speaking ? speaking_ : listening_;
  }

  int n_ = 0;
  int words_ = 0;
  std::uint64_t revision_ = 0;
  Matrix speaking_;
  Matrix listening_;
};

struct NetworkHash {
  std::size_t operator()(const BidirectedNetwork& net) const { return net.hash(); }
};

}  // namespace infonet

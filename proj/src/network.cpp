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

#include "infonet/network.hpp"

#include <atomic>
#include <bit>
#include <string>

#include "infonet/error.hpp"

namespace infonet {

namespace {

// Revisions are drawn from one process-wide counter, so equal revisions imply
// equal contents even across copies.
std::atomic<std::uint64_t> revision_source{0};

bool test_bit(const std::vector<std::uint64_t>& m, int words, Vertex r, Vertex c) {
  return (m[static_cast<std::size_t>(r) * words + (c >> 6)] >> (c & 63)) & 1u;
}

void assign_bit(std::vector<std::uint64_t>& m, int words, Vertex r, Vertex c, bool on) {
  auto& w = m[static_cast<std::size_t>(r) * words + (c >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  if (on) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

}  // namespace

BidirectedNetwork::BidirectedNetwork(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw ArgumentError("network size must be nonnegative");
  const auto cells = static_cast<std::size_t>(n) * words_;
  for (Matrix* m : {&speaking_, &listening_}) {
    m->forward.assign(cells, 0);
    m->transposed.assign(cells, 0);
  }
}

void BidirectedNetwork::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range 0.." +
                        std::to_string(n_ - 1));
  }
}

void BidirectedNetwork::check_pair(Vertex from, Vertex to) const {
  check_vertex(from);
  check_vertex(to);
  if (from == to) {
    throw ArgumentError("self-pair (" + std::to_string(from) + "," +
                        std::to_string(to) + ") is not a legal edge");
  }
}

bool BidirectedNetwork::has(EdgeKind kind, Vertex from, Vertex to) const {
  check_pair(from, to);
  return test_bit(matrix(kind).forward, words_, from, to);
}

bool BidirectedNetwork::set(EdgeKind kind, Vertex from, Vertex to, bool present) {
  check_pair(from, to);
  Matrix& m = matrix(kind);
  if (test_bit(m.forward, words_, from, to) == present) return false;
  assign_bit(m.forward, words_, from, to, present);
  assign_bit(m.transposed, words_, to, from, present);
  revision_ = ++revision_source;
  return true;
}

void BidirectedNetwork::add_complete(Vertex from, Vertex to) {
  add(EdgeKind::Speaking, from, to);
  add(EdgeKind::Listening, to, from);
}

int BidirectedNetwork::out_degree(EdgeKind kind, Vertex v) const {
  int total = 0;
  for (auto w : row(kind, v)) total += std::popcount(w);
  return total;
}

int BidirectedNetwork::in_degree(EdgeKind kind, Vertex v) const {
  int total = 0;
  for (auto w : column(kind, v)) total += std::popcount(w);
  return total;
}

int BidirectedNetwork::edge_count(EdgeKind kind) const {
  int total = 0;
  for (auto w : matrix(kind).forward) total += std::popcount(w);
  return total;
}

std::vector<VertexPair> BidirectedNetwork::edges(EdgeKind kind) const {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n_; ++u) {
    auto r = row(kind, u);
    for (int i = 0; i < words_; ++i) {
      std::uint64_t w = r[i];
      while (w) {
        out.emplace_back(u, i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  return out;
}

std::span<const std::uint64_t> BidirectedNetwork::row(EdgeKind kind, Vertex v) const {
  check_vertex(v);
  return {matrix(kind).forward.data() + static_cast<std::size_t>(v) * words_,
          static_cast<std::size_t>(words_)};
}

std::span<const std::uint64_t> BidirectedNetwork::column(EdgeKind kind, Vertex v) const {
  check_vertex(v);
  return {matrix(kind).transposed.data() + static_cast<std::size_t>(v) * words_,
          static_cast<std::size_t>(words_)};
}

std::size_t BidirectedNetwork::hash() const {
  // FNV-1a over both edge matrices.
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n_);
  for (const Matrix* m : {&speaking_, &listening_}) {
    for (auto w : m->forward) {
      h ^= w;
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h);
}

}  // namespace infonet

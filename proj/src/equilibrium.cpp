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

#include "infonet/equilibrium.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

#include "infonet/error.hpp"
#include "infonet/rng.hpp"

namespace infonet {

namespace {

int pair_index(int n, Vertex u, Vertex v) { return u * (n - 1) + (v < u ? v : v - 1); }

std::uint64_t full_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

void require_bits(int n, Mode mode) {
  if (n < 1) throw ArgumentError("n must be positive");
  if (mask_bits(n, mode) > 64) {
    throw CapacityError("network with n = " + std::to_string(n) + " does not fit a 64-bit mask");
  }
}

void require_exhaustive(int n, Mode mode) {
  if (!exhaustive_feasible(n, mode)) {
    throw CapacityError("exhaustive enumeration limited to n <= 3 (bidirected) or n <= 4 "
                        "(directed), got n = " + std::to_string(n));
  }
}

}  // namespace

StabilityReport is_stable(const BidirectedNetwork& net, const Params& params,
                          const TargetSets& targets) {
  StabilityReport report;
  const int n = net.size();
  for (EdgeKind kind : {EdgeKind::Speaking, EdgeKind::Listening}) {
    if (kind == EdgeKind::Listening && params.mode == Mode::DirectedReduced) continue;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const Classification cls = classify(net, params, targets, kind, u, v);
        if (is_move(cls)) report.witnesses.push_back({kind, u, v, cls});
      }
    }
  }
  report.stable = report.witnesses.empty();
  return report;
}

StabilityReport is_bi_pairwise_stable(const BidirectedNetwork& net, const Params& params,
                                      const TargetSets& targets) {
  StabilityReport report = is_stable(net, params, targets);
  report.bi_pairwise_checked = true;
  for (const auto& w : report.witnesses) {
    if (w.classification == Classification::Removable) {
      report.removable_witness = w;
      break;
    }
  }
  if (!report.removable_witness) {
    const int n = net.size();
    const bool directed = params.mode == Mode::DirectedReduced;
    for (Vertex u = 0; u < n && !report.bi_pairwise_witness; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const bool has_s = net.has_speaking(u, v);
        const bool has_l = net.has_listening(v, u);
        if (has_s && (directed || has_l)) continue;
        BidirectedNetwork joint = net;
        joint.add(EdgeKind::Speaking, u, v);
        if (!directed) joint.add(EdgeKind::Listening, v, u);
        JointDeviation d{u,
                         v,
                         utility(net, params, targets, u).u_total,
                         utility(joint, params, targets, u).u_total,
                         utility(net, params, targets, v).u_total,
                         utility(joint, params, targets, v).u_total};
        if (d.u_after > d.u_before && !(d.v_after < d.v_before)) {
          report.bi_pairwise_witness = d;
          break;
        }
      }
    }
  }
  report.bi_pairwise = !report.removable_witness && !report.bi_pairwise_witness;
  return report;
}

bool all_complete(const BidirectedNetwork& net) {
  for (auto [u, v] : net.edges(EdgeKind::Speaking)) {
    if (!net.has_listening(v, u)) return false;
  }
  for (auto [v, u] : net.edges(EdgeKind::Listening)) {
    if (!net.has_speaking(u, v)) return false;
  }
  return true;
}

bool brute_force_nash(const BidirectedNetwork& net, const Params& params,
                      const TargetSets& targets) {
  const int n = net.size();
  const bool directed = params.mode == Mode::DirectedReduced;
  const int limit = directed ? 7 : 6;
  if (n > limit) {
    throw CapacityError("brute-force Nash limited to n <= " + std::to_string(limit));
  }
  const int others = n - 1;
  const int bits = directed ? others : 2 * others;
  for (Vertex agent = 0; agent < n; ++agent) {
    const Rational current = utility(net, params, targets, agent).u_total;
    std::vector<Vertex> peers;
    for (Vertex w = 0; w < n; ++w) {
      if (w != agent) peers.push_back(w);
    }
    BidirectedNetwork alt = net;
    for (std::uint64_t strategy = 0; strategy < (std::uint64_t{1} << bits); ++strategy) {
      for (int i = 0; i < others; ++i) {
        alt.set(EdgeKind::Speaking, agent, peers[i], (strategy >> i) & 1);
        if (!directed) alt.set(EdgeKind::Listening, agent, peers[i], (strategy >> (others + i)) & 1);
      }
      if (utility(alt, params, targets, agent).u_total > current) return false;
    }
  }
  return true;
}

bool check_symmetric(const BidirectedNetwork& net, const Params& params,
                     const TargetSets& targets) {
  if (net.size() == 0) return true;
  const Rational first = utility(net, params, targets, 0).u_total;
  for (Vertex v = 1; v < net.size(); ++v) {
    if (utility(net, params, targets, v).u_total != first) return false;
  }
  return true;
}

int mask_bits(int n, Mode mode) {
  const int pairs = n * (n - 1);
  return mode == Mode::DirectedReduced ? pairs : 2 * pairs;
}

BidirectedNetwork network_from_mask(int n, Mode mode, std::uint64_t mask) {
  require_bits(n, mode);
  if (mask & ~full_mask(mask_bits(n, mode))) throw ArgumentError("mask has bits beyond the pair count");
  BidirectedNetwork net(n);
  const int pairs = n * (n - 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const int i = pair_index(n, u, v);
      if ((mask >> i) & 1) net.add(EdgeKind::Speaking, u, v);
      if (mode == Mode::Bidirected && ((mask >> (pairs + i)) & 1)) net.add(EdgeKind::Listening, u, v);
    }
  }
  return net;
}

std::uint64_t mask_of(const BidirectedNetwork& net, Mode mode) {
  const int n = net.size();
  require_bits(n, mode);
  const int pairs = n * (n - 1);
  std::uint64_t mask = 0;
  for (auto [u, v] : net.edges(EdgeKind::Speaking)) mask |= std::uint64_t{1} << pair_index(n, u, v);
  if (mode == Mode::Bidirected) {
    for (auto [u, v] : net.edges(EdgeKind::Listening)) {
      mask |= std::uint64_t{1} << (pairs + pair_index(n, u, v));
    }
  }
  return mask;
}

std::uint64_t canonical_mask(const BidirectedNetwork& net, Mode mode) {
  const int n = net.size();
  require_bits(n, mode);
  if (n > 8) throw CapacityError("canonical form limited to n <= 8");
  const int pairs = n * (n - 1);
  const auto speaking = net.edges(EdgeKind::Speaking);
  const auto listening =
      mode == Mode::Bidirected ? net.edges(EdgeKind::Listening) : std::vector<VertexPair>{};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (auto [u, v] : speaking) mask |= std::uint64_t{1} << pair_index(n, perm[u], perm[v]);
    for (auto [u, v] : listening) {
      mask |= std::uint64_t{1} << (pairs + pair_index(n, perm[u], perm[v]));
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool exhaustive_feasible(int n, Mode mode) {
  return n >= 1 && n <= (mode == Mode::DirectedReduced ? 4 : 3);
}

std::string to_string(SearchMode mode) {
  return mode == SearchMode::Exhaustive ? "exhaustive" : "sampled";
}

EfficiencyReport efficient_search(int n, const Params& params, const TargetSets& targets,
                                  const SearchOptions& options) {
  params.validate();
  require_bits(n, params.mode);
  if (options.mode == SearchMode::Exhaustive) require_exhaustive(n, params.mode);
  EfficiencyReport report;
  report.mode = options.mode;
  std::set<std::uint64_t> raw;
  bool any = false;
  auto visit = [&](std::uint64_t mask) {
    const BidirectedNetwork net = network_from_mask(n, params.mode, mask);
    const Rational w = welfare(net, params, targets);
    ++report.searched;
    if (!any || w > report.best_welfare) {
      any = true;
      report.best_welfare = w;
      raw.clear();
    }
    if (w == report.best_welfare) raw.insert(mask);
  };
  const int bits = mask_bits(n, params.mode);
  if (options.mode == SearchMode::Exhaustive) {
    const std::uint64_t count = std::uint64_t{1} << bits;
    for (std::uint64_t mask = 0; mask < count; ++mask) visit(mask);
  } else {
    SplitMix64 rng(options.seed);
    visit(0);
    for (std::uint64_t i = 1; i < options.samples; ++i) visit(rng.next() & full_mask(bits));
  }
  report.raw_argmax = raw.size();
  std::set<std::uint64_t> canonical;
  for (std::uint64_t mask : raw) {
    canonical.insert(canonical_mask(network_from_mask(n, params.mode, mask), params.mode));
  }
  for (std::uint64_t mask : canonical) {
    report.argmax_masks.push_back(mask);
    report.argmax_nets.push_back(network_from_mask(n, params.mode, mask));
  }
  return report;
}

PoaPos poa_pos(int n, const Params& params, const TargetSets& targets) {
  params.validate();
  require_exhaustive(n, params.mode);
  PoaPos out;
  const std::uint64_t count = std::uint64_t{1} << mask_bits(n, params.mode);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const BidirectedNetwork net = network_from_mask(n, params.mode, mask);
    const Rational w = welfare(net, params, targets);
    if (out.networks == 0 || w > out.max_welfare) out.max_welfare = w;
    ++out.networks;
    if (!is_stable(net, params, targets).stable) continue;
    if (out.stable_networks == 0 || w < out.min_stable_welfare) out.min_stable_welfare = w;
    if (out.stable_networks == 0 || w > out.max_stable_welfare) out.max_stable_welfare = w;
    ++out.stable_networks;
  }
  out.degenerate = out.max_welfare <= 0;
  if (out.stable_networks > 0) {
    if (out.degenerate) {
      out.poa = Rational(1);
      out.pos = Rational(1);
    } else {
      out.poa = out.min_stable_welfare / out.max_welfare;
      out.pos = out.max_stable_welfare / out.max_welfare;
    }
  }
  return out;
}

int worker_count() {
  const char* env = std::getenv("INFONET_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1) return 1;
  return static_cast<int>(std::min<long>(value, 256));
}

std::vector<CensusRow> census(int n, const Params& params, const TargetSets& targets) {
  params.validate();
  require_exhaustive(n, params.mode);
  const std::uint64_t count = std::uint64_t{1} << mask_bits(n, params.mode);
  std::vector<CensusRow> rows(count);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const BidirectedNetwork net = network_from_mask(n, params.mode, mask);
      const StabilityReport report = is_bi_pairwise_stable(net, params, targets);
      rows[mask] = {mask,
                    welfare(net, params, targets),
                    report.stable,
                    report.bi_pairwise,
                    all_complete(net),
                    check_symmetric(net, params, targets)};
    }
  };
  const int workers = static_cast<int>(std::min<std::uint64_t>(worker_count(), count));
  if (workers <= 1) {
    work(0, count);
    return rows;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(count, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace infonet

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

#include "infonet/convergence_path.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "infonet/dynamics.hpp"
#include "infonet/error.hpp"

namespace infonet {

namespace {

const TargetSets kAll;

bool addable(const BidirectedNetwork& g, const Params& p, Vertex u, Vertex v) {
  return classify(g, p, kAll, EdgeKind::Speaking, u, v) == Classification::Addable;
}

bool removable(const BidirectedNetwork& g, const Params& p, Vertex u, Vertex v) {
  return classify(g, p, kAll, EdgeKind::Speaking, u, v) == Classification::Removable;
}

std::optional<VertexPair> first_removable(const BidirectedNetwork& g, const Params& p) {
  for (auto [u, v] : g.edges(EdgeKind::Speaking)) {
    if (removable(g, p, u, v)) return VertexPair{u, v};
  }
  return std::nullopt;
}

std::vector<VertexPair> addable_edges(const BidirectedNetwork& g, const Params& p) {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (u != v && !g.has_speaking(u, v) && addable(g, p, u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool any_addable(const BidirectedNetwork& g, const Params& p) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (u != v && !g.has_speaking(u, v) && addable(g, p, u, v)) return true;
    }
  }
  return false;
}

int large_count(const BidirectedNetwork& g, const Params& p) {
  return condense(g, p).large_count();
}

Rational size_of(const std::vector<Vertex>& c) {
  return Rational(static_cast<std::int64_t>(c.size()));
}

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_regime(const Params& params) {
  params.validate();
  if (params.mode != Mode::DirectedReduced) {
    throw ArgumentError("convergence path requires directed-reduced mode");
  }
  if (!params.k.is_infinite()) throw ArgumentError("convergence path requires k = inf");
  if (params.c_s <= 0) throw ArgumentError("convergence path requires c_s > 0");
}

// Components without any edge into `target` (other than target itself).
int components_without_edge_into(const BidirectedNetwork& g, Mode mode,
                                 const std::vector<Vertex>& target) {
  VertexSet t(g.size());
  for (Vertex v : target) t.insert(v);
  ComponentGraph cg = condense(g, mode, Rational(1));
  int count = 0;
  for (const auto& comp : cg.components) {
    if (t.contains(comp.front())) continue;
    bool direct = false;
    for (Vertex u : comp) {
      if (live_successors(g, mode, u).count_intersection(t) > 0) {
        direct = true;
        break;
      }
    }
    if (!direct) ++count;
  }
  return count;
}

}  // namespace

bool PathCertificate::lemmas_passed() const {
  return std::all_of(lemmas.begin(), lemmas.end(),
                     [](const auto& kv) { return kv.second.failed == 0; });
}

std::pair<BidirectedNetwork, std::vector<VertexPair>> strip_removables(
    const BidirectedNetwork& net, const Params& params) {
  BidirectedNetwork g = net;
  std::vector<VertexPair> removed;
  while (auto e = first_removable(g, params)) {
    g.remove(EdgeKind::Speaking, e->first, e->second);
    removed.push_back(*e);
  }
  return {std::move(g), std::move(removed)};
}

bool addable_edges_cross_components(const BidirectedNetwork& net, const Params& params) {
  const ComponentGraph cg = condense(net, params);
  for (auto [u, v] : addable_edges(net, params)) {
    if (cg.component_of[u] == cg.component_of[v]) return false;
  }
  return true;
}

bool condensation_acyclic(const BidirectedNetwork& net, const Params& params) {
  return condense(net, params).is_acyclic();
}

bool kept_edges_reach_c(const BidirectedNetwork& net, const Params& params) {
  for (auto [u, v] : net.edges(EdgeKind::Speaking)) {
    if (removable(net, params, u, v)) continue;
    // Reach counted with v itself, as the loss of uv is a subset of it.
    if (Rational(closed_reach(net, params.mode, v).count()) < params.c_s) return false;
  }
  return true;
}

bool leaves_isolated_or_large(const BidirectedNetwork& net, const Params& params) {
  if (first_removable(net, params)) return true;
  const ComponentGraph cg = condense(net, params);
  for (int c = 0; c < cg.size(); ++c) {
    const bool leaf = cg.roles[c] == ComponentRole::Leaf || cg.roles[c] == ComponentRole::Isolated;
    if (!leaf) continue;
    const bool isolated_vertex =
        cg.components[c].size() == 1 && cg.roles[c] == ComponentRole::Isolated;
    if (!isolated_vertex && !cg.large[c]) return false;
  }
  return true;
}

bool large_component_exists(const BidirectedNetwork& net, const Params& params) {
  if (first_removable(net, params) || !any_addable(net, params)) return true;
  return condense(net, params).large_count() > 0;
}

namespace {

bool edges_into_large_with(const BidirectedNetwork& net, const Params& params, bool strict) {
  const ComponentGraph cg = condense(net, params);
  for (const auto& comp : cg.components) {
    const Rational size = size_of(comp);
    if (strict ? !(size > params.c_s) : !(size >= params.c_s)) continue;
    for (Vertex u = 0; u < net.size(); ++u) {
      if (closed_reach(net, params.mode, u).contains(comp.front())) continue;
      for (Vertex v : comp) {
        if (!addable(net, params, u, v)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool edges_into_large_addable(const BidirectedNetwork& net, const Params& params) {
  return edges_into_large_with(net, params, true);
}

bool edges_into_large_addable_at_c(const BidirectedNetwork& net, const Params& params) {
  return edges_into_large_with(net, params, false);
}

bool strip_keeps_large_count(const BidirectedNetwork& net, const Params& params) {
  const int before = large_count(net, params);
  for (auto [u, v] : net.edges(EdgeKind::Speaking)) {
    if (!removable(net, params, u, v)) continue;
    BidirectedNetwork h = net;
    h.remove(EdgeKind::Speaking, u, v);
    if (large_count(h, params) > before) return false;
  }
  return true;
}

std::vector<LemmaResult> lemma_state_checks(const BidirectedNetwork& net, const Params& params) {
  return {
      {"addable_crosses_components", addable_edges_cross_components(net, params), ""},
      {"condensation_acyclic", condensation_acyclic(net, params), ""},
      {"kept_edges_reach_c", kept_edges_reach_c(net, params), ""},
      {"leaves_isolated_or_large", leaves_isolated_or_large(net, params), ""},
      {"large_component_exists", large_component_exists(net, params), ""},
      {"edges_into_large_addable", edges_into_large_addable(net, params), ""},
      {"strip_keeps_large_count", strip_keeps_large_count(net, params), ""},
  };
}

std::vector<LemmaResult> lemma_checks(const StepSnapshots& s, const Params& params) {
  if (!s.before || !s.after_step || !s.after_strip) {
    throw ArgumentError("lemma_checks needs all three snapshots");
  }
  std::vector<LemmaResult> out;
  const ComponentGraph before = condense(*s.before, params);
  const int large_before = before.large_count();
  const int large_after = large_count(*s.after_strip, params);
  switch (s.step_label) {
    case 5:
      out.push_back({"leaf_root_edge_merges", large_after < large_before,
                     std::to_string(large_before) + " -> " + std::to_string(large_after)});
      break;
    case 6:
      out.push_back({"pair_edge_merges", large_after < large_before,
                     std::to_string(large_before) + " -> " + std::to_string(large_after)});
      break;
    case 7: {
      const auto larges = before.large_components();
      bool ok = larges.size() == 1 && large_after <= large_before &&
                !first_removable(*s.after_step, params).has_value();
      std::string detail;
      if (ok) {
        const auto& t1 = before.components[larges.front()];
        const int was = components_without_edge_into(*s.before, params.mode, t1);
        const int now = components_without_edge_into(*s.after_step, params.mode, t1);
        ok = was - now == 1;
        detail = std::to_string(was) + " -> " + std::to_string(now) + " without edge into the hub";
      }
      out.push_back({"small_leaf_joins_hub", ok, detail});
      break;
    }
    case 8: {
      const auto larges = before.large_components();
      bool ok = larges.size() == 1;
      if (ok) {
        const int t1 = larges.front();
        const Vertex rep = before.components[t1].front();
        for (int c = 0; c < before.size(); ++c) ok = ok && before.reach[c].contains(rep);
        // The added edge enters a small root component with enough private reach.
        if (ok && !s.added.empty()) {
          const int target = before.component_of[s.added.front().second];
          VertexSet t1set(s.before->size());
          for (Vertex v : before.components[t1]) t1set.insert(v);
          const bool root = before.roles[target] == ComponentRole::Root ||
                            before.roles[target] == ComponentRole::Isolated;
          ok = root && !before.large[target] &&
               Rational((before.reach[target] - t1set).count()) > params.c_s;
        }
      }
      out.push_back({"small_root_qualifies", ok, ""});
      out.push_back({"retired_stay_unaddable", large_after <= large_before,
                     std::to_string(large_before) + " -> " + std::to_string(large_after)});
      break;
    }
    default:
      break;
  }
  for (auto& r : lemma_state_checks(*s.after_strip, params)) out.push_back(std::move(r));
  return out;
}

namespace {

struct Choice {
  int label = 0;
  std::vector<VertexPair> edges;
  std::optional<VertexPair> bridge;
};

std::optional<Choice> leaf_to_root(const BidirectedNetwork& g, const Params& p, const ComponentGraph& cg,
                            bool& applies) {
  for (int t = 0; t < cg.size(); ++t) {
    if (cg.large_roles[t] != ComponentRole::Root) continue;
    const Vertex r = cg.components[t].front();
    for (int l = 0; l < cg.size(); ++l) {
      if (l == t || cg.large_roles[l] != ComponentRole::Leaf) continue;
      if (!cg.reach[t].contains(cg.components[l].front())) continue;
      applies = true;
      const Vertex leaf_vertex = cg.components[l].front();
      if (addable(g, p, leaf_vertex, r)) return Choice{5, {{leaf_vertex, r}}, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<Choice> merge_pair(const BidirectedNetwork& g, const Params& p, const ComponentGraph& cg,
                            bool& applies) {
  const auto larges = cg.large_components();
  if (larges.size() < 2) return std::nullopt;
  applies = true;
  for (int a : larges) {
    for (int b : larges) {
      if (a == b) continue;
      const Vertex r1 = cg.components[a].front();
      const Vertex r2 = cg.components[b].front();
      if (cg.reach[b].contains(r1)) continue;  // need T1 outside R(T2)
      if (!addable(g, p, r2, r1)) continue;
      BidirectedNetwork h = g;
      h.add(EdgeKind::Speaking, r2, r1);
      if (closed_reach(h, p.mode, r1).contains(r2)) return Choice{6, {{r2, r1}}, std::nullopt};
      if (addable(h, p, r1, r2)) return Choice{6, {{r2, r1}, {r1, r2}}, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<Choice> small_leaf_to_hub(const BidirectedNetwork& g, const Params& p, const ComponentGraph& cg,
                            bool& applies) {
  const auto larges = cg.large_components();
  if (larges.size() != 1) return std::nullopt;
  const Vertex r1 = cg.components[larges.front()].front();
  for (int c = 0; c < cg.size(); ++c) {
    if (cg.large[c]) continue;
    if (cg.roles[c] != ComponentRole::Leaf && cg.roles[c] != ComponentRole::Isolated) continue;
    applies = true;
    const Vertex sj = cg.components[c].front();
    if (addable(g, p, sj, r1)) return Choice{7, {{sj, r1}}, std::nullopt};
  }
  return std::nullopt;
}

std::optional<Choice> hub_to_small_root(const BidirectedNetwork& g, const Params& p, const ComponentGraph& cg,
                            bool& applies) {
  const auto larges = cg.large_components();
  if (larges.size() != 1) return std::nullopt;
  const int t1 = larges.front();
  VertexSet t1set(g.size());
  for (Vertex v : cg.components[t1]) t1set.insert(v);
  for (int c = 0; c < cg.size(); ++c) {
    if (cg.large[c]) continue;
    if (cg.roles[c] != ComponentRole::Root && cg.roles[c] != ComponentRole::Isolated) continue;
    if (!(Rational((cg.reach[c] - t1set).count()) > p.c_s)) continue;
    applies = true;
    const Vertex sk = cg.components[c].front();
    // Live edge t -> r with r in T1 and t reachable from the root but outside T1.
    std::optional<VertexPair> bridge;
    for (Vertex t : (cg.reach[c] - t1set).to_vector()) {
      for (Vertex r : cg.components[t1]) {
        if (live_pair(g, p.mode, t, r)) {
          bridge = VertexPair{t, r};
          break;
        }
      }
      if (bridge) break;
    }
    if (!bridge) continue;
    const Vertex rk = bridge->second;
    if (addable(g, p, rk, sk)) return Choice{8, {{rk, sk}}, bridge};
  }
  return std::nullopt;
}

std::optional<Choice> fallback(const BidirectedNetwork& g, const Params& p) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (u != v && !g.has_speaking(u, v) && addable(g, p, u, v)) {
        return Choice{0, {{u, v}}, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

// Follows the case analysis in order; a case whose premise holds but whose
// designated edges are all non-addable drops to the generic fallback.
Choice choose(const BidirectedNetwork& g, const Params& p, const ComponentGraph& cg) {
  bool applies = false;
  if (auto c = leaf_to_root(g, p, cg, applies)) return *c;
  if (!applies) {
    if (auto c = merge_pair(g, p, cg, applies)) return *c;
  }
  if (!applies) {
    if (auto c = small_leaf_to_hub(g, p, cg, applies)) return *c;
  }
  if (!applies) {
    if (auto c = hub_to_small_root(g, p, cg, applies)) return *c;
  }
  if (auto c = fallback(g, p)) return *c;
  throw LemmaViolation("no addable edge although the state was reported unstable");
}

}  // namespace

PathCertificate construct_path(const BidirectedNetwork& net, const Params& params,
                               const PathOptions& options) {
  require_regime(params);
  const bool check = options.check_lemmas || options.assert_lemmas;
  const int n = net.size();
  const std::uint64_t budget =
      options.move_budget ? options.move_budget
                          : 8ull * static_cast<std::uint64_t>(n) * n * n + 64;

  PathCertificate cert;
  cert.params = params;
  cert.initial = net;
  BidirectedNetwork g = net;

  auto tally = [&](const std::string& lemma, bool pass, const std::string& detail) {
    auto& t = cert.lemmas[lemma];
    ++t.checked;
    if (pass) return;
    ++t.failed;
    if (t.first_failure.empty()) t.first_failure = detail.empty() ? "(no detail)" : detail;
    if (options.assert_lemmas) {
      throw LemmaViolation(lemma + " failed at iteration " + std::to_string(cert.iterations) +
                           ": " + detail);
    }
  };
  auto push = [&](PathAction action, Vertex u, Vertex v, int label) {
    cert.moves.push_back({action, u, v, label});
    if (cert.moves.size() > budget) {
      throw ValidationError("convergence path exceeded its move budget of " +
                            std::to_string(budget));
    }
  };

  struct Pending {
    BidirectedNetwork before;
    BidirectedNetwork after_step;
    int label;
    std::vector<VertexPair> added;
  };
  std::optional<Pending> pending;
  std::unordered_set<BidirectedNetwork, NetworkHash> visited;

  for (;;) {
    // Strip.
    while (auto e = first_removable(g, params)) {
      int large_before = 0;
      if (check) large_before = large_count(g, params);
      g.remove(EdgeKind::Speaking, e->first, e->second);
      push(PathAction::RemoveEdge, e->first, e->second, 1);
      if (check) {
        const int large_after = large_count(g, params);
        tally("strip_keeps_large_count", large_after <= large_before,
              "removing " + edge_text(e->first, e->second) + " raised large components " +
                  std::to_string(large_before) + " -> " + std::to_string(large_after));
      }
    }
    if (check) {
      std::vector<LemmaResult> results;
      if (pending) {
        StepSnapshots snaps{&pending->before, &pending->after_step, &g, pending->label,
                            pending->added};
        results = lemma_checks(snaps, params);
      } else {
        results = lemma_state_checks(g, params);
      }
      for (const auto& r : results) {
        tally(r.lemma, r.pass,
              r.detail.empty() ? "after step " + std::to_string(pending ? pending->label : 1)
                               : r.detail);
      }
      for (auto [u, v] : cert.retired_edges) {
        const bool ok = g.has_speaking(u, v) || !addable(g, params, u, v);
        tally("retired_stay_unaddable", ok, "retired edge " + edge_text(u, v) + " became addable again");
      }
    }
    pending.reset();

    // Stable: done.
    if (!any_addable(g, params)) break;
    if (!visited.insert(g).second) {
      throw ValidationError("convergence path revisited a state at iteration " +
                            std::to_string(cert.iterations));
    }
    ++cert.iterations;

    // Merge.
    const ComponentGraph cg = condense(g, params);
    const Choice choice = choose(g, params, cg);
    if (choice.label == 0) ++cert.fallback_moves;
    Pending p{g, g, choice.label, choice.edges};
    for (auto [u, v] : choice.edges) {
      if (check) {
        tally("addable", addable(g, params, u, v),
              "designated edge " + edge_text(u, v) + " is not addable");
      }
      g.add(EdgeKind::Speaking, u, v);
      push(PathAction::AddEdge, u, v, choice.label);
    }
    p.after_step = g;
    if (choice.label == 8) {
      cert.retired_edges.push_back(choice.edges.front());
      cert.bridges.push_back(*choice.bridge);
    }
    pending = std::move(p);
  }
  cert.final = g;
  return cert;
}

CertificateCheck validate_certificate(const PathCertificate& cert) {
  CertificateCheck result;
  BidirectedNetwork g = cert.initial;
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    const PathMove& m = cert.moves[i];
    const bool adding = m.action == PathAction::AddEdge;
    if (m.u < 0 || m.v < 0 || m.u >= g.size() || m.v >= g.size() || m.u == m.v) {
      return {false, "move " + std::to_string(i) + " has invalid endpoints"};
    }
    const Classification cls = classify(g, cert.params, kAll, EdgeKind::Speaking, m.u, m.v);
    const Classification want = adding ? Classification::Addable : Classification::Removable;
    if (cls != want) {
      return {false, "move " + std::to_string(i) + " " + edge_text(m.u, m.v) + " is " +
                         to_string(cls) + ", expected " + to_string(want)};
    }
    g.set(EdgeKind::Speaking, m.u, m.v, adding);
  }
  if (!(g == cert.final)) return {false, "replay does not reproduce the final network"};
  if (!no_moves_available(g, cert.params, kAll)) return {false, "final network is not stable"};
  return result;
}

}  // namespace infonet

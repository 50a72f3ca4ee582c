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

#include <sstream>
#include <string>

#include "doctest.h"

#include "infonet/document.hpp"
#include "infonet/dot.hpp"
#include "infonet/dynamics.hpp"
#include "infonet/equilibrium.hpp"
#include "infonet/error.hpp"
#include "infonet/generators.hpp"
#include "infonet/metrics.hpp"
#include "infonet/structure_search.hpp"

using namespace infonet;

namespace {

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

int count_of(const std::string& text, const std::string& part) {
  int count = 0;
  for (std::size_t at = text.find(part); at != std::string::npos; at = text.find(part, at + 1))
    ++count;
  return count;
}

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

const char* kMinimal = R"({"n": 3, "k": "inf", "c_s": "1", "c_l": "1", "mode": "bidirected",
  "speaking": [[0,1]], "listening": [[1,0]]})";

BidirectedNetwork complete_network(int n) {
  BidirectedNetwork net(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) net.add_complete(u, v);
  return net;
}

}  // namespace

TEST_CASE("documents round trip for generator outputs") {
  const Params b = Params::bidirected(Horizon::bounded(3), Rational(3, 2), Rational(1, 3));
  const Params d = Params::directed(Horizon::infinite(), Rational(5, 2));
  std::vector<NetworkDocument> docs = {
      {empty_network(4), b, {}, Json::object()},
      {cycle_network(5, true), b, {}, Json{{"generator", "cycle"}}},
      {balanced_flower(26, 10).net, d, {}, Json::object()},
      {unbalanced_flower(11, 6).net, d, {}, Json::object()},
      {kautz_network(2, 3, true).net, b, {}, Json::object()},
      {random_network(9, 0.3, 0.4, 8), b, block_targets({0, 0, 0, 0, 1, 1, 1, 1, 1}),
       Json::object()},
  };
  for (const NetworkDocument& doc : docs) {
    const std::string text = emit_document(doc);
    CHECK(text.back() == '\n');
    const NetworkDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(emit_document(back) == text);
  }
}

TEST_CASE("document schema errors") {
  CHECK_NOTHROW(parse_document(kMinimal));
  const std::string loop = R"({"n": 3, "k": 2, "c_s": "1", "c_l": "1", "mode": "bidirected",
    "speaking": [[0,0]], "listening": []})";
  CHECK(contains(error_of(loop), "/speaking/0"));
  CHECK(contains(error_of(loop), "self-loop"));

  const std::string dup = R"({"n": 3, "k": 2, "c_s": "1", "c_l": "1", "mode": "bidirected",
    "speaking": [[0,1],[0,1]], "listening": []})";
  CHECK(contains(error_of(dup), "/speaking/1"));

  const std::string extra = R"({"n": 3, "k": 2, "c_s": "1", "c_l": "1", "mode": "bidirected",
    "speaking": [], "listening": [], "colour": 1})";
  CHECK(contains(error_of(extra), "/colour"));

  const std::string range = R"({"n": 3, "k": 2, "c_s": "1", "c_l": "1", "mode": "bidirected",
    "speaking": [[0,5]], "listening": []})";
  CHECK(contains(error_of(range), "/speaking/0"));

  const std::string bad_k = R"({"n": 3, "k": 0, "c_s": "1", "c_l": "1", "mode": "bidirected",
    "speaking": [], "listening": []})";
  CHECK(contains(error_of(bad_k), "/k"));

  const std::string numeric_cost = R"({"n": 3, "k": 2, "c_s": 1.5, "c_l": "1",
    "mode": "bidirected", "speaking": [], "listening": []})";
  CHECK(contains(error_of(numeric_cost), "/c_s"));

  const std::string self_target = R"({"n": 3, "k": 2, "c_s": "1", "c_l": "1",
    "mode": "bidirected", "speaking": [], "listening": [], "targets_s": {"1": [1]}})";
  CHECK(contains(error_of(self_target), "/targets_s/1/0"));

  const std::string syntax = "{\"n\": 3,, }";
  CHECK(contains(error_of(syntax), "byte"));
  CHECK_THROWS_AS(parse_document("[1, 2]"), ValidationError);
}

TEST_CASE("decimal and fractional costs parse exactly") {
  const NetworkDocument a = parse_document(R"({"n": 2, "k": 2, "c_s": "1.5", "c_l": "0",
    "mode": "directed", "speaking": [], "listening": []})");
  CHECK(a.params.k.value() == 2);
  CHECK(a.params.c_s == Rational(3, 2));
  CHECK(a.params.c_l == Rational(0));
  CHECK(a.params.mode == Mode::DirectedReduced);
  const NetworkDocument b = parse_document(R"({"n": 2, "k": "inf", "c_s": "3/2", "c_l": "2/3",
    "mode": "bidirected", "speaking": [], "listening": []})");
  CHECK(b.params.c_s == Rational(3, 2));
  CHECK(b.params.c_l == Rational(2, 3));
  CHECK(contains(emit_document(b), "\"c_l\": \"2/3\""));
}

TEST_CASE("dot export") {
  const std::string empty = to_dot(empty_network(2), Mode::Bidirected);
  CHECK(count_of(empty, " -> ") == 0);
  CHECK(contains(empty, "  0;\n  1;\n"));

  const std::string cycle = to_dot(cycle_network(3, false), Mode::DirectedReduced);
  CHECK(count_of(cycle, " -> ") == 3);
  CHECK(cycle.find("0 -> 1") < cycle.find("1 -> 2"));
  CHECK(cycle.find("1 -> 2") < cycle.find("2 -> 0"));

  const BidirectedNetwork lifted = cycle_network(4, true);
  const Params p = Params::bidirected(Horizon::infinite(), Rational(1), Rational(1));
  const std::string annotated = to_dot(lifted, Mode::Bidirected, DotAnnotation{p, {}});
  CHECK(count_of(annotated, "color=red") == 0);
  CHECK(count_of(annotated, "color=green") == 0);
  CHECK(count_of(annotated, "style=dotted") == 4);

  BidirectedNetwork dead(3);
  dead.add(EdgeKind::Speaking, 0, 1);
  const Params d = Params::directed(Horizon::infinite(), Rational(1, 2));
  const std::string marks = to_dot(dead, Mode::DirectedReduced, DotAnnotation{d, {}});
  CHECK(count_of(marks, "color=green") > 0);
  CHECK(count_of(marks, "style=dashed") == count_of(marks, "color=green"));
  const std::string red = to_dot(dead, Mode::Bidirected,
                                 DotAnnotation{Params::bidirected(Horizon::infinite(),
                                                                  Rational(1), Rational(1)),
                                               {}});
  CHECK(count_of(red, "color=red") == 1);

  const BidirectedNetwork r = random_network(10, 0.3, 0.3, 12);
  CHECK(to_dot(r, Mode::Bidirected, DotAnnotation{p, {}}) ==
        to_dot(r, Mode::Bidirected, DotAnnotation{p, {}}));
}

TEST_CASE("metrics examples") {
  const Params p = Params::bidirected(Horizon::infinite(), Rational(1), Rational(1));
  const StructureMetrics full = metrics(complete_network(4), p);
  CHECK(full.clustering == Rational(1));
  CHECK(full.triangles == 4);
  CHECK(full.reciprocity == Rational(1));
  CHECK(full.component_count == 1);

  BidirectedNetwork star(4);
  for (int leaf = 1; leaf < 4; ++leaf) {
    star.add_complete(0, leaf);
    star.add_complete(leaf, 0);
  }
  const StructureMetrics s = metrics(star, p);
  CHECK(s.clustering == Rational(0));
  CHECK(s.open_triples == 3);
  CHECK(s.triangles == 0);

  BidirectedNetwork cliques(8);
  for (int b = 0; b < 2; ++b)
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v)
        if (u != v) cliques.add_complete(4 * b + u, 4 * b + v);
  const std::vector<int> blocks = {0, 0, 0, 0, 1, 1, 1, 1};
  const StructureMetrics c = metrics(cliques, p, blocks);
  REQUIRE(c.polarization);
  CHECK(*c.polarization == Rational(0));
  CHECK(c.components == Histogram{{4, 2}});
  CHECK(partition_from_targets(block_targets(blocks), 8) == blocks);
  CHECK_FALSE(partition_from_targets(TargetSets(), 8).has_value());

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BidirectedNetwork net = random_network(9, 0.3, 0.5, seed);
    const StructureMetrics m = metrics(net, p);
    CHECK(m.clustering >= Rational(0));
    CHECK(m.clustering <= Rational(1));
    int sizes = 0, outs = 0, ins = 0;
    for (auto [size, count] : m.components) sizes += size * count;
    for (auto [deg, count] : m.out_speaking) outs += deg * count;
    for (auto [deg, count] : m.in_listening) ins += deg * count;
    CHECK(sizes == 9);
    CHECK(outs == m.speaking_edges);
    CHECK(ins == m.listening_edges);
  }
}

TEST_CASE("clustering falls as open wedges are attached") {
  // A live triangle plus d pendant vertices on vertex 0: one triangle and
  // C(d+2, 2) + 2 connected triples.
  const Params p = Params::bidirected(Horizon::infinite(), Rational(1), Rational(1));
  Rational previous(2);
  for (int d = 1; d <= 10; ++d) {
    BidirectedNetwork net(3 + d);
    net.add_complete(0, 1);
    net.add_complete(1, 2);
    net.add_complete(2, 0);
    for (int i = 0; i < d; ++i) net.add_complete(0, 3 + i);
    const Rational c = metrics(net, p).clustering;
    CHECK(c == Rational(3, (d + 2) * (d + 1) / 2 + 2));
    CHECK(c < previous);
    previous = c;
  }
}

TEST_CASE("structure predicates and search") {
  const Params p = Params::directed(Horizon::bounded(2), Rational(3, 2));
  StructureBudget none;
  none.networks = 0;
  CHECK_FALSE(structure_search(StructureFamily::OpenClosedTriangle, p, none).has_value());

  StructureBudget budget;
  budget.networks = 2000;
  const auto hit = structure_search(StructureFamily::OpenClosedTriangle, p, budget);
  REQUIRE(hit.has_value());
  CHECK(is_stable(hit->net, p, hit->targets).stable);
  CHECK(has_structure(StructureFamily::OpenClosedTriangle, hit->net, p, {}));
  const StructureMetrics m = metrics(hit->net, p);
  CHECK(m.triangles > 0);
  CHECK(m.open_triples > 0);
  CHECK(hit->candidates >= 1);
  CHECK(hit->candidates <= budget.networks);

  const Params b = Params::bidirected(Horizon::bounded(1), Rational(1, 2), Rational(1, 2));
  const auto polar = structure_search(StructureFamily::Polarized, b, budget);
  REQUIRE(polar.has_value());
  CHECK(is_stable(polar->net, b, polar->targets).stable);
  const StructureMetrics pm = metrics(polar->net, b, polar->partition);
  REQUIRE(pm.polarization);
  CHECK(*pm.polarization < Rational(1, 10));

  // Triangle alone: closed but no open triple.
  CHECK_FALSE(has_structure(StructureFamily::OpenClosedTriangle, cycle_network(3, false),
                            Params::directed(Horizon::bounded(2), Rational(1)), {}));
  CHECK(parse_family("broadcast") == StructureFamily::Broadcast);
  CHECK(to_string(StructureFamily::Polarized) == "polarized");
  CHECK_THROWS_AS(parse_family("tree"), ArgumentError);
}

TEST_CASE("trace text round trip") {
  const Params p = Params::bidirected(Horizon::bounded(2), Rational(1, 2), Rational(1, 2));
  RunOptions opt;
  opt.record_no_change = false;
  const Trace t = run(random_network(6, 0.3, 0.3, 3), p, {}, 3, opt);
  const std::string text = trace_to_string(t);
  std::istringstream in(text);
  const Trace back = read_trace(in);
  CHECK(back.moves == t.moves);
  CHECK(back.final == t.final);
  CHECK(back.seed == t.seed);
  CHECK(back.converged == t.converged);
  CHECK(trace_to_string(back) == text);

  std::string tampered = text;
  const auto last = tampered.rfind("add_");
  if (last != std::string::npos) {
    tampered.replace(last, 4, "rem_");
    std::istringstream bad(tampered);
    CHECK_THROWS_AS(read_trace(bad), ValidationError);
  }
}

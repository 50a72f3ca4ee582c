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

// Command-line front end: generate, run, check, path, census, metrics,
// export-dot and search.
//
// Exit codes: 0 success, 1 usage or input error, 2 capacity guard,
// 3 assertion failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "infonet/convergence_path.hpp"
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

constexpr int kUsage = 1;
constexpr int kCapacity = 2;
constexpr int kAssertion = 3;

struct AssertionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string k, cs, cl, mode;
  std::string format = "json";
};

// Flags given on the command line win over the document's parameters.
Params apply_overrides(Params p, const Globals& g) {
  if (!g.mode.empty()) p.mode = parse_mode(g.mode);
  if (!g.k.empty()) p.k = Horizon::parse(g.k);
  if (!g.cs.empty()) p.c_s = parse_rational(g.cs);
  if (!g.cl.empty()) p.c_l = parse_rational(g.cl);
  if (p.mode == Mode::DirectedReduced && g.cl.empty()) p.c_l = Rational(0);
  p.validate();
  return p;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

Json histogram_json(const Histogram& h) {
  Json j = Json::object();
  for (auto [key, count] : h) j[std::to_string(key)] = count;
  return j;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stoi(cell));
  return out;
}

Json stability_json(const StabilityReport& r) {
  Json j = Json::object();
  j["stable"] = r.stable;
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"kind", to_string(x.kind)}, {"u", x.u}, {"v", x.v},
                 {"classification", to_string(x.classification)}});
  }
  j["witnesses"] = w;
  if (r.bi_pairwise_checked) {
    j["bi_pairwise"] = r.bi_pairwise;
    if (r.bi_pairwise_witness) {
      const auto& d = *r.bi_pairwise_witness;
      j["bi_pairwise_witness"] = {{"u", d.u},
                                  {"v", d.v},
                                  {"u_before", format_rational(d.u_before)},
                                  {"u_after", format_rational(d.u_after)},
                                  {"v_before", format_rational(d.v_before)},
                                  {"v_after", format_rational(d.v_after)}};
    }
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"infonet: speaking/listening network formation game"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--k", g.k, "horizon (positive integer or inf)");
  app.add_option("--cs", g.cs, "speaking edge cost (decimal or p/q)");
  app.add_option("--cl", g.cl, "listening edge cost (decimal or p/q)");
  app.add_option("--mode", g.mode, "bidirected | directed");
  app.add_option("--format", g.format, "json | csv | dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}));

  // generate
  auto* gen = app.add_subcommand("generate", "build a named network");
  std::string family, gen_out = "-";
  int gen_n = 0, gen_k = 0, gen_d = 2, gen_D = 2;
  double p_s = 0.3, p_l = 0.3;
  std::uint64_t gen_seed = 1;
  bool lifted = false;
  gen->add_option("family", family, "empty|cycle|flower|unbalanced-flower|kautz|random")
      ->required();
  gen->add_option("--n", gen_n, "vertices");
  gen->add_option("--petal-k", gen_k, "flower construction k (defaults to --k)");
  gen->add_option("--d", gen_d, "Kautz out-degree");
  gen->add_option("--D", gen_D, "Kautz string length");
  gen->add_option("--p-s", p_s, "random: speaking probability");
  gen->add_option("--p-l", p_l, "random: listening probability");
  gen->add_option("--seed", gen_seed, "random: seed");
  gen->add_flag("--lifted", lifted, "add the return listening edge of every speaking edge");
  gen->add_option("-o,--output", gen_out, "output document");

  // run
  auto* run_cmd = app.add_subcommand("run", "edge dynamics to a fixed point");
  std::string in_path, out_path = "-";
  std::uint64_t seed = 1, max_steps = 0, scan = 0;
  bool record_all = false;
  run_cmd->add_option("-i,--input", in_path)->required();
  run_cmd->add_option("--seed", seed);
  run_cmd->add_option("--max-steps", max_steps, "0 = 50 n^6");
  run_cmd->add_option("--scan", scan, "full-scan interval, 0 = 2 n (n-1)");
  run_cmd->add_flag("--record-no-change", record_all, "also write non-mutating samples");
  run_cmd->add_option("-o,--output", out_path, "trace file, or final document with --format json");

  // check
  auto* check = app.add_subcommand("check", "stability report");
  bool nash = false, bi = false, expect_stable = false;
  check->add_option("-i,--input", in_path)->required();
  check->add_flag("--nash-oracle", nash, "also run the brute-force Nash oracle");
  check->add_flag("--bi-pairwise", bi, "also test joint deviations");
  check->add_flag("--expect-stable", expect_stable, "exit 3 unless stable");

  // path
  auto* path_cmd = app.add_subcommand("path", "constructive path to a stable network");
  bool assert_lemmas = false;
  path_cmd->add_option("-i,--input", in_path)->required();
  path_cmd->add_flag("--assert-lemmas", assert_lemmas);
  path_cmd->add_option("-o,--output", out_path);

  // census
  auto* census_cmd = app.add_subcommand("census", "exhaustive small-n census");
  int census_n = 3;
  std::string sweep;
  census_cmd->add_option("--n", census_n);
  census_cmd->add_option("--sweep", sweep, "CSV with columns k,c_s,c_l");
  census_cmd->add_option("-o,--output", out_path);

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "structural metrics");
  std::string partition_text;
  metrics_cmd->add_option("-i,--input", in_path)->required();
  metrics_cmd->add_option("--partition", partition_text, "comma-separated block per vertex");

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  bool annotate = false;
  dot_cmd->add_option("-i,--input", in_path)->required();
  dot_cmd->add_flag("--annotate", annotate, "colour addable/removable edges");
  dot_cmd->add_option("-o,--output", out_path);

  // search
  auto* search_cmd = app.add_subcommand("search", "look for a stable network with a structure");
  std::string search_family;
  StructureBudget budget;
  search_cmd->add_option("family", search_family, "open-closed-triangle|polarized|broadcast")
      ->required();
  search_cmd->add_option("--budget", budget.networks);
  search_cmd->add_option("--seed", budget.seed);
  search_cmd->add_option("--n-min", budget.n_min);
  search_cmd->add_option("--n-max", budget.n_max);
  search_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) {
      NetworkDocument doc;
      Json meta = Json::object();
      meta["generator"] = family;
      Params base;
      if (family == "flower" || family == "unbalanced-flower") {
        const int fk = gen_k ? gen_k : (g.k.empty() ? 0 : Horizon::parse(g.k).value());
        if (fk == 0) throw ArgumentError("flower needs --k or --petal-k");
        Flower f = family == "flower" ? balanced_flower(gen_n, fk, lifted)
                                      : unbalanced_flower(gen_n, fk, lifted);
        doc.net = f.net;
        meta["n"] = gen_n;
        meta["k"] = fk;
        meta["petal_len"] = f.spec.petal_len;
        meta["q"] = f.spec.q;
        meta["center"] = f.spec.center;
        meta["balanced"] = f.spec.balanced;
        meta["petals"] = f.spec.petals;
        base = Params{Horizon::bounded(fk), Rational(1), Rational(0),
                      lifted ? Mode::Bidirected : Mode::DirectedReduced};
      } else if (family == "kautz") {
        Kautz kz = kautz_network(gen_d, gen_D, lifted);
        doc.net = kz.net;
        meta["d"] = gen_d;
        meta["D"] = gen_D;
        meta["n"] = kz.spec.n;
        base = Params{Horizon::bounded(gen_D), Rational(1), Rational(0),
                      lifted ? Mode::Bidirected : Mode::DirectedReduced};
      } else if (family == "cycle") {
        doc.net = cycle_network(gen_n, lifted);
        meta["n"] = gen_n;
        meta["lifted"] = lifted;
        base = Params{Horizon::infinite(), Rational(1), lifted ? Rational(1) : Rational(0),
                      lifted ? Mode::Bidirected : Mode::DirectedReduced};
      } else if (family == "empty") {
        doc.net = empty_network(gen_n);
        meta["n"] = gen_n;
        base = Params{Horizon::infinite(), Rational(1), Rational(1), Mode::Bidirected};
      } else if (family == "random") {
        if (!(p_s >= 0 && p_s <= 1 && p_l >= 0 && p_l <= 1)) {
          throw ArgumentError("probabilities must lie in [0, 1]");
        }
        doc.net = random_network(gen_n, p_s, p_l, gen_seed);
        meta["n"] = gen_n;
        meta["p_s"] = p_s;
        meta["p_l"] = p_l;
        meta["seed"] = gen_seed;
        meta["rng"] = SplitMix64::kName;
        base = Params{Horizon::infinite(), Rational(1, 2), Rational(1, 2), Mode::Bidirected};
      } else {
        throw ArgumentError("unknown family: " + family);
      }
      doc.params = apply_overrides(base, g);
      doc.meta = meta;
      emit(emit_document(doc), gen_out);
      return 0;
    }

    if (*search_cmd) {
      Params p = apply_overrides(
          Params{Horizon::bounded(2), Rational(3, 2), Rational(0), Mode::DirectedReduced}, g);
      auto hit = structure_search(parse_family(search_family), p, budget);
      if (!hit) {
        std::cout << Json{{"found", false}, {"budget", budget.networks}}.dump(2) << "\n";
        return 0;
      }
      NetworkDocument doc{hit->net, p, hit->targets, Json::object()};
      doc.meta["search"] = search_family;
      doc.meta["candidates"] = hit->candidates;
      doc.meta["seed"] = hit->seed;
      emit(emit_document(doc), out_path);
      return 0;
    }

    if (*census_cmd) {
      std::vector<Params> sweeps;
      const Params base = apply_overrides(
          Params{Horizon::infinite(), Rational(1, 2), Rational(1, 2), Mode::Bidirected}, g);
      if (sweep.empty()) {
        sweeps.push_back(base);
      } else {
        std::ifstream in(sweep);
        if (!in) throw ArgumentError("cannot open " + sweep);
        std::string line;
        std::getline(in, line);
        if (line != "k,c_s,c_l") throw ArgumentError("sweep header must be k,c_s,c_l");
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          std::stringstream ss(line);
          std::string k, cs, cl;
          std::getline(ss, k, ',');
          std::getline(ss, cs, ',');
          std::getline(ss, cl, ',');
          Params p = base;
          p.k = Horizon::parse(k);
          p.c_s = parse_rational(cs);
          p.c_l = parse_rational(cl);
          p.validate();
          sweeps.push_back(p);
        }
      }
      std::ostringstream out;
      out << "k,c_s,c_l,mode,bitmask,welfare,stable,bi_pairwise,complete,symmetric\n";
      for (const Params& p : sweeps) {
        for (const CensusRow& row : census(census_n, p, TargetSets())) {
          out << p.k.to_string() << "," << format_rational(p.c_s) << "," << format_rational(p.c_l)
              << "," << to_string(p.mode) << "," << row.mask << "," << format_rational(row.welfare)
              << "," << row.stable << "," << row.bi_pairwise << "," << row.complete << ","
              << row.symmetric << "\n";
        }
      }
      emit(out.str(), out_path);
      return 0;
    }

    NetworkDocument doc = read_document_file(in_path);
    doc.params = apply_overrides(doc.params, g);

    if (*run_cmd) {
      RunOptions options;
      options.max_steps = max_steps;
      options.scan_interval = scan;
      options.record_no_change = record_all;
      const Trace trace = run(doc.net, doc.params, doc.targets, seed, options);
      if (g.format == "json") {
        NetworkDocument final_doc = doc;
        final_doc.net = trace.final;
        final_doc.meta["run"] = {{"seed", seed}, {"rng", trace.generator},
                                 {"converged", trace.converged},
                                 {"steps_sampled", trace.steps_sampled}};
        emit(emit_document(final_doc), out_path);
      } else {
        emit(trace_to_string(trace), out_path);
      }
      std::cerr << "converged=" << (trace.converged ? "true" : "false")
                << " steps_sampled=" << trace.steps_sampled << "\n";
      return 0;
    }

    if (*check) {
      StabilityReport report = bi ? is_bi_pairwise_stable(doc.net, doc.params, doc.targets)
                                  : is_stable(doc.net, doc.params, doc.targets);
      Json j = stability_json(report);
      j["all_complete"] = all_complete(doc.net);
      j["symmetric"] = check_symmetric(doc.net, doc.params, doc.targets);
      j["welfare"] = format_rational(welfare(doc.net, doc.params, doc.targets));
      if (nash) j["nash"] = brute_force_nash(doc.net, doc.params, doc.targets);
      std::cout << j.dump(2) << "\n";
      if (expect_stable && !report.stable) throw AssertionFailed("network is not stable");
      return 0;
    }

    if (*path_cmd) {
      PathOptions options;
      options.check_lemmas = true;
      options.assert_lemmas = assert_lemmas;
      const PathCertificate cert = construct_path(doc.net, doc.params, options);
      const CertificateCheck valid = validate_certificate(cert);
      emit(certificate_to_string(cert), out_path);
      if (!valid.valid) throw AssertionFailed("certificate invalid: " + valid.error);
      if (assert_lemmas && !cert.lemmas_passed()) throw AssertionFailed("lemma check failed");
      return 0;
    }

    if (*metrics_cmd) {
      std::optional<std::vector<int>> partition;
      if (!partition_text.empty()) {
        partition = parse_partition(partition_text);
      } else {
        partition = partition_from_targets(doc.targets, doc.net.size());
      }
      const StructureMetrics m = metrics(doc.net, doc.params, partition);
      Json j = Json::object();
      j["n"] = m.n;
      j["speaking_edges"] = m.speaking_edges;
      j["listening_edges"] = m.listening_edges;
      j["live_pairs"] = m.live_pairs;
      j["triangles"] = m.triangles;
      j["open_triples"] = m.open_triples;
      j["clustering"] = format_rational(m.clustering);
      j["components"] = m.component_count;
      j["largest_component"] = m.largest_component;
      j["component_sizes"] = histogram_json(m.components);
      j["reciprocity"] = format_rational(m.reciprocity);
      j["out_speaking"] = histogram_json(m.out_speaking);
      j["in_speaking"] = histogram_json(m.in_speaking);
      j["out_listening"] = histogram_json(m.out_listening);
      j["in_listening"] = histogram_json(m.in_listening);
      if (m.polarization) j["polarization"] = format_rational(*m.polarization);
      j["speaking_diameter"] = speaking_diameter(doc.net);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*dot_cmd) {
      std::optional<DotAnnotation> annotation;
      if (annotate) annotation = DotAnnotation{doc.params, doc.targets};
      emit(to_dot(doc.net, doc.params.mode, annotation), out_path);
      return 0;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const LemmaViolation& e) {
    std::cerr << "assertion: " << e.what() << "\n";
    return kAssertion;
  } catch (const AssertionFailed& e) {
    std::cerr << "assertion: " << e.what() << "\n";
    return kAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

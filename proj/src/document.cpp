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

#include "infonet/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "infonet/error.hpp"

namespace infonet {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

void only_fields(const Json& obj, std::initializer_list<const char*> keys,
                 const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool known = std::any_of(keys.begin(), keys.end(),
                                   [&](const char* k) { return it.key() == k; });
    if (!known) fail(where + "/" + it.key(), "unknown field");
  }
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) fail(where, "integer out of range");
  return static_cast<int>(v);
}

Rational as_cost(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a decimal or p/q string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Horizon as_horizon(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") fail(where, "expected \"inf\" or a positive integer");
    return Horizon::infinite();
  }
  const int k = as_int(j, where);
  if (k < 1) fail(where, "k must be at least 1");
  return Horizon::bounded(k);
}

Json horizon_json(const Horizon& k) {
  if (k.is_infinite()) return "inf";
  return k.value();
}

void read_edges(const Json& list, EdgeKind kind, BidirectedNetwork& net, const std::string& where) {
  if (!list.is_array()) fail(where, "expected an array of [u, v] pairs");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const Json& e = list[i];
    if (!e.is_array() || e.size() != 2) fail(at, "expected [u, v]");
    const int u = as_int(e[0], at + "/0");
    const int v = as_int(e[1], at + "/1");
    if (u < 0 || u >= net.size()) fail(at + "/0", "vertex out of range");
    if (v < 0 || v >= net.size()) fail(at + "/1", "vertex out of range");
    if (u == v) fail(at, "self-loop");
    if (!net.add(kind, u, v)) fail(at, "duplicate edge");
  }
}

Json edges_json(const BidirectedNetwork& net, EdgeKind kind) {
  Json list = Json::array();
  for (auto [u, v] : net.edges(kind)) list.push_back(Json::array({u, v}));
  return list;
}

void read_targets(const Json& obj, int n, bool speaking, TargetSets& targets,
                  const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object keyed by vertex id");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string at = where + "/" + it.key();
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(it.key(), &used);
      if (used != it.key().size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= n) fail(at, "key is not a vertex id");
    if (!it.value().is_array()) fail(at, "expected an array of vertices");
    VertexSet set(n);
    for (std::size_t i = 0; i < it.value().size(); ++i) {
      const std::string item = at + "/" + std::to_string(i);
      const int w = as_int(it.value()[i], item);
      if (w < 0 || w >= n) fail(item, "vertex out of range");
      if (w == v) fail(item, "an agent cannot target itself");
      if (set.contains(w)) fail(item, "duplicate target");
      set.insert(w);
    }
    if (speaking) {
      targets.set_speaking(v, std::move(set));
    } else {
      targets.set_listening(v, std::move(set));
    }
  }
}

Json targets_json(const TargetSets& targets, int n, bool speaking) {
  Json obj = Json::object();
  for (Vertex v = 0; v < n; ++v) {
    const auto& set = speaking ? targets.speaking(v) : targets.listening(v);
    if (set) obj[std::to_string(v)] = set->to_vector();
  }
  return obj;
}

bool has_targets(const TargetSets& targets, int n, bool speaking) {
  for (Vertex v = 0; v < n; ++v) {
    if (speaking ? targets.speaking(v).has_value() : targets.listening(v).has_value()) return true;
  }
  return false;
}

std::string kind_text(PathAction action) {
  return action == PathAction::AddEdge ? "add_s" : "remove_s";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::int64_t parse_cell(const std::string& cell, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(cell, &used);
    if (used == cell.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("line " + std::to_string(line) + ": bad integer \"" + cell + "\"");
}

Json parse_header(std::istream& in, const std::string& format) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("line 1: missing JSON header");
  Json header;
  try {
    header = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ValidationError("line 1: " + std::string(e.what()));
  }
  if (!header.is_object() || header.value("format", "") != format) {
    throw ValidationError("line 1: expected format \"" + format + "\"");
  }
  return header;
}

std::vector<VertexPair> pairs_from_json(const Json& j, const std::string& where) {
  std::vector<VertexPair> out;
  if (!j.is_array()) fail(where, "expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) fail(at, "expected [u, v]");
    out.emplace_back(as_int(j[i][0], at), as_int(j[i][1], at));
  }
  return out;
}

Json pairs_json(const std::vector<VertexPair>& pairs) {
  Json list = Json::array();
  for (auto [u, v] : pairs) list.push_back(Json::array({u, v}));
  return list;
}

}  // namespace

Json params_to_json(const Params& params) {
  Json j = Json::object();
  j["k"] = horizon_json(params.k);
  j["c_s"] = format_rational(params.c_s);
  j["c_l"] = format_rational(params.c_l);
  j["mode"] = to_string(params.mode);
  return j;
}

Params params_from_json(const Json& json, const std::string& where) {
  Params p;
  p.k = as_horizon(field(json, "k", where), where + "/k");
  p.c_s = as_cost(field(json, "c_s", where), where + "/c_s");
  p.c_l = as_cost(field(json, "c_l", where), where + "/c_l");
  const Json& mode = field(json, "mode", where);
  if (!mode.is_string()) fail(where + "/mode", "expected a string");
  try {
    p.mode = parse_mode(mode.get<std::string>());
    p.validate();
  } catch (const ArgumentError& e) {
    fail(where + "/mode", e.what());
  }
  return p;
}

NetworkDocument document_from_json(const Json& json) {
  only_fields(json, {"n", "k", "c_s", "c_l", "mode", "speaking", "listening", "targets_s",
                     "targets_l", "meta"},
              "");
  NetworkDocument doc;
  const int n = as_int(field(json, "n", ""), "/n");
  if (n < 1) fail("/n", "n must be at least 1");
  doc.params = params_from_json(json, "");
  doc.net = BidirectedNetwork(n);
  read_edges(field(json, "speaking", ""), EdgeKind::Speaking, doc.net, "/speaking");
  read_edges(field(json, "listening", ""), EdgeKind::Listening, doc.net, "/listening");
  doc.targets = TargetSets(n);
  if (json.contains("targets_s")) read_targets(json["targets_s"], n, true, doc.targets, "/targets_s");
  if (json.contains("targets_l")) read_targets(json["targets_l"], n, false, doc.targets, "/targets_l");
  if (doc.targets.is_all()) doc.targets = TargetSets();
  if (json.contains("meta")) {
    if (!json["meta"].is_object()) fail("/meta", "expected an object");
    doc.meta = json["meta"];
  }
  return doc;
}

NetworkDocument parse_document(const std::string& text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return document_from_json(json);
}

Json document_to_json(const NetworkDocument& doc) {
  const int n = doc.net.size();
  Json j = Json::object();
  j["n"] = n;
  const Json params = params_to_json(doc.params);
  for (auto it = params.begin(); it != params.end(); ++it) j[it.key()] = it.value();
  j["speaking"] = edges_json(doc.net, EdgeKind::Speaking);
  j["listening"] = edges_json(doc.net, EdgeKind::Listening);
  if (has_targets(doc.targets, n, true)) j["targets_s"] = targets_json(doc.targets, n, true);
  if (has_targets(doc.targets, n, false)) j["targets_l"] = targets_json(doc.targets, n, false);
  if (!doc.meta.empty()) j["meta"] = doc.meta;
  return j;
}

std::string emit_document(const NetworkDocument& doc) {
  // Edge pairs stay on one line each.
  const Json j = document_to_json(doc);
  std::string out = "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + Json(it.key()).dump() + ": ";
    if ((it.key() == "speaking" || it.key() == "listening") && !it.value().empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        out += "    " + it.value()[i].dump() + (i + 1 < it.value().size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += it.value().dump();
    }
  }
  out += "\n}\n";
  return out;
}

NetworkDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path);
  out << text;
}

// ---- traces ----

void write_trace(std::ostream& out, const Trace& trace) {
  Json header = Json::object();
  header["format"] = "infonet-trace";
  header["seed"] = trace.seed;
  header["rng"] = trace.generator;
  header["params"] = params_to_json(trace.params);
  header["converged"] = trace.converged;
  header["steps_sampled"] = trace.steps_sampled;
  header["initial"] = document_to_json({trace.initial, trace.params, trace.targets, Json::object()});
  header["final"] = document_to_json({trace.final, trace.params, trace.targets, Json::object()});
  out << header.dump() << "\n";
  out << "step,kind,u,v\n";
  for (const Move& m : trace.moves) {
    out << m.step_index << "," << to_string(m.kind) << "," << m.u << "," << m.v << "\n";
  }
}

std::string trace_to_string(const Trace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

Trace read_trace(std::istream& in) {
  const Json header = parse_header(in, "infonet-trace");
  Trace trace;
  try {
    trace.seed = header.at("seed").get<std::uint64_t>();
    trace.generator = header.at("rng").get<std::string>();
    trace.converged = header.at("converged").get<bool>();
    trace.steps_sampled = header.at("steps_sampled").get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw ValidationError("line 1: " + std::string(e.what()));
  }
  trace.params = params_from_json(field(header, "params", ""), "/params");
  const NetworkDocument initial = document_from_json(field(header, "initial", ""));
  const NetworkDocument final_doc = document_from_json(field(header, "final", ""));
  trace.initial = initial.net;
  trace.targets = initial.targets;
  trace.final = final_doc.net;
  std::string line;
  std::size_t line_no = 2;
  if (!std::getline(in, line) || line != "step,kind,u,v") {
    throw ValidationError("line 2: expected header step,kind,u,v");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 4) throw ValidationError("line " + std::to_string(line_no) + ": 4 columns expected");
    Move m;
    m.step_index = static_cast<std::uint64_t>(parse_cell(cells[0], line_no));
    try {
      m.kind = parse_move_kind(cells[1]);
    } catch (const std::exception& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
    m.u = static_cast<Vertex>(parse_cell(cells[2], line_no));
    m.v = static_cast<Vertex>(parse_cell(cells[3], line_no));
    if (m.kind == MoveKind::AddListening || m.kind == MoveKind::RemoveListening) {
      m.sampled = EdgeKind::Listening;
    }
    trace.moves.push_back(m);
  }
  replay(trace);
  return trace;
}

// ---- certificates ----

void write_certificate(std::ostream& out, const PathCertificate& cert) {
  Json header = Json::object();
  header["format"] = "infonet-path";
  header["params"] = params_to_json(cert.params);
  header["iterations"] = cert.iterations;
  header["fallback_moves"] = cert.fallback_moves;
  header["retired_edges"] = pairs_json(cert.retired_edges);
  header["bridges"] = pairs_json(cert.bridges);
  Json lemmas = Json::object();
  for (const auto& [name, tally] : cert.lemmas) {
    Json t = Json::object();
    t["checked"] = tally.checked;
    t["failed"] = tally.failed;
    if (!tally.first_failure.empty()) t["first_failure"] = tally.first_failure;
    lemmas[name] = t;
  }
  header["lemmas"] = lemmas;
  header["initial"] = document_to_json({cert.initial, cert.params, TargetSets(), Json::object()});
  header["final"] = document_to_json({cert.final, cert.params, TargetSets(), Json::object()});
  out << header.dump() << "\n";
  out << "step,kind,u,v,step_label\n";
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    const PathMove& m = cert.moves[i];
    out << i << "," << kind_text(m.action) << "," << m.u << "," << m.v << "," << m.step_label
        << "\n";
  }
}

std::string certificate_to_string(const PathCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

PathCertificate read_certificate(std::istream& in) {
  const Json header = parse_header(in, "infonet-path");
  PathCertificate cert;
  cert.params = params_from_json(field(header, "params", ""), "/params");
  cert.initial = document_from_json(field(header, "initial", "")).net;
  cert.final = document_from_json(field(header, "final", "")).net;
  cert.retired_edges = pairs_from_json(field(header, "retired_edges", ""), "/retired_edges");
  cert.bridges = pairs_from_json(field(header, "bridges", ""), "/bridges");
  cert.iterations = as_int(field(header, "iterations", ""), "/iterations");
  cert.fallback_moves = as_int(field(header, "fallback_moves", ""), "/fallback_moves");
  const Json& lemmas = field(header, "lemmas", "");
  for (auto it = lemmas.begin(); it != lemmas.end(); ++it) {
    LemmaTally t;
    t.checked = it.value().value("checked", std::uint64_t{0});
    t.failed = it.value().value("failed", std::uint64_t{0});
    t.first_failure = it.value().value("first_failure", std::string());
    cert.lemmas[it.key()] = t;
  }
  std::string line;
  std::size_t line_no = 2;
  if (!std::getline(in, line) || line != "step,kind,u,v,step_label") {
    throw ValidationError("line 2: expected header step,kind,u,v,step_label");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 5) throw ValidationError("line " + std::to_string(line_no) + ": 5 columns expected");
    PathMove m;
    if (cells[1] == "add_s") {
      m.action = PathAction::AddEdge;
    } else if (cells[1] == "remove_s") {
      m.action = PathAction::RemoveEdge;
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown kind " + cells[1]);
    }
    m.u = static_cast<Vertex>(parse_cell(cells[2], line_no));
    m.v = static_cast<Vertex>(parse_cell(cells[3], line_no));
    m.step_label = static_cast<int>(parse_cell(cells[4], line_no));
    cert.moves.push_back(m);
  }
  return cert;
}

}  // namespace infonet

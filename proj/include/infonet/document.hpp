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

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "infonet/convergence_path.hpp"
#include "infonet/dynamics.hpp"
#include "infonet/model.hpp"
#include "infonet/network.hpp"

namespace infonet {

using Json = nlohmann::ordered_json;

// A network together with the game parameters it is evaluated under.
struct NetworkDocument {
  BidirectedNetwork net;
  Params params;
  TargetSets targets;
  Json meta = Json::object();

  friend bool operator==(const NetworkDocument&, const NetworkDocument&) = default;
};

// Throws ValidationError. Syntax errors carry the byte offset; schema errors
// carry the JSON pointer of the offending value.
NetworkDocument parse_document(const std::string& text);
NetworkDocument document_from_json(const Json& json);

// Canonical form: fixed key order, sorted edge lists, two-space indent and a
// trailing newline.
std::string emit_document(const NetworkDocument& doc);
Json document_to_json(const NetworkDocument& doc);

Json params_to_json(const Params& params);
Params params_from_json(const Json& json, const std::string& where = "");

NetworkDocument read_document_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Trace file: one JSON header line, then "step,kind,u,v" CSV rows.
void write_trace(std::ostream& out, const Trace& trace);
std::string trace_to_string(const Trace& trace);
// Rebuilds the trace and checks that replaying the rows gives the final
// network stored in the header.
Trace read_trace(std::istream& in);

// Certificate file: JSON header line, then "step,kind,u,v,step_label" rows.
void write_certificate(std::ostream& out, const PathCertificate& cert);
std::string certificate_to_string(const PathCertificate& cert);
PathCertificate read_certificate(std::istream& in);

}  // namespace infonet

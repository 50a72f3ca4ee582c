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

#include "infonet/dot.hpp"

#include <sstream>

#include "infonet/dynamics.hpp"

namespace infonet {

std::string to_dot(const BidirectedNetwork& net, Mode mode,
                   const std::optional<DotAnnotation>& annotation) {
  std::ostringstream out;
  out << "digraph infonet {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < net.size(); ++v) out << "  " << v << ";\n";
  const int n = net.size();
  for (EdgeKind kind : {EdgeKind::Speaking, EdgeKind::Listening}) {
    if (kind == EdgeKind::Listening && mode == Mode::DirectedReduced) continue;
    const char* style = kind == EdgeKind::Speaking ? "solid" : "dotted";
    const char* label = kind == EdgeKind::Speaking ? "s" : "l";
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const bool present = net.has(kind, u, v);
        const char* color = "black";
        if (annotation) {
          const auto cls = classify(net, annotation->params, annotation->targets, kind, u, v);
          if (cls == Classification::Removable) color = "red";
          if (cls == Classification::Addable) color = "green";
        }
        if (!present && std::string(color) != "green") continue;
        out << "  " << u << " -> " << v << " [kind=" << label << ", style="
            << (present ? style : "dashed") << ", color=" << color << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace infonet

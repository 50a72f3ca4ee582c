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

#include <optional>
#include <string>

#include "infonet/model.hpp"
#include "infonet/network.hpp"

namespace infonet {

struct DotAnnotation {
  Params params;
  TargetSets targets;
};

// Deterministic Graphviz text. Speaking edges are solid, listening edges
// dotted. With an annotation, removable edges are red and absent addable
// edges are drawn dashed in green.
std::string to_dot(const BidirectedNetwork& net, Mode mode,
                   const std::optional<DotAnnotation>& annotation = std::nullopt);

}  // namespace infonet

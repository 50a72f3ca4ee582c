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

#include <stdexcept>
#include <string>

namespace infonet {

// Bad vertex ids, out-of-range parameters, malformed constructor arguments.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to enumerate a space above its size guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A trace, certificate or document failed structural validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked predicate failed while building a convergence certificate.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace infonet

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

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace infonet {

// Costs and utilities are exact so strict comparisons at the cost boundary
// are deterministic.
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "1.5", "3/2". Decimals are converted exactly. Negative values
// are rejected unless allow_negative is set.
Rational parse_rational(std::string_view text, bool allow_negative = false);

// Terminating decimals are printed as decimals ("1.5"), everything else as
// "p/q". parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

}  // namespace infonet

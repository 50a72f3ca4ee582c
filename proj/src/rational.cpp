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

#include "infonet/rational.hpp"

#include <cctype>
#include <limits>

#include "infonet/error.hpp"

namespace infonet {

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ArgumentError("malformed number \"" + std::string(whole) + "\"");
  std::int64_t value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ArgumentError("malformed number \"" + std::string(whole) + "\"");
    }
    if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
      throw ArgumentError("number too large \"" + std::string(whole) + "\"");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text, bool allow_negative) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_digits(text.substr(0, slash), whole);
    const auto den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw ArgumentError("zero denominator in \"" + std::string(whole) + "\"");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (frac_part.size() > 17) {
      throw ArgumentError("too many decimal places in \"" + std::string(whole) + "\"");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const auto ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
    const auto fp = frac_part.empty() ? 0 : parse_digits(frac_part, whole);
    if (int_part.empty() && frac_part.empty()) {
      throw ArgumentError("malformed number \"" + std::string(whole) + "\"");
    }
    value = Rational(ip) + Rational(fp, den);
  } else {
    value = Rational(parse_digits(text, whole));
  }
  if (negative) value = -value;
  if (!allow_negative && value < 0) {
    throw ArgumentError("negative value not allowed: \"" + std::string(whole) + "\"");
  }
  return value;
}

std::string format_rational(const Rational& value) {
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();
  if (den == 1) return std::to_string(num);
  std::int64_t d = den;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  const int places = std::max(twos, fives);
  if (d != 1 || places > 17) {
    return std::to_string(num) + "/" + std::to_string(den);
  }
  // Scale to 10^places exactly.
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const std::int64_t mag = num < 0 ? -num : num;
  const std::int64_t scaled = mag * (scale / den);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return std::string(num < 0 ? "-" : "") + std::to_string(scaled / scale) + "." + frac;
}

}  // namespace infonet

// Copyright 2026 The zxpivot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxpivot/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "zxpivot/errors.hpp"

namespace zxp {

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw MalformedInput("phase with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  // value in units of pi lives in [0, 2)
  std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  num_ = num;
  den_ = den;
}

Phase Phase::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw MalformedInput("bad phase: " + text);
      return Phase(n);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw MalformedInput("bad phase: " + text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw MalformedInput("bad phase: " + text);
    return Phase(n, d);
  } catch (const std::logic_error&) {
    throw MalformedInput("bad phase: " + text);
  }
}

double Phase::radians() const {
  return std::numbers::pi * static_cast<double>(num_) /
         static_cast<double>(den_);
}

std::string Phase::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase Phase::operator+(const Phase& other) const {
  std::int64_t l = std::lcm(den_, other.den_);
  return Phase(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Phase Phase::operator-(const Phase& other) const { return *this + (-other); }

Phase Phase::operator-() const { return Phase(-num_, den_); }

}  // namespace zxp

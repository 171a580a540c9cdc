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

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace zxp {

/**
 * An exact rational multiple of pi, reduced and normalised into [0, 2).
 *
 * Phase(3, 2) is 3pi/2; Phase(-1, 2) is stored as 3/2 as well.
 */
class Phase {
 public:
  constexpr Phase() = default;
  Phase(std::int64_t num, std::int64_t den = 1);

  static Phase zero() { return Phase(); }
  static Phase pi() { return Phase(1); }
  static Phase half_pi() { return Phase(1, 2); }

  /** Parses "n/d" or "n". Throws MalformedInput. */
  static Phase parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double radians() const;
  bool is_zero() const { return num_ == 0; }
  bool is_pi() const { return num_ == 1 && den_ == 1; }
  bool is_stabilizer() const { return den_ == 1 || den_ == 2; }
  bool is_real() const { return den_ == 1; }

  std::string str() const;

  Phase operator+(const Phase& other) const;
  Phase operator-(const Phase& other) const;
  Phase operator-() const;
  Phase& operator+=(const Phase& other) { return *this = *this + other; }
  Phase& operator-=(const Phase& other) { return *this = *this - other; }

  bool operator==(const Phase&) const = default;
  auto operator<=>(const Phase&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace zxp

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

#include <stdexcept>
#include <string>

namespace zxp {

/** Base class for every error raised by the engine. */
class ZxError : public std::runtime_error {
 public:
  explicit ZxError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Input violates a structural invariant (bad JSON, bad diagram). */
class MalformedInput : public ZxError {
 public:
  explicit MalformedInput(const std::string& msg) : ZxError(msg) {}
};

/** Operation precondition does not hold (arity mismatch, missing edge...). */
class PreconditionError : public ZxError {
 public:
  explicit PreconditionError(const std::string& msg) : ZxError(msg) {}
};

/** Rule requested that is not part of the active theory. */
class TheoryError : public PreconditionError {
 public:
  explicit TheoryError(const std::string& msg) : PreconditionError(msg) {}
};

/** A match site no longer describes an instance of its rule. */
class StaleSite : public PreconditionError {
 public:
  explicit StaleSite(const std::string& msg) : PreconditionError(msg) {}
};

/** Checked mode found that a rewrite changed the semantics. */
class OracleMismatch : public ZxError {
 public:
  explicit OracleMismatch(const std::string& msg) : ZxError(msg) {}
};

}  // namespace zxp

// Copyright 2026 The Relcor Authors
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

#ifndef RELCOR_ERRORS_H
#define RELCOR_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relcor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration (states or pairs) would exceed the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Two operands live on different state spaces.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

// A deterministic-only operation received a non-deterministic relation.
class NondeterminismError : public Error {
 public:
  using Error::Error;
};

// Malformed state space, state, relation literal, patch or configuration.
class ModelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Test selection produced no inputs.
class EmptySuiteError : public Error {
 public:
  using Error::Error;
};

}  // namespace relcor

#endif  // RELCOR_ERRORS_H

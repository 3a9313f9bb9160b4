// Copyright 2026 The Edgeplan Authors.
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

namespace edgeplan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input of any kind: configs, traces, files, arguments.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Prices outside 0 <= theta < lambda' < p'.
class RegimeViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A parameter that must be positive or non-negative is not.
class InvalidParameter : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LengthMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MalformedInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The exact search space exceeds the node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A planner exceeded its proven bound. Carries the instance as JSON so the
// failure can be replayed.
class RatioViolation : public Error {
 public:
  RatioViolation(const std::string& what, std::string counterexample)
      : Error(what), counterexample_(std::move(counterexample)) {}

  const std::string& counterexample() const { return counterexample_; }

 private:
  std::string counterexample_;
};

}  // namespace edgeplan

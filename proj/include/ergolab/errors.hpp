// Copyright 2026 The ergolab authors
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

namespace ergolab {

/// Base class for all ergolab errors. Anything derived from it that is not a
/// ConfigError counts as a numeric failure at the CLI boundary (exit code 3).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A requested state would have a negative eigenvalue.
class PositivityViolation : public Error {
 public:
  explicit PositivityViolation(const std::string& what) : Error(what) {}
};

/// An argument is outside the documented domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Integrator step exceeds the resolution bound for the given timescales.
class StepTooLarge : public Error {
 public:
  explicit StepTooLarge(const std::string& what) : Error(what) {}
};

/// The extraction unitary is undefined (maximally mixed input).
class DegenerateState : public Error {
 public:
  explicit DegenerateState(const std::string& what) : Error(what) {}
};

/// eta = dE/(dE + Sigma) with dE + Sigma = 0.
class UndefinedEfficiency : public Error {
 public:
  explicit UndefinedEfficiency(const std::string& what) : Error(what) {}
};

/// Statistics over fewer than two repetitions.
class InsufficientRepetitions : public Error {
 public:
  explicit InsufficientRepetitions(const std::string& what) : Error(what) {}
};

/// Optimizer found its extremum on an interval endpoint.
class NoInteriorMax : public Error {
 public:
  explicit NoInteriorMax(const std::string& what) : Error(what) {}
};

/// Root bracketing failed.
class NoRoot : public Error {
 public:
  explicit NoRoot(const std::string& what) : Error(what) {}
};

/// Invalid run configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace ergolab

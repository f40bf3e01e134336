// Copyright 2026 The kerrdimer Authors
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

namespace kerr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension argument is out of range or two operands disagree in size.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (non-Hermitian, bad trace, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The trace-replaced steady-state system was singular or ill-posed.
class DegenerateSteadyState : public Error {
 public:
  using Error::Error;
};

/// Time integration reached t_max without settling.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double final_residual)
      : Error(what), final_residual_(final_residual) {}
  double final_residual() const noexcept { return final_residual_; }

 private:
  double final_residual_;
};

/// Bad sweep configuration (grid, flags, config file).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Every grid point of a sweep failed.
class SweepError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kerr

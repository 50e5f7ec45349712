// Copyright 2026 The nvps Authors
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

#ifndef NVPS_ERRORS_HPP
#define NVPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nvps {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (tables, config files, parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with the offending file and line.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& file, int line, const std::string& what);
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

/// API misuse, e.g. a spin label passed for a singlet level.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lookup outside tabulated data (no extrapolation is performed).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Numerically ill-posed evaluation, e.g. sitting on a polarizability pole.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Physical inputs that contradict each other (e.g. absorption exceeding decay).
class ModelConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Base for failures of the dynamics solvers.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Hamiltonian assembly is missing required inputs.
class AssemblyError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The Liouvillian kernel is not one-dimensional.
class DegenerateSteadyStateError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Adaptive step size collapsed below the representable minimum.
class StiffnessError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A sampling window is too short for the requested quantity.
class WindowError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// An ODMR curve has no resolvable dip.
class NoResonanceError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Sensitivity is undefined (zero contrast or zero count rate).
class UndefinedSensitivityError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace nvps

#endif  // NVPS_ERRORS_HPP

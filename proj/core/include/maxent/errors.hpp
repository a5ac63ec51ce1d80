// Copyright 2026 The maxent-hierarchy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXENT_ERRORS_HPP
#define MAXENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxent {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size limits and shape mismatches (e.g. L > 14, vector length conflicts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation left the range of double. `order` is the moment/power
/// index at which the overflow was detected, or -1 when not applicable.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, int order_at = -1)
      : Error(what), order(order_at) {}
  int order;
};

/// The dual Newton iteration did not reach the gradient tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double grad_norm_final,
                   int iterations_used)
      : Error(what), grad_norm(grad_norm_final), iterations(iterations_used) {}
  double grad_norm;
  int iterations;
};

/// The dual diverged: the requested moments are not (numerically)
/// attainable by any distribution on the given spectrum.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Configuration file violations (unknown keys, bad types, bad ranges).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failures, annotated with the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxent

#endif  // MAXENT_ERRORS_HPP

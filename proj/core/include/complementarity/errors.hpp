// Copyright 2026 The Complementarity Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace complementarity {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible or unsupported Hilbert-space dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant (non-Hermitian operator, bad trace, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical corruption, e.g. a variance far below zero.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// r_H == r_V: the slide carries no information and contextual values diverge.
class DegenerateMeasurementError : public Error {
 public:
  using Error::Error;
};

/// An estimator branch conditions on an outcome of zero probability.
class UndefinedEstimateError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (files, measured tables).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace complementarity

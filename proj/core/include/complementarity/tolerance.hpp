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

#include <string_view>

namespace complementarity {

/// Numerical thresholds used when validating operators and states.
///
/// All checks in the library read from one profile so that a caller can
/// loosen or tighten them together. `strict()` is the default for
/// simulated data; `tomographic()` relaxes positivity and trace checks for
/// reconstructed density matrices.
struct ToleranceProfile {
  double hermiticity = 1e-12;
  double trace = 1e-10;
  double min_eigenvalue = -1e-10;
  double equality = 1e-10;
  /// Largest tolerated negative variance before it is treated as corruption.
  double variance_floor = -1e-12;
  /// Largest tolerated negative squared inaccuracy (measured data).
  double inaccuracy_floor = -1e-9;
  /// Normalisation slack for measured joint distributions.
  double distribution_sum = 0.01;

  static constexpr ToleranceProfile strict() { return {}; }

  static constexpr ToleranceProfile tomographic() {
    ToleranceProfile p;
    p.hermiticity = 1e-6;
    p.trace = 1e-3;
    p.min_eigenvalue = -1e-3;
    return p;
  }

  /// Looks up a profile by name ("strict" or "tomographic"); throws
  /// DomainError for anything else.
  static ToleranceProfile named(std::string_view name);
};

}  // namespace complementarity

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

// Random states and operators for the randomized verification suites.

#pragma once

#include <cstdint>
#include <random>

#include "complementarity/qcore.hpp"

namespace complementarity::sampling {

using Rng = std::mt19937_64;

/// Independent generator for trial `index` of a run seeded with `seed`.
/// Trials can be evaluated in any order and still reproduce exactly.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Ginibre matrix with i.i.d. standard complex normal entries.
qcore::ComplexMatrix ginibre(Rng& rng, Eigen::Index dim);

/// Hilbert-Schmidt random state G G^dagger / Tr[G G^dagger].
qcore::DensityMatrix random_density_matrix(Rng& rng, Eigen::Index dim);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
qcore::ComplexMatrix random_unitary(Rng& rng, Eigen::Index dim);

/// Observable uniformly distributed on the Bloch sphere.
qcore::BlochObservable random_bloch(Rng& rng);

/// Random Hermitian with i.i.d. real spectrum in [-scale, scale] and
/// Haar-random eigenbasis.
qcore::HermitianOperator random_hermitian(Rng& rng, Eigen::Index dim,
                                          double scale = 1.0);

struct SlideParameters {
  double r_h;
  double r_v;
};

/// Reflectivities uniform on (0, 1)^2, rejecting |r_H - r_V| < min_gap.
SlideParameters random_slide_parameters(Rng& rng, double min_gap = 0.05);

}  // namespace complementarity::sampling

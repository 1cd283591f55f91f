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

#include "complementarity/sampling.hpp"

#include <cmath>
#include <numbers>

namespace complementarity::sampling {

using qcore::Complex;
using qcore::ComplexMatrix;

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

ComplexMatrix ginibre(Rng& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

qcore::DensityMatrix random_density_matrix(Rng& rng, Eigen::Index dim) {
  const ComplexMatrix g = ginibre(rng, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return qcore::DensityMatrix(rho);
}

ComplexMatrix random_unitary(Rng& rng, Eigen::Index dim) {
  const ComplexMatrix g = ginibre(rng, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

qcore::BlochObservable random_bloch(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cos_theta = 2.0 * unit(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  return {std::acos(cos_theta), phi};
}

qcore::HermitianOperator random_hermitian(Rng& rng, Eigen::Index dim, double scale) {
  std::uniform_real_distribution<double> spectrum(-scale, scale);
  const ComplexMatrix u = random_unitary(rng, dim);
  Eigen::VectorXcd d(dim);
  for (Eigen::Index i = 0; i < dim; ++i) d(i) = spectrum(rng);
  const ComplexMatrix h = u * d.asDiagonal() * u.adjoint();
  return qcore::HermitianOperator(0.5 * (h + h.adjoint()), 1e-9);
}

SlideParameters random_slide_parameters(Rng& rng, double min_gap) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const double rh = unit(rng);
    const double rv = unit(rng);
    if (std::abs(rh - rv) >= min_gap) return {rh, rv};
  }
}

}  // namespace complementarity::sampling

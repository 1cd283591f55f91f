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

// Brute-force ground truth. Everything here is computed from operators on
// the full (possibly dilated) Hilbert space and deliberately avoids the
// scenario and estimate code paths; only qcore primitives are shared.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "complementarity/estimate.hpp"
#include "complementarity/qcore.hpp"

namespace complementarity::oracle {

using qcore::BlochObservable;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::HermitianOperator;

/// A state plus named operators, all on one Hilbert space.
class DilatedSystem {
 public:
  explicit DilatedSystem(DensityMatrix state) : state_(std::move(state)) {}

  /// Throws DimensionError if `op` does not act on the state's space.
  void add(std::string name, HermitianOperator op);
  /// Throws DomainError for unregistered names.
  const HermitianOperator& get(std::string_view name) const;
  bool contains(std::string_view name) const;

  const DensityMatrix& state() const { return state_; }
  Eigen::Index dim() const { return state_.dim(); }

 private:
  DensityMatrix state_;
  std::map<std::string, HermitianOperator, std::less<>> ops_;
};

/// Unitary U on ancilla (x) qubit with
///   U (|0> (x) psi) = |0> (x) sqrt(E+) psi + |1> (x) sqrt(E-) psi
/// for a binary qubit POVM {E+, E-}. The ancilla is the left factor.
ComplexMatrix naimark_unitary(const HermitianOperator& e_plus, const HermitianOperator& e_minus);

/// The EPR experiment on ancilla (x) qubit1 (x) qubit2 with state
/// |0><0| (x) rho. The slide-then-Y measurement is dilated onto the ancilla.
///
/// Registered names:
///   "A" = X on qubit 1, "B" = Y on qubit 1, "W" on qubit 2,
///   "A_est" = f(W), "B_est" = g(y') for the dilated outcome y',
///   "X+", "X-", "Y+", "Y-" (qubit 1), "W+", "W-" (qubit 2),
///   "Yest+", "Yest-" (dilated outcome projectors), "I".
struct EprOracleConfig {
  double r_h = 0.0;
  double r_v = 0.0;
  BlochObservable w;
  double f_plus = 1.0;
  double f_minus = -1.0;
  double g_plus = 1.0;
  double g_minus = -1.0;
};

DilatedSystem epr_dilated_system(const DensityMatrix& rho, const EprOracleConfig& config);

/// <(T - E)^2>^{1/2} for registered target T and estimator E.
double direct_inaccuracy(const DilatedSystem& sys, std::string_view target,
                         std::string_view estimator);

/// Names of a two-element operator family (outcome +1 first) and the
/// values assigned to its outcomes.
struct BinaryFamily {
  std::string plus;
  std::string minus;
  double plus_value = 1.0;
  double minus_value = -1.0;
};

/// p_MH(k, l) = <K_k L_l + L_l K_k> / 2. Each family must sum to the
/// identity within 1e-12 (DomainError otherwise).
estimate::QuasiDistribution direct_margenau_hill(const DilatedSystem& sys,
                                                 const BinaryFamily& k,
                                                 const BinaryFamily& l);

/// sum_{k,l} (kappa_k - lambda_l)^2 p_MH(k, l).
double mh_mean_square_deviation(const DilatedSystem& sys, const BinaryFamily& k,
                                const BinaryFamily& l);

/// <(K - L)^2> with K = sum_k kappa_k K_k and L likewise.
double direct_mean_square_deviation(const DilatedSystem& sys, const BinaryFamily& k,
                                    const BinaryFamily& l);

}  // namespace complementarity::oracle

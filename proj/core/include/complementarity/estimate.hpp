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

// Estimators of X and Y on qubit 1 and the reconstruction of their
// inaccuracies from semiweak joint statistics.
//
// The inaccuracy of an estimate A_est of A is the RMS operator error
// <(A_est - A)^2>^{1/2}. For X_est = f(W) it is recovered from p(m, y, w)
// through the Margenau-Hill quasiprobability
//   p_MH(x, w) = sum_m (1 + x xi_m) / 2 * p(m, w),
// which needs no knowledge of rho, W or f beyond the recorded outcomes.

#pragma once

#include <array>
#include <string_view>

#include "complementarity/qcore.hpp"
#include "complementarity/scenario.hpp"
#include "complementarity/tolerance.hpp"

namespace complementarity::estimate {

using qcore::BlochObservable;
using qcore::DensityMatrix;
using scenario::JointDistribution;
using scenario::SemiweakSlide;

enum class EstimatorKind { simple, optimal, custom };

std::string_view to_string(EstimatorKind kind);

/// A function of one binary outcome: outcome +1 maps to plus(), -1 to minus().
class Estimator {
 public:
  /// The outcome itself, f(+-1) = +-1.
  static Estimator simple();
  /// Arbitrary finite values. Throws DomainError for NaN or infinities.
  static Estimator custom(double plus, double minus);

  double value(int outcome) const { return outcome == 1 ? plus_ : minus_; }
  double plus() const { return plus_; }
  double minus() const { return minus_; }
  EstimatorKind kind() const { return kind_; }

 private:
  friend Estimator optimal_estimator(const DensityMatrix&, const BlochObservable&);
  friend Estimator optimal_y_estimator(const DensityMatrix&, const SemiweakSlide&);
  Estimator(double plus, double minus, EstimatorKind kind)
      : plus_(plus), minus_(minus), kind_(kind) {}

  double plus_;
  double minus_;
  EstimatorKind kind_;
};

/// f_opt(w) = <X (x) (1 + w W)> / <1 (x) (1 + w W)>, the conditional
/// expectation of X on qubit 1 given outcome w on qubit 2.
/// Throws UndefinedEstimateError if either outcome has probability <= 1e-12.
Estimator optimal_estimator(const DensityMatrix& rho, const BlochObservable& w);

/// Least-squares estimate of Y from the outcome y' of the slide-then-Y
/// measurement: g(y') = Re<Y Upsilon_y'> / <Upsilon_y'>.
Estimator optimal_y_estimator(const DensityMatrix& rho, const SemiweakSlide& slide);

/// Real-valued table over two binary outcomes (k, l); entries may be negative.
class QuasiDistribution {
 public:
  QuasiDistribution() = default;
  explicit QuasiDistribution(const std::array<double, 4>& entries) : entries_(entries) {}

  static constexpr std::size_t index(int k, int l) {
    return (k == 1 ? 0u : 2u) + (l == 1 ? 0u : 1u);
  }

  double operator()(int k, int l) const { return entries_[index(k, l)]; }
  double& operator()(int k, int l) { return entries_[index(k, l)]; }
  const std::array<double, 4>& entries() const { return entries_; }

  double total() const;
  double first_marginal(int k) const;
  double second_marginal(int l) const;

 private:
  std::array<double, 4> entries_{};
};

/// p_MH(x, w) = sum_{m,y} (1 + x xi_m) / 2 * p(m, y, w).
QuasiDistribution mh_from_counts(const JointDistribution& dist, const SemiweakSlide& slide);

/// A reconstructed inaccuracy. `raw_squared` keeps the unclamped estimate;
/// `clamped` flags noisy data whose squared inaccuracy came out slightly
/// negative and was set to zero.
struct Inaccuracy {
  double value = 0.0;
  double raw_squared = 0.0;
  bool clamped = false;
};

/// eps(X_est)^2 = 1/2 sum_{x,m,y,w} [x - f(w)]^2 (1 + x xi_m) p(m, y, w).
/// Squared values below `tol.inaccuracy_floor` throw DataError.
Inaccuracy inaccuracy_x(const JointDistribution& dist, const SemiweakSlide& slide,
                        const Estimator& est,
                        const ToleranceProfile& tol = ToleranceProfile::strict());

/// eps(Y_est) = sqrt(2 kappa) for Y_est = y', evaluated as the operator
/// sum_{y,y'} (y - y')^2 p_MH(y, y') and checked to be 2 kappa times the
/// identity (state independent).
double inaccuracy_y(const SemiweakSlide& slide);

/// p_MH(y, y') = [kappa/2 + (1 - kappa) delta_{yy'}] <Y_y>, with <Y_y>
/// inferred from the y-marginal of `dist`. Requires kappa < 1.
QuasiDistribution y_quasi_distribution(const JointDistribution& dist,
                                       const SemiweakSlide& slide);

/// Inaccuracy of an arbitrary estimator g(y') of Y, from counts.
Inaccuracy inaccuracy_y(const JointDistribution& dist, const SemiweakSlide& slide,
                        const Estimator& est,
                        const ToleranceProfile& tol = ToleranceProfile::strict());

/// Spread of f(w) under the w-marginal of `dist`.
double estimator_spread(const JointDistribution& dist, const Estimator& est);

/// Spread of g(y) under the y-marginal of `dist`.
double y_estimator_spread(const JointDistribution& dist,
                          const Estimator& est = Estimator::simple());

/// Terms of eps^2 + Delta_est^2 = Delta X^2.
struct DispersionTerms {
  double inaccuracy_squared = 0.0;
  double estimator_spread_squared = 0.0;
  double observable_spread_squared = 0.0;
  /// True when the identity was enforced (optimal estimators only).
  bool identity_checked = false;

  double residual() const {
    return inaccuracy_squared + estimator_spread_squared - observable_spread_squared;
  }
};

/// Computes the three terms for the simulated scenario (rho, slide, W, est).
/// For optimal estimators the identity is enforced to 1e-9 (NumericalError
/// otherwise); other estimators only report the terms.
DispersionTerms dispersion_check(const DensityMatrix& rho, const SemiweakSlide& slide,
                                 const BlochObservable& w, const Estimator& est);

}  // namespace complementarity::estimate

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

#include "complementarity/estimate.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "complementarity/errors.hpp"

namespace complementarity::estimate {

using qcore::HermitianOperator;
using qcore::Pauli;
using qcore::pauli;
using scenario::kBinaryOutcomes;

namespace {

constexpr double kMinBranchProbability = 1e-12;

Inaccuracy finish_inaccuracy(double raw, const ToleranceProfile& tol, const char* what) {
  if (raw < tol.inaccuracy_floor) {
    std::ostringstream os;
    os << what << ": squared inaccuracy " << raw
       << " is too negative; the input data are inconsistent";
    throw DataError(os.str());
  }
  Inaccuracy out;
  out.raw_squared = raw;
  out.clamped = raw < 0.0;
  out.value = std::sqrt(std::max(0.0, raw));
  return out;
}

double discrete_spread(double v_plus, double p_plus, double v_minus, double p_minus) {
  const double norm = p_plus + p_minus;
  if (!(norm > 0.0)) return 0.0;
  const double mean = (v_plus * p_plus + v_minus * p_minus) / norm;
  const double second = (v_plus * v_plus * p_plus + v_minus * v_minus * p_minus) / norm;
  return std::sqrt(std::max(0.0, second - mean * mean));
}

}  // namespace

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::simple:
      return "simple";
    case EstimatorKind::optimal:
      return "optimal";
    case EstimatorKind::custom:
      return "custom";
  }
  return "unknown";
}

Estimator Estimator::simple() { return Estimator(1.0, -1.0, EstimatorKind::simple); }

Estimator Estimator::custom(double plus, double minus) {
  if (!std::isfinite(plus) || !std::isfinite(minus)) {
    throw DomainError("estimator values must be finite");
  }
  return Estimator(plus, minus, EstimatorKind::custom);
}

Estimator optimal_estimator(const DensityMatrix& rho, const BlochObservable& w) {
  if (rho.dim() != 4) throw DimensionError("optimal_estimator expects a two-qubit state");
  const HermitianOperator x = pauli(Pauli::X);
  const HermitianOperator id = pauli(Pauli::I);
  const HermitianOperator w_op = w.as_operator();
  std::array<double, 2> f{};
  for (std::size_t i = 0; i < 2; ++i) {
    const double sign = kBinaryOutcomes[i];
    const HermitianOperator filter = id + sign * w_op;
    const double den = qcore::expectation(qcore::tensor(id, filter), rho);
    if (!(den > kMinBranchProbability)) {
      std::ostringstream os;
      os << "optimal estimate undefined for w = " << kBinaryOutcomes[i]
         << ": outcome has probability " << den / 2.0;
      throw UndefinedEstimateError(os.str());
    }
    f[i] = qcore::expectation(qcore::tensor(x, filter), rho) / den;
  }
  return Estimator(f[0], f[1], EstimatorKind::optimal);
}

Estimator optimal_y_estimator(const DensityMatrix& rho, const SemiweakSlide& slide) {
  if (rho.dim() != 4) throw DimensionError("optimal_y_estimator expects a two-qubit state");
  const scenario::BinaryPovm povm = scenario::effective_povm(slide);
  const qcore::ComplexMatrix y = pauli(Pauli::Y).matrix();
  const qcore::ComplexMatrix id = pauli(Pauli::I).matrix();
  std::array<double, 2> g{};
  for (std::size_t i = 0; i < 2; ++i) {
    const qcore::ComplexMatrix& e = povm.element(kBinaryOutcomes[i]).matrix();
    const double den = qcore::trace_product(qcore::kron(e, id), rho).real();
    if (!(den > kMinBranchProbability)) {
      std::ostringstream os;
      os << "optimal Y estimate undefined for y = " << kBinaryOutcomes[i]
         << ": outcome has probability " << den;
      throw UndefinedEstimateError(os.str());
    }
    g[i] = qcore::trace_product(qcore::kron(y * e, id), rho).real() / den;
  }
  return Estimator(g[0], g[1], EstimatorKind::optimal);
}

double QuasiDistribution::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

double QuasiDistribution::first_marginal(int k) const { return (*this)(k, 1) + (*this)(k, -1); }

double QuasiDistribution::second_marginal(int l) const { return (*this)(1, l) + (*this)(-1, l); }

QuasiDistribution mh_from_counts(const JointDistribution& dist, const SemiweakSlide& slide) {
  QuasiDistribution q;
  for (int x : kBinaryOutcomes) {
    for (int w : kBinaryOutcomes) {
      double v = 0.0;
      for (int m : kBinaryOutcomes) {
        v += 0.5 * (1.0 + x * slide.contextual_value(m)) * dist.p_mw(m, w);
      }
      q(x, w) = v;
    }
  }
  return q;
}

Inaccuracy inaccuracy_x(const JointDistribution& dist, const SemiweakSlide& slide,
                        const Estimator& est, const ToleranceProfile& tol) {
  // y is marginalised first; the X inaccuracy does not depend on it.
  double sum = 0.0;
  for (int m : kBinaryOutcomes) {
    const double xi = slide.contextual_value(m);
    for (int w : kBinaryOutcomes) {
      const double pmw = dist.p_mw(m, w);
      const double fw = est.value(w);
      for (int x : kBinaryOutcomes) {
        const double d = x - fw;
        sum += d * d * (1.0 + x * xi) * pmw;
      }
    }
  }
  return finish_inaccuracy(0.5 * sum, tol, "inaccuracy_x");
}

double inaccuracy_y(const SemiweakSlide& slide) {
  const scenario::BinaryPovm povm = scenario::effective_povm(slide);
  const HermitianOperator y_op = pauli(Pauli::Y);
  // Operator form of sum (y - y')^2 p_MH(y, y'): its expectation in any
  // state is the squared inaccuracy.
  qcore::ComplexMatrix total = qcore::ComplexMatrix::Zero(2, 2);
  for (int y : kBinaryOutcomes) {
    const qcore::ComplexMatrix proj = qcore::spectral_projector(y_op, y).matrix();
    for (int yp : kBinaryOutcomes) {
      const qcore::ComplexMatrix& e = povm.element(yp).matrix();
      const double d = y - yp;
      total += d * d * 0.5 * (proj * e + e * proj);
    }
  }
  const double two_kappa = 2.0 * slide.kappa();
  const qcore::ComplexMatrix expected =
      two_kappa * qcore::ComplexMatrix::Identity(2, 2);
  if (!qcore::approx_equal(total, expected, 1e-12)) {
    throw NumericalError("Y inaccuracy operator is not 2 kappa times the identity");
  }
  return std::sqrt(two_kappa);
}

QuasiDistribution y_quasi_distribution(const JointDistribution& dist,
                                       const SemiweakSlide& slide) {
  const double kappa = slide.kappa();
  if (!(kappa < 1.0 - 1e-12)) {
    throw DegenerateMeasurementError(
        "kappa = 1: the Y channel carries no information about <Y_y>");
  }
  QuasiDistribution q;
  for (int y : kBinaryOutcomes) {
    const double p_y = (dist.p_y(y) - 0.5 * kappa * dist.total()) / (1.0 - kappa);
    for (int yp : kBinaryOutcomes) {
      q(y, yp) = (0.5 * kappa + (y == yp ? 1.0 - kappa : 0.0)) * p_y;
    }
  }
  return q;
}

Inaccuracy inaccuracy_y(const JointDistribution& dist, const SemiweakSlide& slide,
                        const Estimator& est, const ToleranceProfile& tol) {
  const QuasiDistribution q = y_quasi_distribution(dist, slide);
  double sum = 0.0;
  for (int y : kBinaryOutcomes) {
    for (int yp : kBinaryOutcomes) {
      const double d = y - est.value(yp);
      sum += d * d * q(y, yp);
    }
  }
  return finish_inaccuracy(sum, tol, "inaccuracy_y");
}

double estimator_spread(const JointDistribution& dist, const Estimator& est) {
  return discrete_spread(est.plus(), dist.p_w(1), est.minus(), dist.p_w(-1));
}

double y_estimator_spread(const JointDistribution& dist, const Estimator& est) {
  return discrete_spread(est.plus(), dist.p_y(1), est.minus(), dist.p_y(-1));
}

DispersionTerms dispersion_check(const DensityMatrix& rho, const SemiweakSlide& slide,
                                 const BlochObservable& w, const Estimator& est) {
  const JointDistribution dist = scenario::joint_distribution(rho, slide, w);
  DispersionTerms terms;
  terms.inaccuracy_squared = inaccuracy_x(dist, slide, est).raw_squared;
  const double de = estimator_spread(dist, est);
  terms.estimator_spread_squared = de * de;
  const double dx = qcore::spread(qcore::tensor(pauli(Pauli::X), pauli(Pauli::I)), rho);
  terms.observable_spread_squared = dx * dx;
  if (est.kind() == EstimatorKind::optimal) {
    terms.identity_checked = true;
    if (std::abs(terms.residual()) > 1e-9) {
      std::ostringstream os;
      os << "inaccuracy-dispersion identity fails for an optimal estimator (residual "
         << terms.residual() << ")";
      throw NumericalError(os.str());
    }
  }
  return terms;
}

}  // namespace complementarity::estimate

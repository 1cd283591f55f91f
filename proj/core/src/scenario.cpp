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

#include "complementarity/scenario.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "complementarity/errors.hpp"

namespace complementarity::scenario {

using qcore::ComplexMatrix;
using qcore::Pauli;
using qcore::pauli;

namespace {

constexpr double kDegenerateGap = 1e-12;

void require_probability(double r, const char* name) {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << r << " is not a probability";
    throw DomainError(os.str());
  }
}

HermitianOperator x_basis_operator(double on_plus, double on_minus) {
  const HermitianOperator x = pauli(Pauli::X);
  return on_plus * qcore::spectral_projector(x, +1) +
         on_minus * qcore::spectral_projector(x, -1);
}

}  // namespace

DensityMatrix epr_state(double gamma) {
  qcore::StateVector psi = qcore::StateVector::Zero(4);
  psi(1) = std::cos(gamma);   // |HV>
  psi(2) = -std::sin(gamma);  // |VH>
  return DensityMatrix::pure(psi);
}

SemiweakSlide::SemiweakSlide(double r_h, double r_v)
    : r_h_(r_h),
      r_v_(r_v),
      kappa_(1.0 - std::sqrt(r_h * r_v) - std::sqrt((1.0 - r_h) * (1.0 - r_v))),
      m_r_(x_basis_operator(std::sqrt(r_h), std::sqrt(r_v))),
      m_t_(x_basis_operator(std::sqrt(1.0 - r_h), std::sqrt(1.0 - r_v))) {}

const HermitianOperator& SemiweakSlide::measurement_operator(int m) const {
  if (m == static_cast<int>(SlideOutcome::transmitted)) return m_t_;
  if (m == static_cast<int>(SlideOutcome::reflected)) return m_r_;
  throw DomainError("slide outcome must be +1 (transmitted) or -1 (reflected)");
}

double SemiweakSlide::xi_r() const {
  if (!xi_r_) {
    throw DegenerateMeasurementError(
        "slide has r_H == r_V: contextual values are unbounded");
  }
  return *xi_r_;
}

double SemiweakSlide::xi_t() const {
  if (!xi_t_) {
    throw DegenerateMeasurementError(
        "slide has r_H == r_V: contextual values are unbounded");
  }
  return *xi_t_;
}

double SemiweakSlide::contextual_value(int m) const {
  if (m == static_cast<int>(SlideOutcome::transmitted)) return xi_t();
  if (m == static_cast<int>(SlideOutcome::reflected)) return xi_r();
  throw DomainError("slide outcome must be +1 (transmitted) or -1 (reflected)");
}

SemiweakSlide slide_operators(double r_h, double r_v) {
  require_probability(r_h, "r_H");
  require_probability(r_v, "r_V");
  return SemiweakSlide(r_h, r_v);
}

SemiweakSlide slide_model(double r_h, double r_v) {
  SemiweakSlide slide = slide_operators(r_h, r_v);
  const double gap = r_h - r_v;
  if (std::abs(gap) <= kDegenerateGap) {
    std::ostringstream os;
    os << "degenerate slide (r_H = " << r_h << ", r_V = " << r_v
       << "): no information about X, contextual values are unbounded";
    throw DegenerateMeasurementError(os.str());
  }
  // Solves xi_r r + xi_t (1 - r) = +-1 for the two X eigenstates.
  slide.xi_r_ = (2.0 - r_h - r_v) / gap;
  slide.xi_t_ = -(r_h + r_v) / gap;
  return slide;
}

JointDistribution::JointDistribution(const std::array<double, 8>& entries,
                                     Provenance provenance,
                                     std::optional<BlochObservable> w_observable,
                                     const ToleranceProfile& tol)
    : entries_(entries), provenance_(provenance), w_(w_observable) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i]) || entries_[i] < -1e-9) {
      std::ostringstream os;
      os << "joint distribution entry " << i << " = " << entries_[i]
         << " is not a probability";
      throw DataError(os.str());
    }
  }
  const double sum = total();
  const double slack = provenance == Provenance::simulated ? 1e-10 : tol.distribution_sum;
  if (!(std::abs(sum - 1.0) <= slack)) {
    std::ostringstream os;
    os << "joint distribution sums to " << sum << ", outside 1 +- " << slack;
    throw DataError(os.str());
  }
}

double JointDistribution::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

double JointDistribution::p_m(int m) const {
  double s = 0.0;
  for (int y : kBinaryOutcomes)
    for (int w : kBinaryOutcomes) s += (*this)(m, y, w);
  return s;
}

double JointDistribution::p_y(int y) const {
  double s = 0.0;
  for (int m : kBinaryOutcomes)
    for (int w : kBinaryOutcomes) s += (*this)(m, y, w);
  return s;
}

double JointDistribution::p_w(int w) const {
  double s = 0.0;
  for (int m : kBinaryOutcomes)
    for (int y : kBinaryOutcomes) s += (*this)(m, y, w);
  return s;
}

double JointDistribution::p_mw(int m, int w) const {
  return (*this)(m, +1, w) + (*this)(m, -1, w);
}

JointDistribution joint_distribution(const DensityMatrix& rho, const SemiweakSlide& slide,
                                     const BlochObservable& w) {
  if (rho.dim() != 4) {
    throw DimensionError("joint_distribution expects a two-qubit state");
  }
  const HermitianOperator y_op = pauli(Pauli::Y);
  std::array<double, 8> p{};
  for (int m : kBinaryOutcomes) {
    const HermitianOperator& mm = slide.measurement_operator(m);
    for (int y : kBinaryOutcomes) {
      const HermitianOperator first =
          qcore::sandwich(mm, qcore::spectral_projector(y_op, y));
      for (int wo : kBinaryOutcomes) {
        p[JointDistribution::index(m, y, wo)] =
            qcore::expectation(qcore::tensor(first, w.projector(wo)), rho);
      }
    }
  }
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= sum;
  return JointDistribution(p, Provenance::simulated, w);
}

BinaryPovm effective_povm(const SemiweakSlide& slide) {
  const HermitianOperator y_op = pauli(Pauli::Y);
  auto element = [&](int y) {
    const HermitianOperator proj = qcore::spectral_projector(y_op, y);
    return qcore::sandwich(slide.m_r(), proj) + qcore::sandwich(slide.m_t(), proj);
  };
  BinaryPovm povm{element(+1), element(-1)};

  const HermitianOperator id = HermitianOperator::identity(2);
  const double shrink = 1.0 - slide.kappa();
  for (int y : kBinaryOutcomes) {
    const HermitianOperator expected = 0.5 * id + (0.5 * y * shrink) * y_op;
    if (!qcore::approx_equal(povm.element(y).matrix(), expected.matrix(), 1e-12)) {
      throw NumericalError("effective POVM disagrees with 1/2 +- (1 - kappa) Y / 2");
    }
  }
  return povm;
}

HermitianOperator disturbed_observable(const SemiweakSlide& slide, const HermitianOperator& b) {
  if (b.dim() != 2) throw DimensionError("disturbed_observable expects a qubit observable");
  return qcore::sandwich(slide.m_r(), b) + qcore::sandwich(slide.m_t(), b);
}

}  // namespace complementarity::scenario

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

// The EPR-type joint measurement: an entangled source, a semiweak
// polarisation-dependent beam splitter ("slide") probing X on qubit 1,
// a projective Y measurement on qubit 1 and a projective W measurement on
// qubit 2.

#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "complementarity/qcore.hpp"
#include "complementarity/tolerance.hpp"

namespace complementarity::scenario {

using qcore::BlochObservable;
using qcore::DensityMatrix;
using qcore::HermitianOperator;

inline constexpr std::array<int, 2> kBinaryOutcomes{+1, -1};

/// Slide outcome labels. The transmitted port is m = +1 and the reflected
/// port m = -1; with r_H, r_V < 1/2 this makes m = +1 the likelier outcome,
/// matching how measured tables are laid out.
enum class SlideOutcome : int { transmitted = +1, reflected = -1 };

/// cos(gamma)|HV> - sin(gamma)|VH>.
DensityMatrix epr_state(double gamma);

/// Polarisation-dependent beam splitter acting in the X basis.
///
/// Measurement operators are the principal square roots
///   M_r = sqrt(r_H) X+ + sqrt(r_V) X-,   M_t = sqrt(t_H) X+ + sqrt(t_V) X-
/// so that M_r^2 + M_t^2 = 1. Contextual values (xi_r, xi_t) satisfy
/// xi_r p(r) + xi_t p(t) = <X> for every input state; they exist only when
/// r_H != r_V.
class SemiweakSlide {
 public:
  double r_h() const { return r_h_; }
  double r_v() const { return r_v_; }
  double t_h() const { return 1.0 - r_h_; }
  double t_v() const { return 1.0 - r_v_; }

  /// 1 - sqrt(r_H r_V) - sqrt(t_H t_V), in [0, 1].
  double kappa() const { return kappa_; }

  const HermitianOperator& m_r() const { return m_r_; }
  const HermitianOperator& m_t() const { return m_t_; }
  /// M_t for m = +1, M_r for m = -1.
  const HermitianOperator& measurement_operator(int m) const;

  bool has_contextual_values() const { return xi_r_.has_value(); }
  /// Throw DegenerateMeasurementError if the slide is uninformative.
  double xi_r() const;
  double xi_t() const;
  double contextual_value(int m) const;

 private:
  friend SemiweakSlide slide_model(double, double);
  friend SemiweakSlide slide_operators(double, double);
  SemiweakSlide(double r_h, double r_v);

  double r_h_;
  double r_v_;
  double kappa_;
  HermitianOperator m_r_;
  HermitianOperator m_t_;
  std::optional<double> xi_r_;
  std::optional<double> xi_t_;
};

/// Full slide model. Throws DomainError for reflectivities outside [0, 1]
/// and DegenerateMeasurementError when |r_H - r_V| <= 1e-12.
SemiweakSlide slide_model(double r_h, double r_v);

/// Slide with measurement operators and kappa only. Accepts r_H == r_V
/// (the non-disturbing weak limit), where contextual values do not exist.
SemiweakSlide slide_operators(double r_h, double r_v);

enum class Provenance { simulated, measured };

/// Probabilities p(m, y, w) over the eight binary outcome triples.
///
/// Storage order is m-major: (+,+,+), (+,+,-), (+,-,+), (+,-,-), (-,+,+), ...
class JointDistribution {
 public:
  /// Validates entries >= -1e-9 and normalisation (1e-10 for simulated
  /// data, `tol.distribution_sum` for measured data). Throws DataError.
  JointDistribution(const std::array<double, 8>& entries, Provenance provenance,
                    std::optional<BlochObservable> w_observable = std::nullopt,
                    const ToleranceProfile& tol = ToleranceProfile::strict());

  static constexpr std::size_t index(int m, int y, int w) {
    return (m == 1 ? 0u : 4u) + (y == 1 ? 0u : 2u) + (w == 1 ? 0u : 1u);
  }

  double operator()(int m, int y, int w) const { return entries_[index(m, y, w)]; }
  const std::array<double, 8>& entries() const { return entries_; }
  Provenance provenance() const { return provenance_; }
  const std::optional<BlochObservable>& w_observable() const { return w_; }

  double total() const;
  double p_m(int m) const;
  double p_y(int y) const;
  double p_w(int w) const;
  double p_mw(int m, int w) const;

 private:
  std::array<double, 8> entries_;
  Provenance provenance_;
  std::optional<BlochObservable> w_;
};

/// p(m, y, w) = <(M_m Y_y M_m) (x) W_w>_rho, renormalised to unit sum.
JointDistribution joint_distribution(const DensityMatrix& rho, const SemiweakSlide& slide,
                                     const BlochObservable& w);

/// Two-outcome POVM on qubit 1.
struct BinaryPovm {
  HermitianOperator plus;
  HermitianOperator minus;

  const HermitianOperator& element(int outcome) const {
    return outcome == 1 ? plus : minus;
  }
};

/// The Y measurement preceded by the slide, seen as a POVM on the input:
/// Upsilon_y = sum_m M_m Y_y M_m. Checked against 1/2 +- (1 - kappa) Y / 2.
BinaryPovm effective_povm(const SemiweakSlide& slide);

/// Heisenberg-picture image of a qubit-1 observable under the slide:
/// B' = M_r B M_r + M_t B M_t.
HermitianOperator disturbed_observable(const SemiweakSlide& slide, const HermitianOperator& b);

}  // namespace complementarity::scenario

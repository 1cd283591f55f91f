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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "complementarity/dataio.hpp"
#include "complementarity/errors.hpp"
#include "complementarity/sampling.hpp"
#include "test_support.hpp"

namespace complementarity::estimate {
namespace {

using qcore::HermitianOperator;
using qcore::Pauli;
using scenario::slide_model;
using test::kRh;
using test::kRv;

JointDistribution measured180() {
  return dataio::parse_distribution(test::read_data("measured_phi180.csv"));
}

DensityMatrix fixture_state() {
  return dataio::parse_density_matrix(test::read_data("tomographic_state.csv"));
}

TEST(EstimatorTest, Construction) {
  const Estimator s = Estimator::simple();
  EXPECT_EQ(s.value(1), 1.0);
  EXPECT_EQ(s.value(-1), -1.0);
  EXPECT_EQ(s.kind(), EstimatorKind::simple);
  const Estimator c = Estimator::custom(0.3, -2.0);
  EXPECT_EQ(c.plus(), 0.3);
  EXPECT_EQ(c.kind(), EstimatorKind::custom);
  EXPECT_THROW(Estimator::custom(std::nan(""), 0.0), DomainError);
  EXPECT_THROW(Estimator::custom(0.0, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_EQ(to_string(EstimatorKind::optimal), "optimal");
}

TEST(OptimalEstimatorTest, IdealStateGivesSinFortyFive) {
  const Estimator f = optimal_estimator(scenario::epr_state(std::numbers::pi / 8),
                                        BlochObservable::from_degrees(90, 180));
  EXPECT_NEAR(f.plus(), std::sin(std::numbers::pi / 4), 1e-12);
  EXPECT_NEAR(f.minus(), -std::sin(std::numbers::pi / 4), 1e-12);
  EXPECT_EQ(f.kind(), EstimatorKind::optimal);
}

TEST(OptimalEstimatorTest, FixtureState) {
  const Estimator f = optimal_estimator(fixture_state(), BlochObservable::from_degrees(90, 180));
  EXPECT_NEAR(f.plus(), 0.630, 0.02);
  EXPECT_NEAR(f.minus(), -0.643, 0.02);
  EXPECT_NEAR(f.plus(), 0.63001, 1e-4);
  EXPECT_NEAR(f.minus(), -0.64299, 1e-4);
}

TEST(OptimalEstimatorTest, UndefinedWhenOutcomeImpossible) {
  // Qubit 2 in the +1 eigenstate of X, so W = -X never yields +1.
  qcore::StateVector psi = qcore::StateVector::Zero(4);
  psi(0) = psi(1) = 1.0 / std::sqrt(2.0);
  EXPECT_THROW(optimal_estimator(DensityMatrix::pure(psi), BlochObservable::from_degrees(90, 180)),
               UndefinedEstimateError);
}

TEST(MargenauHillTest, MeasuredGoldenValues) {
  const QuasiDistribution q = mh_from_counts(measured180(), slide_model(kRh, kRv));
  EXPECT_NEAR(q(1, 1), 0.445742869744193, 1e-12);
  EXPECT_NEAR(q(1, -1), 0.0755326374595708, 1e-12);
  EXPECT_NEAR(q(-1, 1), 0.0909571302558071, 1e-12);
  EXPECT_NEAR(q(-1, -1), 0.388167362540429, 1e-12);
  EXPECT_NEAR(q.total(), measured180().total(), 1e-12);
}

TEST(InaccuracyTest, MeasuredSimpleEstimator) {
  const Inaccuracy e = inaccuracy_x(measured180(), slide_model(kRh, kRv), Estimator::simple());
  EXPECT_NEAR(e.raw_squared, 0.665959070861512, 1e-12);
  EXPECT_NEAR(e.value, std::sqrt(0.665959070861512), 1e-12);
  EXPECT_FALSE(e.clamped);
}

TEST(InaccuracyTest, IdealScenario) {
  const auto slide = slide_model(kRh, kRv);
  const auto w = BlochObservable::from_degrees(90, 180);
  const DensityMatrix rho = scenario::epr_state(std::numbers::pi / 8);
  const JointDistribution p = scenario::joint_distribution(rho, slide, w);
  EXPECT_NEAR(inaccuracy_x(p, slide, optimal_estimator(rho, w)).value, std::sqrt(0.5), 1e-12);
  // eps^2 = 2 - 2 sin(45) for the simple estimate.
  EXPECT_NEAR(inaccuracy_x(p, slide, Estimator::simple()).raw_squared, 2.0 - std::sqrt(2.0),
              1e-12);
  EXPECT_NEAR(inaccuracy_y(p, slide, Estimator::simple()).value, 0.38695344604275456, 1e-12);
}

TEST(InaccuracyTest, NegativeSquareRejected) {
  // All weight on reflected events with w = -1: the x = +1 branch carries
  // the negative factor 1 + xi_r, so the reconstructed square is negative.
  std::array<double, 8> e{};
  e[JointDistribution::index(-1, 1, -1)] = 1.0;
  const JointDistribution p(e, scenario::Provenance::measured);
  EXPECT_THROW(inaccuracy_x(p, slide_model(kRh, kRv), Estimator::simple()), DataError);
}

TEST(InaccuracyTest, YOperatorIdentity) {
  const auto slide = slide_model(kRh, kRv);
  EXPECT_NEAR(inaccuracy_y(slide), std::sqrt(2.0 * slide.kappa()), 1e-15);
  EXPECT_NEAR(inaccuracy_y(slide) * inaccuracy_y(slide), 0.14973296940436298, 1e-12);
}

TEST(SpreadTest, EstimatorSpreads) {
  std::array<double, 8> e;
  e.fill(0.125);
  const JointDistribution p(e, scenario::Provenance::measured);
  EXPECT_NEAR(estimator_spread(p, Estimator::simple()), 1.0, 1e-15);
  EXPECT_NEAR(estimator_spread(p, Estimator::custom(0.5, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(y_estimator_spread(p, Estimator::custom(2.0, 0.0)), 1.0, 1e-15);
}

TEST(PropertyTest, YInaccuracyIsStateIndependent) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    sampling::Rng rng = sampling::trial_rng(31, i);
    const DensityMatrix rho = sampling::random_density_matrix(rng, 4);
    const sampling::SlideParameters sp = sampling::random_slide_parameters(rng);
    const auto slide = slide_model(sp.r_h, sp.r_v);
    const JointDistribution p =
        scenario::joint_distribution(rho, slide, sampling::random_bloch(rng));
    const Inaccuracy e = inaccuracy_y(p, slide, Estimator::simple());
    EXPECT_NEAR(e.raw_squared, 2.0 * slide.kappa(), 1e-12);
  }
}

TEST(PropertyTest, DispersionIdentityForOptimalEstimates) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    sampling::Rng rng = sampling::trial_rng(32, i);
    const DensityMatrix rho = sampling::random_density_matrix(rng, 4);
    const sampling::SlideParameters sp = sampling::random_slide_parameters(rng);
    const BlochObservable w = sampling::random_bloch(rng);
    const auto slide = slide_model(sp.r_h, sp.r_v);
    const DispersionTerms t = dispersion_check(rho, slide, w, optimal_estimator(rho, w));
    EXPECT_TRUE(t.identity_checked);
    EXPECT_NEAR(t.residual(), 0.0, 1e-9);
    // Simple estimates are never better than the optimal ones.
    const JointDistribution p = scenario::joint_distribution(rho, slide, w);
    EXPECT_LE(inaccuracy_x(p, slide, optimal_estimator(rho, w)).raw_squared,
              inaccuracy_x(p, slide, Estimator::simple()).raw_squared + 1e-12);
    EXPECT_LE(inaccuracy_y(p, slide, optimal_y_estimator(rho, slide)).raw_squared,
              inaccuracy_y(p, slide, Estimator::simple()).raw_squared + 1e-12);
  }
}

TEST(PropertyTest, DispersionNotEnforcedForSimpleEstimates) {
  const auto slide = slide_model(kRh, kRv);
  const DispersionTerms t =
      dispersion_check(scenario::epr_state(std::numbers::pi / 8), slide,
                       BlochObservable::from_degrees(90, 180), Estimator::simple());
  EXPECT_FALSE(t.identity_checked);
  EXPECT_GT(std::abs(t.residual()), 0.1);
}

TEST(PropertyTest, OptimalBeatsRandomAlternatives) {
  sampling::Rng rng = sampling::trial_rng(33, 0);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const DensityMatrix rho = sampling::random_density_matrix(rng, 4);
    const sampling::SlideParameters sp = sampling::random_slide_parameters(rng);
    const BlochObservable w = sampling::random_bloch(rng);
    const auto slide = slide_model(sp.r_h, sp.r_v);
    const JointDistribution p = scenario::joint_distribution(rho, slide, w);
    const Estimator opt = optimal_estimator(rho, w);
    const double best = inaccuracy_x(p, slide, opt).value;
    for (int k = 0; k < 50; ++k) {
      EXPECT_LE(best, inaccuracy_x(p, slide, Estimator::custom(u(rng), u(rng))).value + 1e-9);
    }
    // Stationary per outcome.
    for (double h : {-1e-4, 1e-4}) {
      EXPECT_LE(best, inaccuracy_x(p, slide, Estimator::custom(opt.plus() + h, opt.minus())).value);
      EXPECT_LE(best, inaccuracy_x(p, slide, Estimator::custom(opt.plus(), opt.minus() + h)).value);
    }
  }
}

TEST(PropertyTest, WeakLimitConverges) {
  const DensityMatrix rho = scenario::epr_state(std::numbers::pi / 8);
  const BlochObservable w = BlochObservable::from_degrees(90, 157.5);
  const HermitianOperator x1 = qcore::tensor(qcore::pauli(Pauli::X), qcore::pauli(Pauli::I));
  const HermitianOperator f = qcore::tensor(qcore::pauli(Pauli::I), w.as_operator());
  const double direct = std::sqrt(qcore::expectation((x1 - f).squared(), rho));
  for (double delta = 1e-1; delta >= 1e-7; delta /= 10.0) {
    const auto slide = slide_model(0.3, 0.3 + delta);
    const JointDistribution p = scenario::joint_distribution(rho, slide, w);
    EXPECT_NEAR(inaccuracy_x(p, slide, Estimator::simple()).value, direct, 1e-6) << delta;
  }
}

TEST(PropertyTest, QuasiDistributionMarginals) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    sampling::Rng rng = sampling::trial_rng(34, i);
    const DensityMatrix rho = sampling::random_density_matrix(rng, 4);
    const sampling::SlideParameters sp = sampling::random_slide_parameters(rng);
    const BlochObservable w = sampling::random_bloch(rng);
    const auto slide = slide_model(sp.r_h, sp.r_v);
    const JointDistribution p = scenario::joint_distribution(rho, slide, w);
    const QuasiDistribution q = mh_from_counts(p, slide);
    const HermitianOperator x = qcore::pauli(Pauli::X);
    const HermitianOperator id = qcore::pauli(Pauli::I);
    const QuasiDistribution qy = y_quasi_distribution(p, slide);
    const HermitianOperator y = qcore::pauli(Pauli::Y);
    for (int o : scenario::kBinaryOutcomes) {
      EXPECT_NEAR(q.first_marginal(o),
                  qcore::expectation(qcore::tensor(qcore::spectral_projector(x, o), id), rho),
                  1e-9);
      EXPECT_NEAR(q.second_marginal(o), p.p_w(o), 1e-9);
      EXPECT_NEAR(qy.first_marginal(o),
                  qcore::expectation(qcore::tensor(qcore::spectral_projector(y, o), id), rho),
                  1e-9);
      EXPECT_NEAR(qy.second_marginal(o), p.p_y(o), 1e-9);
    }
    EXPECT_LE(estimator_spread(p, optimal_estimator(rho, w)),
              qcore::spread(qcore::tensor(x, id), rho) + 1e-12);
  }
}

}  // namespace
}  // namespace complementarity::estimate

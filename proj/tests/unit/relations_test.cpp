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

#include "complementarity/relations.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "complementarity/errors.hpp"
#include "complementarity/oracle.hpp"
#include "complementarity/sampling.hpp"
#include "test_support.hpp"

namespace complementarity::relations {
namespace {

using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::HermitianOperator;
using qcore::Pauli;

RelationInputs sample_inputs() {
  RelationInputs in;
  in.eps_a = 0.5;
  in.eps_b = 0.4;
  in.delta_a = 1.0;
  in.delta_b = 1.0;
  in.delta_a_est = 0.8;
  in.delta_b_est = 0.9;
  in.c = 1.0;
  return in;
}

TEST(EvaluateRelationsTest, Formulas) {
  const RelationReport r = evaluate_relations(sample_inputs());
  EXPECT_DOUBLE_EQ(r.bound, 0.5);
  EXPECT_NEAR(r.lhs_ak, 0.2, 1e-15);
  EXPECT_NEAR(r.lhs_hall, 0.2 + 0.45 + 0.32, 1e-15);
  EXPECT_NEAR(r.lhs_ozawa, 0.2 + 0.5 + 0.4, 1e-15);
  EXPECT_NEAR(r.lhs_new, 0.5 * 1.9 / 2 + 0.4 * 1.8 / 2, 1e-15);
  EXPECT_FALSE(r.ak_satisfied);
  EXPECT_TRUE(r.hall_satisfied);
  EXPECT_TRUE(r.ozawa_satisfied);
  EXPECT_TRUE(r.new_satisfied);
  EXPECT_NEAR(r.margin(Relation::arthurs_kelly), -0.3, 1e-15);
  EXPECT_EQ(r.lhs(Relation::averaged_spread), r.lhs_new);
  EXPECT_EQ(r.satisfied(Relation::hall), r.hall_satisfied);
}

TEST(EvaluateRelationsTest, BoundaryCountsAsSatisfied) {
  RelationInputs in;
  in.eps_a = 1.0;
  in.eps_b = 0.5;
  in.c = 1.0;
  const RelationReport r = evaluate_relations(in);
  EXPECT_TRUE(r.ak_satisfied);
  EXPECT_DOUBLE_EQ(r.margin(Relation::arthurs_kelly), 0.0);
}

TEST(EvaluateRelationsTest, RejectsBadInputs) {
  RelationInputs in = sample_inputs();
  in.eps_b = -0.1;
  EXPECT_THROW(evaluate_relations(in), DomainError);
  in = sample_inputs();
  in.c = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(evaluate_relations(in), DomainError);
  in = sample_inputs();
  in.delta_a = std::numeric_limits<double>::infinity();
  EXPECT_THROW(evaluate_relations(in), DomainError);
}

TEST(EvaluateRelationsTest, Names) {
  EXPECT_EQ(to_string(Relation::arthurs_kelly), "ak");
  EXPECT_EQ(to_string(Relation::hall), "hall");
  EXPECT_EQ(to_string(Relation::ozawa), "ozawa");
  EXPECT_EQ(to_string(Relation::averaged_spread), "new");
}

TEST(GapWeightTest, Values) {
  EXPECT_DOUBLE_EQ(gap_weight(0.0), 0.0);
  EXPECT_DOUBLE_EQ(gap_weight(1.0), 0.0);
  EXPECT_NEAR(gap_weight(std::sqrt(0.5)), (std::sqrt(2.0) - 1.0) / 2.0, 1e-15);
  EXPECT_NEAR(gap_weight(0.6), 0.2, 1e-15);
  for (int i = 0; i <= 100; ++i) EXPECT_GE(gap_weight(i / 100.0), 0.0);
}

TEST(StrengthComparisonTest, NotApplicableWithoutOptimalEstimates) {
  const StrengthComparison s =
      strength_comparison(evaluate_relations(sample_inputs()), EstimateOptimality::none);
  EXPECT_FALSE(s.applicable);
  EXPECT_FALSE(s.holds());
}

TEST(StrengthComparisonTest, GapFormulaWithOptimalEstimates) {
  // Optimal estimates satisfy eps^2 + dEst^2 = d^2.
  RelationInputs in;
  in.eps_a = 0.6;
  in.delta_a = 1.0;
  in.delta_a_est = 0.8;
  in.eps_b = 0.28;
  in.delta_b = 0.5;
  in.delta_b_est = std::sqrt(0.25 - 0.28 * 0.28);
  in.c = 0.2;
  const StrengthComparison s = strength_comparison(evaluate_relations(in), EstimateOptimality::both);
  EXPECT_TRUE(s.applicable);
  EXPECT_TRUE(s.gap_checked);
  EXPECT_NEAR(s.hall_gap, s.predicted_gap, 1e-12);
  EXPECT_TRUE(s.holds());
}

TEST(ProofChainTest, RejectsNonCommutingEstimates) {
  const DensityMatrix rho = scenario::epr_state(0.3);
  const HermitianOperator x1 = qcore::tensor(qcore::pauli(Pauli::X), qcore::pauli(Pauli::I));
  const HermitianOperator y1 = qcore::tensor(qcore::pauli(Pauli::Y), qcore::pauli(Pauli::I));
  EXPECT_THROW(verify_proof_chain(x1, y1, x1, y1, rho), PreconditionError);
}

TEST(ProofChainTest, HoldsLinkByLink) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    sampling::Rng rng = sampling::trial_rng(41, i);
    const DensityMatrix rho = sampling::random_density_matrix(rng, 4);
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    const HermitianOperator a_est(
        qcore::kron(sampling::random_hermitian(rng, 2).matrix(), id2));
    const HermitianOperator b_est(
        qcore::kron(id2, sampling::random_hermitian(rng, 2).matrix()));
    const HermitianOperator a = sampling::random_hermitian(rng, 4);
    const HermitianOperator b = sampling::random_hermitian(rng, 4);
    const ChainReport chain = verify_proof_chain(a_est, b_est, a, b, rho);
    EXPECT_TRUE(chain.holds());
    EXPECT_LE(chain.identity_residual, 1e-10);
    EXPECT_NEAR(chain.schwarz_sum, 4.0 * chain.lhs_new, 1e-12);
    for (const ChainLink& link : chain.links) {
      EXPECT_LE(link.commutator_term, link.schwarz_bound + 1e-10) << link.label;
    }
  }
}

TEST(DisturbanceTest, IdealScenario) {
  const auto slide = scenario::slide_model(test::kRh, test::kRv);
  const DensityMatrix rho = scenario::epr_state(std::numbers::pi / 8);
  const auto w = qcore::BlochObservable::from_degrees(90, 180);
  const DisturbanceReport md =
      evaluate_md_relation(rho, slide, w, estimate::optimal_estimator(rho, w));
  EXPECT_NEAR(md.eta_b, slide.kappa(), 1e-12);
  EXPECT_NEAR(md.delta_b_disturbed, 1.0 - slide.kappa(), 1e-12);
  EXPECT_NEAR(md.eps_a, std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(md.bound, std::sqrt(0.5), 1e-12);
  EXPECT_TRUE(md.satisfied);
}

TEST(PropertyTest, UniversalRelationsHoldForRandomMeasurements) {
  // Direct operator evaluation on the dilated system with arbitrary values.
  for (std::uint64_t i = 0; i < 300; ++i) {
    sampling::Rng rng = sampling::trial_rng(42, i);
    const DensityMatrix rho = sampling::random_density_matrix(rng, 4);
    const sampling::SlideParameters sp = sampling::random_slide_parameters(rng);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    oracle::EprOracleConfig cfg;
    cfg.r_h = sp.r_h;
    cfg.r_v = sp.r_v;
    cfg.w = sampling::random_bloch(rng);
    cfg.f_plus = u(rng);
    cfg.f_minus = u(rng);
    cfg.g_plus = u(rng);
    cfg.g_minus = u(rng);
    const oracle::DilatedSystem sys = oracle::epr_dilated_system(rho, cfg);
    RelationInputs in;
    in.eps_a = oracle::direct_inaccuracy(sys, "A", "A_est");
    in.eps_b = oracle::direct_inaccuracy(sys, "B", "B_est");
    in.delta_a = qcore::spread(sys.get("A"), sys.state());
    in.delta_b = qcore::spread(sys.get("B"), sys.state());
    in.delta_a_est = qcore::spread(sys.get("A_est"), sys.state());
    in.delta_b_est = qcore::spread(sys.get("B_est"), sys.state());
    in.c = qcore::commutator_bound(sys.get("A"), sys.get("B"), sys.state());
    const RelationReport r = evaluate_relations(in);
    EXPECT_GE(r.margin(Relation::hall), -1e-9);
    EXPECT_GE(r.margin(Relation::ozawa), -1e-9);
    EXPECT_GE(r.margin(Relation::averaged_spread), -1e-9);
  }
}

TEST(PropertyTest, ReportSymmetryAndAverageIdentity) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    sampling::Rng rng = sampling::trial_rng(43, i);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    const RelationInputs in{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    RelationInputs swapped = in;
    std::swap(swapped.eps_a, swapped.eps_b);
    std::swap(swapped.delta_a, swapped.delta_b);
    std::swap(swapped.delta_a_est, swapped.delta_b_est);
    const RelationReport r = evaluate_relations(in);
    const RelationReport s = evaluate_relations(swapped);
    for (Relation rel : kAllRelations) EXPECT_NEAR(r.lhs(rel), s.lhs(rel), 1e-12);
    EXPECT_LE(r.lhs_new, 0.5 * (r.lhs_hall + r.lhs_ozawa) + in.eps_a * in.eps_b + 1e-12);
    EXPECT_NEAR(r.lhs_new + in.eps_a * in.eps_b, 0.5 * (r.lhs_hall + r.lhs_ozawa), 1e-12);
  }
}

}  // namespace
}  // namespace complementarity::relations

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

#include "complementarity/pipeline.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "complementarity/errors.hpp"
#include "test_support.hpp"

namespace complementarity::pipeline {
namespace {

using relations::Relation;

Analysis measured_analysis() {
  Analysis a(dataio::parse_distribution(test::read_data("measured_phi180.csv")));
  a.r_h = test::kRh;
  a.r_v = test::kRv;
  return a;
}

TEST(SimulateTest, IdealScenarioClosedForm) {
  const Simulation sim = epr_simulation(22.5, test::kRh, test::kRv, 90, 180);
  const RelationReport r = simulate(sim, EstimatorKind::optimal);
  const double kappa = scenario::slide_model(test::kRh, test::kRv).kappa();
  const double eps_x = std::sqrt(0.5);
  const double eps_y = std::sqrt(2.0 * kappa);
  EXPECT_NEAR(r.inputs.eps_a, eps_x, 1e-12);
  EXPECT_NEAR(r.inputs.eps_b, eps_y, 1e-12);
  EXPECT_NEAR(r.inputs.delta_a_est, eps_x, 1e-12);
  EXPECT_NEAR(r.inputs.delta_b_est, 1.0, 1e-12);
  EXPECT_NEAR(r.bound, std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(r.lhs_ak, eps_x * eps_y, 1e-12);
  EXPECT_NEAR(r.lhs_hall, eps_x * eps_y + eps_x + eps_x * eps_y, 1e-12);
  EXPECT_NEAR(r.lhs_ozawa, eps_x * eps_y + eps_x + eps_y, 1e-12);
  EXPECT_NEAR(r.lhs_new, eps_x + eps_y * (eps_x + 1.0) / 2.0, 1e-12);
  EXPECT_FALSE(r.ak_satisfied);
  EXPECT_TRUE(r.hall_satisfied && r.ozawa_satisfied && r.new_satisfied);
  EXPECT_EQ(r.scenario.estimator, "optimal");
  EXPECT_EQ(r.scenario.gamma_deg, 22.5);
}

TEST(SimulateTest, SimpleEstimator) {
  const RelationReport r =
      simulate(epr_simulation(22.5, test::kRh, test::kRv, 90, 180), EstimatorKind::simple);
  EXPECT_NEAR(r.inputs.eps_a * r.inputs.eps_a, 2.0 - std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(r.ak_satisfied);
  EXPECT_THROW(make_estimates(EstimatorKind::custom, epr_simulation(1, 0.1, 0.2, 0, 0).rho,
                              qcore::BlochObservable{}),
               DomainError);
}

TEST(AnalyzeTest, MeasuredDataWithSummaryValues) {
  Analysis a = measured_analysis();
  a.rho = dataio::parse_density_matrix(test::read_data("tomographic_state.csv"));
  a.overrides = {0.711, 0.998, 0.9998};
  const RelationReport opt = analyze(a, EstimatorKind::optimal);
  EXPECT_FALSE(opt.ak_satisfied);
  EXPECT_TRUE(opt.hall_satisfied && opt.ozawa_satisfied && opt.new_satisfied);
  EXPECT_DOUBLE_EQ(opt.bound, 0.711);
  EXPECT_LT(opt.lhs_ak, opt.lhs_new);
  EXPECT_LT(opt.lhs_new, opt.lhs_hall);
  EXPECT_LT(opt.lhs_new, opt.lhs_ozawa);
  EXPECT_EQ(opt.scenario.phi_deg, 180.0);

  const RelationReport simple = analyze(a, EstimatorKind::simple);
  EXPECT_NEAR(simple.inputs.eps_a, std::sqrt(0.665959070861512), 1e-12);
}

TEST(AnalyzeTest, MissingInputs) {
  Analysis a = measured_analysis();
  EXPECT_THROW(analyze(a, EstimatorKind::optimal), PreconditionError);
  EXPECT_THROW(analyze(a, EstimatorKind::simple), PreconditionError);
  a.overrides = {0.711, 0.998, 0.9998};
  EXPECT_NO_THROW(analyze(a, EstimatorKind::simple));

  std::array<double, 8> uniform;
  uniform.fill(0.125);
  Analysis no_w(scenario::JointDistribution(uniform, scenario::Provenance::measured));
  no_w.r_h = test::kRh;
  no_w.r_v = test::kRv;
  EXPECT_THROW(analyze(no_w, EstimatorKind::simple), PreconditionError);
}

TEST(SweepTest, OrderingAcrossAngles) {
  const Simulation base = epr_simulation(22.5, test::kRh, test::kRv, 90, 180);
  const std::vector<double> phis{135, 157.5, 180, 202.5, 225};
  const auto rows = sweep(base, phis, {EstimatorKind::simple, EstimatorKind::optimal});
  ASSERT_EQ(rows.size(), 10u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const dataio::SweepRow& row = rows[i];
    EXPECT_EQ(row.phi_deg, phis[i / 2]);
    EXPECT_EQ(row.report.scenario.estimator, i % 2 ? "optimal" : "simple");
    EXPECT_NEAR(row.dispersion_root, row.delta_x, 1e-9);
    EXPECT_LE(row.eps_x_opt, row.eps_x_simple + 1e-12);
    if (i % 2) {
      const RelationReport& r = row.report;
      EXPECT_LT(r.lhs_ak, r.bound);
      EXPECT_LE(r.lhs_new, r.lhs_hall);
      EXPECT_LE(r.lhs_new, r.lhs_ozawa);
      EXPECT_GE(r.lhs_new, r.bound);
    }
  }
  // Symmetric about 180 degrees.
  EXPECT_NEAR(rows[1].report.lhs_new, rows[9].report.lhs_new, 1e-12);
}

TEST(VerifyTest, SmallRunPassesAndIsDeterministic) {
  const VerifySummary s = verify({300, 7});
  EXPECT_TRUE(s.passed());
  EXPECT_GT(s.ak_violations(), 0u);
  EXPECT_EQ(s.violations[1] + s.violations[2] + s.violations[3], 0u);
  EXPECT_LT(s.oracle_max_diff, 1e-9);
  EXPECT_EQ(s.chain_trials, 600u);
  EXPECT_EQ(s.dispersion_trials, 100u);
  EXPECT_EQ(emit_verify(s, dataio::Format::json), emit_verify(verify({300, 7}), dataio::Format::json));
  EXPECT_NE(emit_verify(s, dataio::Format::json), emit_verify(verify({300, 8}), dataio::Format::json));
  const std::string csv = emit_verify(s, dataio::Format::csv);
  EXPECT_NE(csv.find("violations.new,0\n"), std::string::npos);
  EXPECT_NE(csv.find("passed,true\n"), std::string::npos);
}

TEST(VerifyTest, TrialsAreIndependentOfOrder) {
  const TrialResult late = run_trial(5, 17);
  run_trial(5, 3);
  const TrialResult again = run_trial(5, 17);
  EXPECT_EQ(late.report.lhs_new, again.report.lhs_new);
  EXPECT_EQ(late.kind, again.kind);
}

TEST(VerifyTest, EmptyRun) {
  const VerifySummary s = verify({0, 1});
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.worst_margin[0], 0.0);
}

}  // namespace
}  // namespace complementarity::pipeline

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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "complementarity/errors.hpp"
#include "complementarity/oracle.hpp"
#include "complementarity/sampling.hpp"
#include "json_io.hpp"

namespace complementarity::pipeline {

using qcore::HermitianOperator;
using qcore::Pauli;
using relations::ScenarioDescriptor;
using scenario::JointDistribution;
using scenario::SemiweakSlide;

namespace {

const HermitianOperator& x1() {
  static const HermitianOperator op = qcore::tensor(qcore::pauli(Pauli::X), qcore::pauli(Pauli::I));
  return op;
}

const HermitianOperator& y1() {
  static const HermitianOperator op = qcore::tensor(qcore::pauli(Pauli::Y), qcore::pauli(Pauli::I));
  return op;
}

double radians_to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

ScenarioDescriptor describe(const Simulation& sim, EstimatorKind kind) {
  ScenarioDescriptor d;
  d.state_source = sim.state_source;
  d.gamma_deg = sim.gamma_deg;
  d.r_h = sim.r_h;
  d.r_v = sim.r_v;
  d.theta_deg = sim.theta_deg;
  d.phi_deg = sim.phi_deg;
  d.estimator = std::string(estimate::to_string(kind));
  return d;
}

}  // namespace

Simulation epr_simulation(double gamma_deg, double r_h, double r_v, double theta_deg,
                          double phi_deg) {
  Simulation sim(scenario::epr_state(qcore::degrees_to_radians(gamma_deg)));
  sim.gamma_deg = gamma_deg;
  sim.r_h = r_h;
  sim.r_v = r_v;
  sim.theta_deg = theta_deg;
  sim.phi_deg = phi_deg;
  return sim;
}

EstimatePair make_estimates(EstimatorKind kind, const DensityMatrix& rho,
                            const BlochObservable& w) {
  switch (kind) {
    case EstimatorKind::simple:
      return {Estimator::simple(), Estimator::simple()};
    case EstimatorKind::optimal:
      return {estimate::optimal_estimator(rho, w), Estimator::simple()};
    case EstimatorKind::custom:
      break;
  }
  throw DomainError("custom estimates have no default construction");
}

EstimatePair fully_optimal_estimates(const DensityMatrix& rho, const SemiweakSlide& slide,
                                     const BlochObservable& w) {
  return {estimate::optimal_estimator(rho, w), estimate::optimal_y_estimator(rho, slide)};
}

RelationReport report_from_counts(const JointDistribution& dist, const SemiweakSlide& slide,
                                  const DensityMatrix& rho, const EstimatePair& est,
                                  ScenarioDescriptor descriptor) {
  relations::RelationInputs in;
  in.eps_a = estimate::inaccuracy_x(dist, slide, est.x).value;
  in.eps_b = estimate::inaccuracy_y(dist, slide, est.y).value;
  in.delta_a = qcore::spread(x1(), rho);
  in.delta_b = qcore::spread(y1(), rho);
  in.delta_a_est = estimate::estimator_spread(dist, est.x);
  in.delta_b_est = estimate::y_estimator_spread(dist, est.y);
  in.c = qcore::commutator_bound(x1(), y1(), rho);
  return relations::evaluate_relations(in, std::move(descriptor));
}

RelationReport simulate(const Simulation& sim, EstimatorKind kind) {
  const SemiweakSlide slide = scenario::slide_model(sim.r_h, sim.r_v);
  const BlochObservable w = sim.w();
  const JointDistribution dist = scenario::joint_distribution(sim.rho, slide, w);
  return report_from_counts(dist, slide, sim.rho, make_estimates(kind, sim.rho, w),
                            describe(sim, kind));
}

RelationReport analyze(const Analysis& analysis, EstimatorKind kind) {
  const JointDistribution& dist = analysis.dist;
  if (!dist.w_observable()) {
    throw PreconditionError("distribution has no W observable (theta/phi metadata missing)");
  }
  const BlochObservable w = *dist.w_observable();
  const SemiweakSlide slide = scenario::slide_model(analysis.r_h, analysis.r_v);
  const SummaryOverrides& ov = analysis.overrides;

  auto need_state = [&](const char* what) -> const DensityMatrix& {
    if (!analysis.rho) {
      throw PreconditionError(std::string(what) + " requires a density matrix");
    }
    return *analysis.rho;
  };

  EstimatePair est{Estimator::simple(), Estimator::simple()};
  if (kind == EstimatorKind::optimal) {
    est = make_estimates(kind, need_state("the optimal estimator"), w);
  } else if (kind != EstimatorKind::simple) {
    throw DomainError("analyze supports the simple and optimal estimators");
  }

  relations::RelationInputs in;
  in.eps_a = estimate::inaccuracy_x(dist, slide, est.x).value;
  in.eps_b = estimate::inaccuracy_y(dist, slide, est.y).value;
  in.delta_a_est = estimate::estimator_spread(dist, est.x);
  in.delta_b_est = estimate::y_estimator_spread(dist, est.y);
  in.delta_a = ov.delta_x ? *ov.delta_x : qcore::spread(x1(), need_state("delta X"));
  in.delta_b = ov.delta_y ? *ov.delta_y : qcore::spread(y1(), need_state("delta Y"));
  in.c = ov.c_half ? 2.0 * *ov.c_half
                   : qcore::commutator_bound(x1(), y1(), need_state("the commutator bound"));

  ScenarioDescriptor d;
  d.state_source = analysis.state_source;
  d.r_h = analysis.r_h;
  d.r_v = analysis.r_v;
  d.theta_deg = radians_to_degrees(w.theta);
  d.phi_deg = radians_to_degrees(w.phi);
  d.estimator = std::string(estimate::to_string(kind));
  return relations::evaluate_relations(in, std::move(d));
}

std::vector<dataio::SweepRow> sweep(const Simulation& base, const std::vector<double>& phis_deg,
                                    const std::vector<EstimatorKind>& kinds) {
  const SemiweakSlide slide = scenario::slide_model(base.r_h, base.r_v);
  const double delta_x = qcore::spread(x1(), base.rho);
  std::vector<dataio::SweepRow> rows;
  rows.reserve(phis_deg.size() * kinds.size());
  for (double phi : phis_deg) {
    Simulation sim = base;
    sim.phi_deg = phi;
    const BlochObservable w = sim.w();
    const JointDistribution dist = scenario::joint_distribution(sim.rho, slide, w);
    const Estimator opt = estimate::optimal_estimator(sim.rho, w);
    const double eps_simple = estimate::inaccuracy_x(dist, slide, Estimator::simple()).value;
    const double eps_opt = estimate::inaccuracy_x(dist, slide, opt).value;
    const double spread_opt = estimate::estimator_spread(dist, opt);
    for (EstimatorKind kind : kinds) {
      dataio::SweepRow row;
      row.theta_deg = sim.theta_deg;
      row.phi_deg = phi;
      row.report = report_from_counts(dist, slide, sim.rho, make_estimates(kind, sim.rho, w),
                                      describe(sim, kind));
      row.eps_x_simple = eps_simple;
      row.eps_x_opt = eps_opt;
      row.delta_x_opt = spread_opt;
      row.delta_x = delta_x;
      row.dispersion_root = std::sqrt(eps_opt * eps_opt + spread_opt * spread_opt);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

TrialResult run_trial(std::uint64_t seed, std::uint64_t index) {
  sampling::Rng rng = sampling::trial_rng(seed, index);
  const DensityMatrix rho = sampling::random_density_matrix(rng, 4);
  const sampling::SlideParameters sp = sampling::random_slide_parameters(rng);
  const BlochObservable w = sampling::random_bloch(rng);
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  const double f_plus = value(rng), f_minus = value(rng);
  const double g_plus = value(rng), g_minus = value(rng);

  TrialResult out;
  out.kind = std::array{EstimatorKind::simple, EstimatorKind::optimal,
                        EstimatorKind::custom}[index % 3];
  const SemiweakSlide slide = scenario::slide_model(sp.r_h, sp.r_v);
  EstimatePair est{Estimator::custom(f_plus, f_minus), Estimator::custom(g_plus, g_minus)};
  if (out.kind != EstimatorKind::custom) {
    try {
      est = make_estimates(out.kind, rho, w);
    } catch (const UndefinedEstimateError&) {
      out.fallback = true;
      out.kind = EstimatorKind::simple;
      est = make_estimates(out.kind, rho, w);
    }
  }

  const JointDistribution dist = scenario::joint_distribution(rho, slide, w);
  ScenarioDescriptor d;
  d.state_source = "random";
  d.r_h = sp.r_h;
  d.r_v = sp.r_v;
  d.estimator = std::string(estimate::to_string(out.kind));
  out.report = report_from_counts(dist, slide, rho, est, std::move(d));

  oracle::EprOracleConfig cfg;
  cfg.r_h = sp.r_h;
  cfg.r_v = sp.r_v;
  cfg.w = w;
  cfg.f_plus = est.x.plus();
  cfg.f_minus = est.x.minus();
  cfg.g_plus = est.y.plus();
  cfg.g_minus = est.y.minus();
  const oracle::DilatedSystem sys = oracle::epr_dilated_system(rho, cfg);
  out.oracle_diff =
      std::max(std::abs(out.report.inputs.eps_a - oracle::direct_inaccuracy(sys, "A", "A_est")),
               std::abs(out.report.inputs.eps_b - oracle::direct_inaccuracy(sys, "B", "B_est")));

  if (out.kind == EstimatorKind::optimal) {
    try {
      out.dispersion_residual = estimate::dispersion_check(rho, slide, w, est.x).residual();
    } catch (const NumericalError&) {
      out.dispersion_ok = false;
    }
    const bool ordered =
        relations::strength_comparison(out.report, relations::EstimateOptimality::a_only).holds();
    bool gap = false;
    try {
      ScenarioDescriptor full;
      full.estimator = "optimal_xy";
      const RelationReport both = report_from_counts(
          dist, slide, rho, fully_optimal_estimates(rho, slide, w), std::move(full));
      gap = relations::strength_comparison(both, relations::EstimateOptimality::both).holds();
    } catch (const UndefinedEstimateError&) {
      gap = false;
    }
    out.strength_ok = ordered && gap;
  }

  out.chain_dilated_ok = relations::verify_proof_chain(sys.get("A_est"), sys.get("B_est"),
                                                     sys.get("A"), sys.get("B"), sys.state())
                             .holds();

  // Generic commuting pair: estimates on different factors of a randomly
  // rotated tensor product.
  const qcore::ComplexMatrix v = sampling::random_unitary(rng, 4);
  const qcore::ComplexMatrix id2 = qcore::ComplexMatrix::Identity(2, 2);
  const qcore::ComplexMatrix h1 = sampling::random_hermitian(rng, 2, 2.0).matrix();
  const qcore::ComplexMatrix h2 = sampling::random_hermitian(rng, 2, 2.0).matrix();
  const HermitianOperator a_est(v * qcore::kron(h1, id2) * v.adjoint(), 1e-10);
  const HermitianOperator b_est(v * qcore::kron(id2, h2) * v.adjoint(), 1e-10);
  const HermitianOperator a = sampling::random_hermitian(rng, 4);
  const HermitianOperator b = sampling::random_hermitian(rng, 4);
  out.chain_generic_ok = relations::verify_proof_chain(a_est, b_est, a, b, rho).holds();

  const relations::DisturbanceReport md = relations::evaluate_md_relation(rho, slide, w, est.x);
  out.md_satisfied = md.satisfied;
  out.md_margin = md.lhs - md.bound;
  return out;
}

bool VerifySummary::passed() const {
  return violations[1] == 0 && violations[2] == 0 && violations[3] == 0 &&
         oracle_max_diff < 1e-9 && dispersion_failures == 0 && chain_failures == 0 &&
         strength_failures == 0 && md_violations == 0;
}

VerifySummary verify(const VerifyConfig& config) {
  VerifySummary s;
  s.trials = config.trials;
  s.seed = config.seed;
  s.worst_margin.fill(std::numeric_limits<double>::infinity());
  s.md_worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < config.trials; ++i) {
    const TrialResult t = run_trial(config.seed, i);
    for (std::size_t r = 0; r < relations::kAllRelations.size(); ++r) {
      const double margin = t.report.margin(relations::kAllRelations[r]);
      s.worst_margin[r] = std::min(s.worst_margin[r], margin);
      if (margin < kViolationMargin) ++s.violations[r];
    }
    s.oracle_max_diff = std::max(s.oracle_max_diff, t.oracle_diff);
    if (t.kind == EstimatorKind::optimal) {
      ++s.dispersion_trials;
      if (!t.dispersion_ok) {
        ++s.dispersion_failures;
      } else if (t.dispersion_residual) {
        s.dispersion_max_residual = std::max(s.dispersion_max_residual,
                                             std::abs(*t.dispersion_residual));
      }
    }
    s.chain_trials += 2;
    s.chain_failures += static_cast<std::size_t>(!t.chain_dilated_ok) +
                        static_cast<std::size_t>(!t.chain_generic_ok);
    if (t.strength_ok) {
      ++s.strength_trials;
      if (!*t.strength_ok) ++s.strength_failures;
    }
    if (!t.md_satisfied) ++s.md_violations;
    s.md_worst_margin = std::min(s.md_worst_margin, t.md_margin);
    if (t.fallback) ++s.estimator_fallbacks;
  }
  if (config.trials == 0) {
    s.worst_margin.fill(0.0);
    s.md_worst_margin = 0.0;
  }
  return s;
}

std::string emit_verify(const VerifySummary& s, dataio::Format format) {
  using dataio::detail::Json;
  using dataio::detail::rounded;
  Json j;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  Json violations, margins;
  for (std::size_t r = 0; r < relations::kAllRelations.size(); ++r) {
    const std::string name(relations::to_string(relations::kAllRelations[r]));
    violations[name] = s.violations[r];
    margins[name] = rounded(s.worst_margin[r]);
  }
  j["violations"] = violations;
  j["worst_margin"] = margins;
  j["oracle_max_abs_diff"] = rounded(s.oracle_max_diff);
  j["dispersion"] = {{"trials", s.dispersion_trials},
                     {"failures", s.dispersion_failures},
                     {"max_abs_residual", rounded(s.dispersion_max_residual)}};
  j["chain"] = {{"trials", s.chain_trials}, {"failures", s.chain_failures}};
  j["strength"] = {{"trials", s.strength_trials}, {"failures", s.strength_failures}};
  j["md"] = {{"violations", s.md_violations}, {"worst_margin", rounded(s.md_worst_margin)}};
  j["estimator_fallbacks"] = s.estimator_fallbacks;
  j["passed"] = s.passed();
  if (format == dataio::Format::json) return j.dump(2) + "\n";

  // Flatten nested objects into dotted keys.
  std::string out = "key,value\n";
  auto scalar = [](const Json& v) {
    if (v.is_number_float()) return dataio::format_number(v.get<double>());
    return v.dump();
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) out += key + "." + sub + "," + scalar(v) + "\n";
    } else {
      out += key + "," + scalar(value) + "\n";
    }
  }
  return out;
}

}  // namespace complementarity::pipeline

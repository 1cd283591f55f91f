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

#include <cmath>
#include <sstream>

#include "complementarity/errors.hpp"

namespace complementarity::relations {

using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::HermitianOperator;
using qcore::Pauli;
using qcore::pauli;

namespace {

constexpr double kChainSlack = 1e-10;
constexpr double kGapTol = 1e-9;

void require_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    std::ostringstream os;
    os << name << " = " << v << " must be a finite non-negative number";
    throw DomainError(os.str());
  }
}

// sqrt(<(R - shift)^2>), clamping rounding noise.
double rms_about(const HermitianOperator& r, double shift, const DensityMatrix& rho) {
  const HermitianOperator centred =
      r - shift * HermitianOperator::identity(r.dim());
  return std::sqrt(std::max(0.0, qcore::expectation(centred.squared(), rho)));
}

ChainLink make_link(std::string label, const HermitianOperator& r, double r_shift,
                    const HermitianOperator& s, double s_shift, const DensityMatrix& rho) {
  ChainLink link;
  link.label = std::move(label);
  link.commutator_term =
      std::abs(qcore::trace_product(qcore::commutator(r.matrix(), s.matrix()), rho));
  link.rms_r = rms_about(r, r_shift, rho);
  link.rms_s = rms_about(s, s_shift, rho);
  link.schwarz_bound = 2.0 * link.rms_r * link.rms_s;
  link.holds = link.commutator_term <= link.schwarz_bound + kChainSlack;
  return link;
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::arthurs_kelly:
      return "ak";
    case Relation::hall:
      return "hall";
    case Relation::ozawa:
      return "ozawa";
    case Relation::averaged_spread:
      return "new";
  }
  return "unknown";
}

double RelationReport::lhs(Relation r) const {
  switch (r) {
    case Relation::arthurs_kelly:
      return lhs_ak;
    case Relation::hall:
      return lhs_hall;
    case Relation::ozawa:
      return lhs_ozawa;
    case Relation::averaged_spread:
      return lhs_new;
  }
  return 0.0;
}

bool RelationReport::satisfied(Relation r) const {
  switch (r) {
    case Relation::arthurs_kelly:
      return ak_satisfied;
    case Relation::hall:
      return hall_satisfied;
    case Relation::ozawa:
      return ozawa_satisfied;
    case Relation::averaged_spread:
      return new_satisfied;
  }
  return false;
}

RelationReport evaluate_relations(const RelationInputs& in, ScenarioDescriptor scenario) {
  require_nonnegative(in.eps_a, "eps_a");
  require_nonnegative(in.eps_b, "eps_b");
  require_nonnegative(in.delta_a, "delta_a");
  require_nonnegative(in.delta_b, "delta_b");
  require_nonnegative(in.delta_a_est, "delta_a_est");
  require_nonnegative(in.delta_b_est, "delta_b_est");
  require_nonnegative(in.c, "c");

  RelationReport rep;
  rep.inputs = in;
  rep.scenario = std::move(scenario);
  rep.bound = in.c / 2.0;
  rep.lhs_ak = in.eps_a * in.eps_b;
  rep.lhs_hall = rep.lhs_ak + in.eps_a * in.delta_b_est + in.delta_a_est * in.eps_b;
  rep.lhs_ozawa = rep.lhs_ak + in.eps_a * in.delta_b + in.delta_a * in.eps_b;
  rep.lhs_new = in.eps_a * (in.delta_b_est + in.delta_b) / 2.0 +
                in.eps_b * (in.delta_a_est + in.delta_a) / 2.0;
  auto ok = [&](double lhs) { return lhs >= rep.bound - kSatisfactionSlack; };
  rep.ak_satisfied = ok(rep.lhs_ak);
  rep.hall_satisfied = ok(rep.lhs_hall);
  rep.ozawa_satisfied = ok(rep.lhs_ozawa);
  rep.new_satisfied = ok(rep.lhs_new);
  return rep;
}

ChainReport verify_proof_chain(const HermitianOperator& a_est, const HermitianOperator& b_est,
                             const HermitianOperator& a, const HermitianOperator& b,
                             const DensityMatrix& rho) {
  const auto dim = rho.dim();
  if (a_est.dim() != dim || b_est.dim() != dim || a.dim() != dim || b.dim() != dim) {
    throw DimensionError("verify_proof_chain: all operators must act on the state's space");
  }
  const ComplexMatrix est_comm = qcore::commutator(a_est.matrix(), b_est.matrix());
  const double est_comm_norm = est_comm.cwiseAbs().maxCoeff();
  if (est_comm_norm > 1e-10) {
    std::ostringstream os;
    os << "estimators do not commute (max |[A_est, B_est]| = " << est_comm_norm << ")";
    throw PreconditionError(os.str());
  }

  ChainReport rep;
  const ComplexMatrix ab = qcore::commutator(a.matrix(), b.matrix());
  const ComplexMatrix split =
      qcore::commutator((a - a_est).matrix(), (b + b_est).matrix()) +
      qcore::commutator((a + a_est).matrix(), (b - b_est).matrix());
  const double scale = std::max({1.0, a.matrix().cwiseAbs().maxCoeff(),
                                 b.matrix().cwiseAbs().maxCoeff(),
                                 a_est.matrix().cwiseAbs().maxCoeff(),
                                 b_est.matrix().cwiseAbs().maxCoeff()});
  rep.identity_residual = (2.0 * ab - split).cwiseAbs().maxCoeff();
  rep.identity_holds = rep.identity_residual <= 1e-12 * scale * scale;

  rep.c = std::abs(qcore::trace_product(ab, rho));
  const double mean_a = qcore::expectation(a, rho);
  const double mean_b = qcore::expectation(b, rho);
  const double mean_a_est = qcore::expectation(a_est, rho);
  const double mean_b_est = qcore::expectation(b_est, rho);
  const HermitianOperator a_err = a - a_est;
  const HermitianOperator b_err = b - b_est;

  rep.links = {
      make_link("[A - A_est, B]", a_err, 0.0, b, mean_b, rho),
      make_link("[A - A_est, B_est]", a_err, 0.0, b_est, mean_b_est, rho),
      make_link("[A, B - B_est]", a, mean_a, b_err, 0.0, rho),
      make_link("[A_est, B - B_est]", a_est, mean_a_est, b_err, 0.0, rho),
  };
  rep.schwarz_holds = true;
  for (const ChainLink& link : rep.links) {
    rep.triangle_sum += link.commutator_term;
    rep.schwarz_sum += link.schwarz_bound;
    rep.schwarz_holds = rep.schwarz_holds && link.holds;
  }
  rep.triangle_holds = 2.0 * rep.c <= rep.triangle_sum + kChainSlack;
  rep.lhs_new = rep.schwarz_sum / 4.0;
  rep.bound_holds = rep.c / 2.0 <= rep.lhs_new + kChainSlack;
  return rep;
}

double gap_weight(double x) { return 0.5 * (std::sqrt(std::max(0.0, 1.0 - x * x)) - (1.0 - x)); }

StrengthComparison strength_comparison(const RelationReport& report,
                                       EstimateOptimality optimality) {
  StrengthComparison out;
  if (optimality == EstimateOptimality::none) return out;
  out.applicable = true;
  out.new_below_hall = report.lhs_new <= report.lhs_hall + kGapTol;
  out.new_below_ozawa = report.lhs_new <= report.lhs_ozawa + kGapTol;
  out.hall_gap = report.lhs_hall - report.lhs_new;

  const RelationInputs& in = report.inputs;
  const double alpha = in.delta_a > 0.0 ? in.eps_a / in.delta_a : 0.0;
  const double beta = in.delta_b > 0.0 ? in.eps_b / in.delta_b : 0.0;
  out.predicted_gap =
      in.eps_a * in.delta_b * gap_weight(beta) + in.delta_a * in.eps_b * gap_weight(alpha);
  if (optimality == EstimateOptimality::both) {
    out.gap_checked = true;
    out.gap_matches = std::abs(out.hall_gap - out.predicted_gap) <= kGapTol;
  }
  return out;
}

DisturbanceReport evaluate_md_relation(const DensityMatrix& rho,
                                       const scenario::SemiweakSlide& slide,
                                       const qcore::BlochObservable& w,
                                       const estimate::Estimator& est) {
  const HermitianOperator id = pauli(Pauli::I);
  const HermitianOperator x = qcore::tensor(pauli(Pauli::X), id);
  const HermitianOperator y = qcore::tensor(pauli(Pauli::Y), id);
  const HermitianOperator y_disturbed =
      qcore::tensor(scenario::disturbed_observable(slide, pauli(Pauli::Y)), id);

  const scenario::JointDistribution dist = scenario::joint_distribution(rho, slide, w);

  DisturbanceReport rep;
  rep.eps_a = estimate::inaccuracy_x(dist, slide, est).value;
  rep.delta_a_est = estimate::estimator_spread(dist, est);
  rep.delta_a = qcore::spread(x, rho);
  rep.delta_b = qcore::spread(y, rho);
  rep.delta_b_disturbed = qcore::spread(y_disturbed, rho);
  rep.eta_b = rms_about(y_disturbed - y, 0.0, rho);
  rep.c = qcore::commutator_bound(x, y, rho);
  rep.bound = rep.c / 2.0;
  rep.lhs = rep.eps_a * (rep.delta_b + rep.delta_b_disturbed) / 2.0 +
            rep.eta_b * (rep.delta_a_est + rep.delta_a) / 2.0;
  rep.satisfied = rep.lhs >= rep.bound - kSatisfactionSlack;
  return rep;
}

}  // namespace complementarity::relations
